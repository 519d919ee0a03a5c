//! Domino Robinson–Schensted insertion of rank `r`.
//!
//! Starting from the staircase core, the entries `w_1, ..., w_n` of a signed
//! permutation are inserted in turn: a positive entry enters as a horizontal
//! domino at the end of the first row, a negative one as a vertical domino at
//! the foot of the first column, and dominoes with larger labels are bumped.
//! The insertion tableau carries the absolute values; the recording tableau
//! carries, with label `k`, the two squares added at step `k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Square;
use crate::perm::SignedPermutation;
use crate::tableau::{domino, is_horizontal, validate, DominoTableau};

/// A same-shape pair `(left, right)` = `(insertion, recording)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableauPair {
    pub left: DominoTableau,
    pub right: DominoTableau,
}

/// State after one insertion step, for `--trace` dumps.
#[derive(Clone, Debug, Serialize)]
pub struct InsertionStep {
    pub step: usize,
    pub entry: i32,
    pub added: [[usize; 2]; 2],
    pub insertion: DominoTableau,
    pub recording: DominoTableau,
}

/// Row lengths of a partially built diagram.
struct Rows(Vec<usize>);

impl Rows {
    fn of(map: &BTreeMap<u32, [Square; 2]>, r: usize) -> Self {
        let mut rows: Vec<usize> = (1..=r).rev().collect();
        for d in map.values() {
            for &(i, _) in d {
                if rows.len() < i {
                    rows.resize(i, 0);
                }
                rows[i - 1] += 1;
            }
        }
        Rows(rows)
    }

    fn row(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    fn column(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&len| len >= j).count()
    }

    fn add(&mut self, d: &[Square; 2]) {
        for &(i, _) in d {
            if self.0.len() < i {
                self.0.resize(i, 0);
            }
            self.0[i - 1] += 1;
        }
    }

    fn horizontal_at_end_of_row(&self, i: usize) -> [Square; 2] {
        let len = self.row(i);
        [(i, len + 1), (i, len + 2)]
    }

    fn vertical_at_foot_of_column(&self, j: usize) -> [Square; 2] {
        let len = self.column(j);
        [(len + 1, j), (len + 2, j)]
    }

    /// A domino occupying the last two squares of row `i` or column `j`.
    fn horizontal_last_in_row(&self, i: usize) -> [Square; 2] {
        let len = self.row(i);
        [(i, len - 1), (i, len)]
    }

    fn vertical_last_in_column(&self, j: usize) -> [Square; 2] {
        let len = self.column(j);
        [(len - 1, j), (len, j)]
    }
}

fn overlap(a: &[Square; 2], b: &[Square; 2]) -> Vec<Square> {
    a.iter().copied().filter(|s| b.contains(s)).collect()
}

/// The fourth corner of the 2x2 box spanned by an L of three squares with
/// corner `a`.
fn complete_box(a: Square, b: Square, c: Square) -> Square {
    ((b.0 + c.0) - a.0, (b.1 + c.1) - a.1)
}

/// Inserts the signed entry `x` (|x| not yet present) into `t`; returns the
/// new tableau and the two squares added to the shape.
pub fn insert(t: &DominoTableau, x: i32) -> Result<(DominoTableau, [Square; 2])> {
    let v = x.unsigned_abs();
    if v == 0 || t.domino(v).is_some() {
        return Err(Error::InvalidPermutation(format!(
            "cannot insert {} into a tableau already holding it",
            x
        )));
    }
    let r = t.rank();
    let mut map: BTreeMap<u32, [Square; 2]> =
        t.dominoes().range(..v).map(|(&l, &d)| (l, d)).collect();
    let mut rows = Rows::of(&map, r);
    let placed = if x > 0 {
        rows.horizontal_at_end_of_row(1)
    } else {
        rows.vertical_at_foot_of_column(1)
    };
    rows.add(&placed);
    map.insert(v, placed);
    let mut added = placed;
    for (&l, d) in t.dominoes().range(v + 1..) {
        let common = overlap(d, &added);
        let moved = match common.len() {
            0 => *d,
            2 => {
                let bumped = if is_horizontal(d) {
                    rows.horizontal_at_end_of_row(d[0].0 + 1)
                } else {
                    rows.vertical_at_foot_of_column(d[0].1 + 1)
                };
                added = bumped;
                bumped
            }
            _ => {
                let a = common[0];
                let b = if d[0] == a { d[1] } else { d[0] };
                let c = if added[0] == a { added[1] } else { added[0] };
                let e = complete_box(a, b, c);
                added = domino(c, e);
                domino(b, e)
            }
        };
        rows.add(&moved);
        map.insert(l, moved);
    }
    let out = DominoTableau::from_map(r, map)?;
    Ok((out, added))
}

/// Reverses [`insert`]: given the tableau after insertion and the squares that
/// were added, recovers the previous tableau and the inserted signed entry.
pub fn uninsert(t: &DominoTableau, added: [Square; 2]) -> Result<(DominoTableau, i32)> {
    let r = t.rank();
    let mut map = t.dominoes().clone();
    let mut added = domino(added[0], added[1]);
    let labels: Vec<u32> = t.labels().rev().collect();
    for l in labels {
        let d = map[&l];
        let common = overlap(&d, &added);
        match common.len() {
            0 => {}
            2 => {
                let horizontal = is_horizontal(&d);
                if (horizontal && d[0].0 == 1) || (!horizontal && d[0].1 == 1) {
                    map.remove(&l);
                    let prev = DominoTableau::from_map(r, map)?;
                    let x = if horizontal { l as i32 } else { -(l as i32) };
                    return Ok((prev, x));
                }
                let below: BTreeMap<u32, [Square; 2]> =
                    map.range(..l).map(|(&k, &e)| (k, e)).collect();
                let rows = Rows::of(&below, r);
                let old = if horizontal {
                    rows.horizontal_last_in_row(d[0].0 - 1)
                } else {
                    rows.vertical_last_in_column(d[0].1 - 1)
                };
                map.insert(l, old);
                added = old;
            }
            _ => {
                let e = common[0];
                let b = if d[0] == e { d[1] } else { d[0] };
                let c = if added[0] == e { added[1] } else { added[0] };
                let a = complete_box(e, b, c);
                map.insert(l, domino(a, b));
                added = domino(a, c);
            }
        }
    }
    Err(Error::InvalidTableau(
        "reverse bumping did not terminate at the first row or column".into(),
    ))
}

/// Runs the insertion and returns every intermediate state.
pub fn g_r_trace(w: &SignedPermutation, r: usize) -> Result<Vec<InsertionStep>> {
    let mut p = DominoTableau::core(r);
    let mut q: BTreeMap<u32, [Square; 2]> = BTreeMap::new();
    let mut steps = Vec::with_capacity(w.n());
    for (k, &x) in w.window().iter().enumerate() {
        let (next, added) = insert(&p, x)?;
        p = next;
        q.insert(k as u32 + 1, added);
        steps.push(InsertionStep {
            step: k + 1,
            entry: x,
            added: [[added[0].0, added[0].1], [added[1].0, added[1].1]],
            insertion: p.clone(),
            recording: DominoTableau::from_map(r, q.clone())?,
        });
    }
    Ok(steps)
}

/// The generalized Robinson–Schensted map `G_r`.
pub fn g_r(w: &SignedPermutation, r: usize) -> TableauPair {
    let mut p = DominoTableau::core(r);
    let mut q: BTreeMap<u32, [Square; 2]> = BTreeMap::new();
    for (k, &x) in w.window().iter().enumerate() {
        let (next, added) = insert(&p, x).expect("window entries are distinct");
        p = next;
        q.insert(k as u32 + 1, added);
    }
    let right = DominoTableau::from_map(r, q).expect("recording squares tile the shape");
    TableauPair { left: p, right }
}

/// Right (recording) tableau of `w`.
pub fn right_tableau(w: &SignedPermutation, r: usize) -> DominoTableau {
    g_r(w, r).right
}

/// Inverse of [`g_r`] on same-shape pairs of standard tableaux.
pub fn g_r_inverse(pair: &TableauPair) -> Result<SignedPermutation> {
    let (s, t) = (&pair.left, &pair.right);
    if s.rank() != t.rank() {
        return Err(Error::RankMismatch {
            expected: s.rank(),
            found: t.rank(),
        });
    }
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", s.shape(), t.shape())));
    }
    if !validate(s) || !validate(t) {
        return Err(Error::InvalidTableau("pair contains a non-standard tableau".into()));
    }
    let n = t.len();
    let mut p = s.clone();
    let mut window = vec![0; n];
    for k in (1..=n as u32).rev() {
        let added = t.domino(k).expect("standard tableau has all labels");
        let (prev, x) = uninsert(&p, added)?;
        window[k as usize - 1] = x;
        p = prev;
    }
    SignedPermutation::new(window)
}
