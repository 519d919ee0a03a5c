//! Cycles of a domino tableau and the moving-through map.
//!
//! Each domino `D(l)` has one fixed square `F` and one variable square `V`.
//! Moving `D(l)` keeps `F` and swings the variable half to the other side of
//! `F`, to the unique position compatible with the labels diagonally next to
//! `F`. The new variable square either lies outside the diagram or inside a
//! domino `D(m)`; following `l -> m` splits the labels into cycles.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Square;
use crate::tableau::{domino, in_core, is_variable, validate, DominoTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    Closed,
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    pub labels: BTreeSet<u32>,
    pub kind: CycleKind,
    pub core_open: bool,
    /// Square removed from the shape by moving through an open cycle.
    pub s_b: Option<Square>,
    /// Square added to the shape by moving through an open cycle.
    pub s_f: Option<Square>,
}

impl Cycle {
    pub fn is_open(&self) -> bool {
        self.kind == CycleKind::Open
    }

    /// Open and not core-open.
    pub fn is_non_core_open(&self) -> bool {
        self.is_open() && !self.core_open
    }
}

/// A minimal group of open cycles of a same-shape pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedCycle {
    pub cycles_in_t: Vec<Cycle>,
    pub cycles_in_t2: Vec<Cycle>,
}

impl ExtendedCycle {
    pub fn is_core(&self) -> bool {
        self.cycles_in_t
            .iter()
            .chain(&self.cycles_in_t2)
            .any(|c| c.core_open)
    }
}

fn split(t: &DominoTableau, d: [Square; 2]) -> (Square, Square) {
    if is_variable(d[0], t.rank()) {
        (d[1], d[0])
    } else {
        (d[0], d[1])
    }
}

/// The moved domino `D'(l)` as `(fixed, new variable square)`.
fn moved(t: &DominoTableau, label: u32) -> (Square, Square) {
    let (f, v) = split(t, t.domino(label).expect("label present"));
    let (i, j) = f;
    if v.0 > i || v.1 < j {
        // variable half below or left of F: goes right or up
        let ne = t.boundary_label(i - 1, j + 1);
        if label > ne {
            (f, (i, j + 1))
        } else {
            (f, (i - 1, j))
        }
    } else {
        let sw = t.boundary_label(i + 1, j - 1);
        if label > sw {
            (f, (i + 1, j))
        } else {
            (f, (i, j - 1))
        }
    }
}

/// The cycles of `t`, ordered by their smallest label.
pub fn cycles(t: &DominoTableau) -> Vec<Cycle> {
    let r = t.rank();
    let labels: Vec<u32> = t.labels().collect();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let mut uf = UnionFind::<usize>::new(labels.len());
    let mut new_var: Vec<Square> = Vec::with_capacity(labels.len());
    let mut hit: BTreeSet<Square> = BTreeSet::new();
    for &l in &labels {
        let (_, v2) = moved(t, l);
        let fresh = hit.insert(v2);
        debug_assert!(fresh, "two dominoes move onto the same square");
        if let Some(m) = t.label_at(v2).filter(|&m| m != 0) {
            uf.union(index[&l], index[&m]);
        }
        new_var.push(v2);
    }
    let mut groups: BTreeMap<usize, BTreeSet<u32>> = BTreeMap::new();
    for (k, &l) in labels.iter().enumerate() {
        groups.entry(uf.find(k)).or_default().insert(l);
    }
    let mut out: Vec<Cycle> = groups
        .into_values()
        .map(|set| {
            let mut s_b = None;
            let mut s_f = None;
            for &l in &set {
                let (_, v) = split(t, t.domino(l).unwrap());
                if !hit.contains(&v) {
                    s_b = Some(v);
                }
                let v2 = new_var[index[&l]];
                if t.label_at(v2).is_none() {
                    s_f = Some(v2);
                }
            }
            let kind = if s_b.is_some() {
                CycleKind::Open
            } else {
                CycleKind::Closed
            };
            let core_open = s_b.is_some_and(|(i, j)| i + j == r + 2);
            Cycle {
                labels: set,
                kind,
                core_open,
                s_b,
                s_f,
            }
        })
        .collect();
    out.sort_by_key(|c| *c.labels.iter().next().unwrap());
    out
}

/// Non-core open cycles.
pub fn non_core_open_cycles(t: &DominoTableau) -> Vec<Cycle> {
    cycles(t).into_iter().filter(Cycle::is_non_core_open).collect()
}

/// The cycle of `t` with exactly the given label set.
pub fn cycle_with_labels(t: &DominoTableau, labels: &BTreeSet<u32>) -> Option<Cycle> {
    cycles(t).into_iter().find(|c| &c.labels == labels)
}

fn apply_move(t: &DominoTableau, c: &Cycle) -> Result<DominoTableau> {
    let repl: BTreeMap<u32, [Square; 2]> = c
        .labels
        .iter()
        .map(|&l| {
            let (f, v2) = moved(t, l);
            (l, domino(f, v2))
        })
        .collect();
    let out = t.with_dominoes_replaced(&repl)?;
    debug_assert!(validate(&out));
    Ok(out)
}

/// `MT(T, c)`.
pub fn move_through(t: &DominoTableau, c: &Cycle) -> Result<DominoTableau> {
    if !cycles(t).contains(c) {
        return Err(Error::NotACycle(format!("{:?}", c.labels)));
    }
    if c.core_open {
        return Err(Error::UnmovableCycle(format!(
            "{:?} begins next to the core",
            c.labels
        )));
    }
    apply_move(t, c)
}

/// Moves through each cycle of `set` in turn, locating every cycle in the
/// current tableau by its label set.
pub fn move_through_set(t: &DominoTableau, set: &[Cycle]) -> Result<DominoTableau> {
    let here = cycles(t);
    for c in set {
        if !here.contains(c) {
            return Err(Error::NotACycle(format!("{:?}", c.labels)));
        }
        if !c.is_non_core_open() {
            return Err(Error::UnmovableCycle(format!(
                "{:?} is closed or core-open",
                c.labels
            )));
        }
    }
    let mut cur = t.clone();
    for c in set {
        let c2 = cycle_with_labels(&cur, &c.labels).ok_or_else(|| {
            Error::NotACycle(format!("{:?} does not survive earlier moves", c.labels))
        })?;
        cur = move_through(&cur, &c2)?;
    }
    Ok(cur)
}

/// Every tableau `MT(T, C)` for `C` a subset of the non-core open cycles,
/// indexed by the bitmask of `C` over [`non_core_open_cycles`].
pub fn orbit(t: &DominoTableau) -> Vec<DominoTableau> {
    let oc = non_core_open_cycles(t);
    (0..1usize << oc.len())
        .map(|mask| {
            let chosen: Vec<Cycle> = oc
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect();
            move_through_set(t, &chosen).expect("non-core open cycles are movable")
        })
        .collect()
}

/// Groups the open cycles of a same-shape pair into extended open cycles.
pub fn extended_open_cycles(t: &DominoTableau, t2: &DominoTableau) -> Result<Vec<ExtendedCycle>> {
    if t.rank() != t2.rank() {
        return Err(Error::RankMismatch {
            expected: t.rank(),
            found: t2.rank(),
        });
    }
    if t.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape(), t2.shape())));
    }
    let a: Vec<Cycle> = cycles(t).into_iter().filter(Cycle::is_open).collect();
    let b: Vec<Cycle> = cycles(t2).into_iter().filter(Cycle::is_open).collect();
    let mut uf = UnionFind::<usize>::new(a.len() + b.len());
    for (x, ca) in a.iter().enumerate() {
        for (y, cb) in b.iter().enumerate() {
            if ca.s_b == cb.s_b || ca.s_f == cb.s_f {
                uf.union(x, a.len() + y);
            }
        }
    }
    let mut groups: BTreeMap<usize, ExtendedCycle> = BTreeMap::new();
    for (x, c) in a.iter().enumerate() {
        groups
            .entry(uf.find(x))
            .or_insert_with(|| ExtendedCycle {
                cycles_in_t: Vec::new(),
                cycles_in_t2: Vec::new(),
            })
            .cycles_in_t
            .push(c.clone());
    }
    for (y, c) in b.iter().enumerate() {
        groups
            .entry(uf.find(a.len() + y))
            .or_insert_with(|| ExtendedCycle {
                cycles_in_t: Vec::new(),
                cycles_in_t2: Vec::new(),
            })
            .cycles_in_t2
            .push(c.clone());
    }
    let mut out: Vec<ExtendedCycle> = groups.into_values().collect();
    out.sort_by(|x, y| {
        let key = |e: &ExtendedCycle| {
            e.cycles_in_t
                .iter()
                .chain(&e.cycles_in_t2)
                .filter_map(|c| c.s_b)
                .min()
        };
        key(x).cmp(&key(y))
    });
    Ok(out)
}

/// Non-core extended open cycles of a same-shape pair.
pub fn non_core_extended_count(t: &DominoTableau, t2: &DominoTableau) -> Result<usize> {
    Ok(extended_open_cycles(t, t2)?
        .iter()
        .filter(|e| !e.is_core())
        .count())
}

/// True iff `s` shares an edge with a core square of rank `r`.
pub fn touches_core(s: Square, r: usize) -> bool {
    let (i, j) = s;
    (i > 1 && in_core((i - 1, j), r)) || (j > 1 && in_core((i, j - 1), r))
}
