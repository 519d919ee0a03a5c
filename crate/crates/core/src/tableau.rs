//! Domino tableaux of arbitrary rank.
//!
//! A tableau of rank `r` covers a Young diagram whose staircase core of rank
//! `r` is left unlabeled (label 0); the remaining squares are tiled by
//! dominoes carrying distinct positive labels.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{rank_and_core, Partition, Square};

/// Sentinel for squares below or to the right of the diagram.
pub const INFINITY: u32 = u32::MAX;

/// True iff `(i, j)` is variable for rank `r`, i.e. `i + j ≡ r (mod 2)`.
pub fn is_variable((i, j): Square, r: usize) -> bool {
    (i + j) % 2 == r % 2
}

/// True iff `(i, j)` lies in the staircase core of rank `r`.
pub fn in_core((i, j): Square, r: usize) -> bool {
    i >= 1 && j >= 1 && i + j <= r + 1
}

pub(crate) fn adjacent(a: Square, b: Square) -> bool {
    (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1)
}

/// Normalizes a domino so that its squares are in lexicographic order.
pub(crate) fn domino(a: Square, b: Square) -> [Square; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

pub(crate) fn is_horizontal(d: &[Square; 2]) -> bool {
    d[0].0 == d[1].0
}

/// A domino tableau. The label grid is authoritative; the label map is kept
/// in sync with it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoTableau {
    rank: usize,
    shape: Partition,
    grid: Vec<Vec<u32>>,
    dominoes: BTreeMap<u32, [Square; 2]>,
}

impl DominoTableau {
    /// The tableau with no dominoes on the rank-`r` core.
    pub fn core(r: usize) -> Self {
        let shape = Partition::staircase(r);
        let grid = shape.parts().iter().map(|&len| vec![0; len]).collect();
        DominoTableau {
            rank: r,
            shape,
            grid,
            dominoes: BTreeMap::new(),
        }
    }

    /// Builds a tableau from its dominoes. Checks that core and dominoes tile
    /// a Young diagram; does not check monotonicity (see [`validate`]).
    pub fn from_dominoes<I>(r: usize, dominoes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, [Square; 2])>,
    {
        let mut map = BTreeMap::new();
        for (label, [a, b]) in dominoes {
            if label == 0 {
                return Err(Error::InvalidTableau("label 0 is reserved for the core".into()));
            }
            if !adjacent(a, b) || a.0 == 0 || a.1 == 0 || b.0 == 0 || b.1 == 0 {
                return Err(Error::InvalidTableau(format!(
                    "domino {} squares {:?} {:?} are not adjacent",
                    label, a, b
                )));
            }
            if map.insert(label, domino(a, b)).is_some() {
                return Err(Error::InvalidTableau(format!("label {} repeated", label)));
            }
        }
        Self::from_map(r, map)
    }

    pub(crate) fn from_map(r: usize, dominoes: BTreeMap<u32, [Square; 2]>) -> Result<Self> {
        let mut rows: Vec<Vec<Option<u32>>> = Partition::staircase(r)
            .parts()
            .iter()
            .map(|&len| vec![Some(0); len])
            .collect();
        for (&label, d) in &dominoes {
            for &(i, j) in d {
                if in_core((i, j), r) {
                    return Err(Error::InvalidTableau(format!(
                        "domino {} covers core square ({},{})",
                        label, i, j
                    )));
                }
                if rows.len() < i {
                    rows.resize(i, Vec::new());
                }
                let row = &mut rows[i - 1];
                if row.len() < j {
                    row.resize(j, None);
                }
                if row[j - 1].is_some() {
                    return Err(Error::InvalidTableau(format!(
                        "square ({},{}) covered twice",
                        i, j
                    )));
                }
                row[j - 1] = Some(label);
            }
        }
        let mut grid = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            let row: Option<Vec<u32>> = row.into_iter().collect();
            match row {
                Some(r) => grid.push(r),
                None => {
                    return Err(Error::InvalidTableau(format!(
                        "row {} has a gap",
                        i + 1
                    )))
                }
            }
        }
        while grid.last().is_some_and(|r| r.is_empty()) {
            grid.pop();
        }
        let shape = Partition::new(grid.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidTableau("squares do not form a Young diagram".into()))?;
        if grid.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty interior row".into()));
        }
        Ok(DominoTableau {
            rank: r,
            shape,
            grid,
            dominoes,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of dominoes.
    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn dominoes(&self) -> &BTreeMap<u32, [Square; 2]> {
        &self.dominoes
    }

    pub fn domino(&self, label: u32) -> Option<[Square; 2]> {
        self.dominoes.get(&label).copied()
    }

    pub fn labels(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.dominoes.keys().copied()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.dominoes.keys().next_back().copied()
    }

    /// Label at a square of the diagram (0 for core squares).
    pub fn label_at(&self, (i, j): Square) -> Option<u32> {
        if i == 0 || j == 0 {
            return None;
        }
        self.grid.get(i - 1).and_then(|row| row.get(j - 1)).copied()
    }

    /// Label with boundary conventions: 0 above/left of the diagram and on the
    /// core, [`INFINITY`] below/right of it. Coordinates may be 0.
    pub fn boundary_label(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.label_at((i, j)).unwrap_or(INFINITY)
    }

    /// The labeled squares of the diagram, row-major.
    pub fn grid(&self) -> &[Vec<u32>] {
        &self.grid
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> DominoTableau {
        let map = self
            .dominoes
            .iter()
            .map(|(&l, &[a, b])| (l, domino((a.1, a.0), (b.1, b.0))))
            .collect();
        Self::from_map(self.rank, map).expect("transpose of a tableau is a tableau")
    }

    /// True iff labels weakly increase along rows and down columns.
    pub fn is_monotone(&self) -> bool {
        for (i, row) in self.grid.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] < l {
                    return false;
                }
                if let Some(below) = self.grid.get(i + 1).and_then(|r| r.get(j)) {
                    if *below < l {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Human-readable label grid with `·` for core squares.
    pub fn render(&self) -> String {
        let width = self
            .max_label()
            .map_or(1, |m| m.to_string().len())
            .max(1);
        let mut out = String::new();
        for row in &self.grid {
            let cells: Vec<String> = row
                .iter()
                .map(|&l| {
                    if l == 0 {
                        format!("{:>w$}", "·", w = width)
                    } else {
                        format!("{:>w$}", l, w = width)
                    }
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            rank: self.rank,
            shape: self.shape.clone(),
            dominoes: self
                .dominoes
                .iter()
                .map(|(&label, &[a, b])| DominoJson {
                    label,
                    squares: [[a.0, a.1], [b.0, b.1]],
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TableauJson) -> Result<Self> {
        let t = Self::from_dominoes(
            j.rank,
            j.dominoes
                .iter()
                .map(|d| (d.label, [(d.squares[0][0], d.squares[0][1]), (d.squares[1][0], d.squares[1][1])])),
        )?;
        if t.shape != j.shape {
            return Err(Error::InvalidTableau(format!(
                "declared shape {} does not match dominoes ({})",
                j.shape, t.shape
            )));
        }
        Ok(t)
    }

    /// Replaces the listed dominoes and rebuilds the grid. Only the tiling is
    /// checked, not monotonicity.
    pub(crate) fn with_dominoes_replaced(
        &self,
        replacements: &BTreeMap<u32, [Square; 2]>,
    ) -> Result<DominoTableau> {
        let mut map = self.dominoes.clone();
        for (&l, &d) in replacements {
            map.insert(l, d);
        }
        Self::from_map(self.rank, map)
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominoTableau(r={}, {:?})", self.rank, self.grid)
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominoJson {
    pub label: u32,
    pub squares: [[usize; 2]; 2],
}

/// Wire form of a tableau: dominoes sorted by label, squares sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub rank: usize,
    pub shape: Partition,
    pub dominoes: Vec<DominoJson>,
}

impl Serialize for DominoTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        DominoTableau::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Checks every standard domino tableau invariant: the label-0 squares are
/// exactly the core, labels are `1..=n` each on an adjacent pair, and labels
/// increase along rows and columns.
pub fn validate(t: &DominoTableau) -> bool {
    let n = t.len() as u32;
    if !t.labels().eq(1..=n) {
        return false;
    }
    for (i, row) in t.grid.iter().enumerate() {
        for (j, &l) in row.iter().enumerate() {
            if (l == 0) != in_core((i + 1, j + 1), t.rank) {
                return false;
            }
        }
    }
    if t.dominoes.values().any(|&[a, b]| !adjacent(a, b)) {
        return false;
    }
    let dec = rank_and_core(&t.shape);
    dec.rank == t.rank && dec.domino_count == t.len() && t.is_monotone()
}

fn removable_dominoes(q: &Partition, r: usize) -> Vec<[Square; 2]> {
    let mut out = Vec::new();
    for i in 1..=q.len() {
        let len = q.row(i);
        if len >= 2 && q.row(i + 1) + 2 <= len && !in_core((i, len - 1), r) {
            out.push([(i, len - 1), (i, len)]);
        }
        if q.row(i + 1) == len && q.row(i + 2) < len && !in_core((i, len), r) {
            out.push([(i, len), (i + 1, len)]);
        }
    }
    out
}

fn shape_without(q: &Partition, d: &[Square; 2]) -> Partition {
    let mut parts = q.parts().to_vec();
    for &(i, _) in d {
        parts[i - 1] -= 1;
    }
    Partition::from_unsorted(parts)
}

/// All standard domino tableaux of shape `p` (rank taken from `p`), sorted.
pub fn enumerate_tableaux(p: &Partition) -> Vec<DominoTableau> {
    let dec = rank_and_core(p);
    let r = dec.rank;
    let mut memo: BTreeMap<Partition, Vec<Vec<[Square; 2]>>> = BTreeMap::new();
    fn rec(
        q: &Partition,
        r: usize,
        memo: &mut BTreeMap<Partition, Vec<Vec<[Square; 2]>>>,
    ) -> Vec<Vec<[Square; 2]>> {
        if let Some(v) = memo.get(q) {
            return v.clone();
        }
        let mut out = Vec::new();
        if *q == Partition::staircase(r) {
            out.push(Vec::new());
        } else {
            for d in removable_dominoes(q, r) {
                for mut seq in rec(&shape_without(q, &d), r, memo) {
                    seq.push(d);
                    out.push(seq);
                }
            }
        }
        memo.insert(q.clone(), out.clone());
        out
    }
    let mut out: Vec<DominoTableau> = rec(p, r, &mut memo)
        .into_iter()
        .map(|seq| {
            DominoTableau::from_map(
                r,
                seq.into_iter()
                    .enumerate()
                    .map(|(k, d)| (k as u32 + 1, d))
                    .collect(),
            )
            .expect("removal sequence yields a tableau")
        })
        .collect();
    out.sort_by(|a, b| a.dominoes.iter().cmp(b.dominoes.iter()));
    out
}

/// Number of standard domino tableaux of shape `p`.
pub fn count_tableaux(p: &Partition) -> u128 {
    let r = rank_and_core(p).rank;
    let mut memo: BTreeMap<Partition, u128> = BTreeMap::new();
    fn rec(q: &Partition, r: usize, memo: &mut BTreeMap<Partition, u128>) -> u128 {
        if *q == Partition::staircase(r) {
            return 1;
        }
        if let Some(&c) = memo.get(q) {
            return c;
        }
        let c = removable_dominoes(q, r)
            .iter()
            .map(|d| rec(&shape_without(q, d), r, memo))
            .sum();
        memo.insert(q.clone(), c);
        c
    }
    rec(p, r, &mut memo)
}

/// All standard domino tableaux of rank `r` with `n` dominoes, grouped by
/// shape in descending lexicographic shape order.
pub fn enumerate_all_tableaux(n: usize, r: usize) -> Vec<DominoTableau> {
    crate::partition::enumerate_rank_partitions(n, r)
        .iter()
        .flat_map(enumerate_tableaux)
        .collect()
}
