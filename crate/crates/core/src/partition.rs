//! Partitions, Young diagrams, 2-cores and bipartitions.
//!
//! Squares are addressed 1-based: `(i, j)` is row `i` from the top and
//! column `j` from the left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square `(row, column)` of a Young diagram, 1-based.
pub type Square = (usize, usize);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {:?}",
                parts
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("interior zero part: {:?}", parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts the (nonzero) parts into decreasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(r, r-1, ..., 1)`.
    pub fn staircase(r: usize) -> Self {
        Partition {
            parts: (1..=r).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based); zero past the last part.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, (i, j): Square) -> bool {
        i >= 1 && j >= 1 && self.row(i) >= j
    }

    /// Squares in row-major order.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Column lengths.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width).map(|j| self.column(j)).collect(),
        }
    }

    /// Adds a square; the result must again be a Young diagram.
    pub fn with_square(&self, (i, j): Square) -> Result<Partition> {
        if i == 0 || j == 0 || self.row(i) + 1 != j || (i > 1 && self.row(i - 1) < j) {
            return Err(Error::InvalidPartition(format!(
                "square ({},{}) is not addable to {}",
                i, j, self
            )));
        }
        let mut parts = self.parts.clone();
        if i > parts.len() {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Removes a corner square.
    pub fn without_square(&self, (i, j): Square) -> Result<Partition> {
        if !self.contains((i, j)) || self.row(i) != j || self.row(i + 1) >= j {
            return Err(Error::InvalidPartition(format!(
                "square ({},{}) is not removable from {}",
                i, j, self
            )));
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Parts padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Beta-numbers `p_i + k - i` for the first `k` (padded) parts, in decreasing order.
    pub fn beta_numbers(&self, k: usize) -> Vec<usize> {
        let parts = self.padded(k);
        (0..k).map(|i| parts[i] + k - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_numbers`]: any finite set of distinct naturals.
    pub fn from_beta_numbers(beta: &[usize]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        Partition::from_unsorted((0..k).map(|i| b[i] - (k - 1 - i)).collect())
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn standard_tableaux_count(&self) -> u128 {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let mut den: u128 = 1;
        for (i, j) in self.squares() {
            let arm = self.row(i) - j;
            let leg = self.column(j) - i;
            den *= (arm + leg + 1) as u128;
            let g = num_integer::gcd(num, den);
            num /= g;
            den /= g;
        }
        num / den
    }

    /// All partitions of `m` in descending lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(m, m, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4 3 3 1`, `4,3,3,1`, `(4,3,3,1)` or `[4,3,3,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The rank, core and domino count of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankDecomposition {
    pub rank: usize,
    pub core: Partition,
    pub domino_count: usize,
}

/// Computes the 2-core by sliding beads on the two runners of the abacus.
pub fn rank_and_core(p: &Partition) -> RankDecomposition {
    let k = p.len();
    let beta = p.beta_numbers(k);
    let evens = beta.iter().filter(|b| *b % 2 == 0).count();
    let odds = k - evens;
    let slid: Vec<usize> = (0..evens)
        .map(|i| 2 * i)
        .chain((0..odds).map(|i| 2 * i + 1))
        .collect();
    let core = Partition::from_beta_numbers(&slid);
    let rank = core.len();
    debug_assert_eq!(core, Partition::staircase(rank));
    let domino_count = (p.size() - core.size()) / 2;
    RankDecomposition {
        rank,
        core,
        domino_count,
    }
}

/// Rank of a partition, see [`rank_and_core`].
pub fn rank(p: &Partition) -> usize {
    rank_and_core(p).rank
}

/// Strips removable dominoes greedily until none is left and returns what
/// remains. Independent of [`rank_and_core`]; used to cross-check it.
pub fn core_by_domino_removal(p: &Partition) -> Partition {
    let mut cur = p.clone();
    'outer: loop {
        for i in 1..=cur.len() {
            let len = cur.row(i);
            // horizontal domino at the end of row i
            if len >= 2 && cur.row(i + 1) <= len - 2 {
                let mut parts = cur.parts.clone();
                parts[i - 1] -= 2;
                cur = Partition::from_unsorted(parts);
                continue 'outer;
            }
            // vertical domino at the bottom of column len
            if cur.row(i + 1) == len && cur.row(i + 2) < len {
                let mut parts = cur.parts.clone();
                parts[i - 1] -= 1;
                parts[i] -= 1;
                cur = Partition::from_unsorted(parts);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// All partitions of rank `r` with `n` dominoes, in descending lexicographic order.
pub fn enumerate_rank_partitions(n: usize, r: usize) -> Vec<Partition> {
    Partition::all(2 * n + r * (r + 1) / 2)
        .into_iter()
        .filter(|p| rank(p) == r)
        .collect()
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub d: Partition,
    pub f: Partition,
}

impl Bipartition {
    pub fn new(d: Partition, f: Partition) -> Self {
        Bipartition { d, f }
    }

    pub fn size(&self) -> usize {
        self.d.size() + self.f.size()
    }

    /// Dimension of the irreducible module of the hyperoctahedral group
    /// labeled by this pair: `C(n, |d|) * f^d * f^f`.
    pub fn degree(&self) -> u128 {
        let n = self.size() as u128;
        let k = self.d.size() as u128;
        let mut binom: u128 = 1;
        for i in 0..k {
            binom = binom * (n - i) / (i + 1);
        }
        binom * self.d.standard_tableaux_count() * self.f.standard_tableaux_count()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.f)
    }
}

/// All bipartitions of `n`: by decreasing `|d|`, then each factor in
/// descending lexicographic order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for d in Partition::all(k) {
            for f in Partition::all(n - k) {
                out.push(Bipartition::new(d.clone(), f));
            }
        }
    }
    out
}
