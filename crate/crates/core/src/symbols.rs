//! Symbols of defect `t` and residue `ε`, the bijections between partitions
//! of rank `r`, symbols and bipartitions, sign duality, and the shape side of
//! truncated induction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{rank_and_core, Bipartition, Partition};

/// The weights `L(t) = b`, `L(s_i) = a` and the derived combinatorial data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightParams {
    pub a: u32,
    pub b: u32,
    pub s: Ratio<u32>,
    pub r: usize,
    pub epsilon: Ratio<u32>,
}

impl WeightParams {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidWeight { a, b });
        }
        let s = Ratio::new(b, a);
        let floor = s.to_integer();
        let (r, epsilon) = if s.is_integer() {
            ((floor - 1) as usize, Ratio::from_integer(0))
        } else {
            (floor as usize, s - Ratio::from_integer(floor))
        };
        Ok(WeightParams {
            a,
            b,
            s,
            r,
            epsilon,
        })
    }

    /// Parameters for a given ratio `s = b/a` in lowest terms.
    pub fn from_ratio(s: Ratio<u32>) -> Result<Self> {
        Self::new(*s.denom(), *s.numer())
    }

    pub fn is_integral(&self) -> bool {
        self.epsilon == Ratio::from_integer(0)
    }
}

impl fmt::Display for WeightParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} s={} r={} eps={}", self.a, self.b, self.s, self.r, self.epsilon)
    }
}

/// A symbol: top row `λ_i + ε`, bottom row `μ_i`, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub epsilon: Ratio<u32>,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl Symbol {
    pub fn new(epsilon: Ratio<u32>, lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&lambda) || !increasing(&mu) {
            return Err(Error::Parse("symbol rows must be strictly increasing".into()));
        }
        if lambda.len() < mu.len() {
            return Err(Error::Parse("negative defect".into()));
        }
        Ok(Symbol {
            epsilon,
            lambda,
            mu,
        })
    }

    pub fn defect(&self) -> usize {
        self.lambda.len() - self.mu.len()
    }

    /// The shift `Λ -> Λ'`: prepend 0 to both rows and add 1 to every other
    /// entry.
    pub fn shift(&self) -> Symbol {
        let bump = |v: &[usize]| -> Vec<usize> {
            std::iter::once(0).chain(v.iter().map(|x| x + 1)).collect()
        };
        Symbol {
            epsilon: self.epsilon,
            lambda: bump(&self.lambda),
            mu: bump(&self.mu),
        }
    }

    /// Minimal representative of the equivalence class.
    pub fn normalize(&self) -> Symbol {
        let mut s = self.clone();
        while s.lambda.first() == Some(&0) && s.mu.first() == Some(&0) {
            s.lambda = s.lambda[1..].iter().map(|x| x - 1).collect();
            s.mu = s.mu[1..].iter().map(|x| x - 1).collect();
        }
        s
    }

    pub fn equivalent(&self, other: &Symbol) -> bool {
        self.epsilon == other.epsilon && self.normalize() == other.normalize()
    }

    /// Size of the represented bipartition.
    pub fn rank_n(&self) -> usize {
        let b = symbol_to_bipartition(self);
        b.size()
    }

    /// Display with the residue attached to top-row entries, e.g. `2½`.
    pub fn render(&self) -> String {
        let top: Vec<String> = self
            .lambda
            .iter()
            .map(|&l| fmt_entry(l, self.epsilon))
            .collect();
        let bottom: Vec<String> = self.mu.iter().map(|m| m.to_string()).collect();
        format!("[{} / {}]", top.join(" "), bottom.join(" "))
    }
}

fn fmt_entry(l: usize, eps: Ratio<u32>) -> String {
    if eps == Ratio::from_integer(0) {
        l.to_string()
    } else if eps == Ratio::new(1, 2) {
        if l == 0 {
            "½".into()
        } else {
            format!("{}½", l)
        }
    } else {
        format!("{}+{}", l, eps)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    epsilon: String,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymbolJson {
            epsilon: self.epsilon.to_string(),
            top: self.lambda.clone(),
            bottom: self.mu.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymbolJson::deserialize(d)?;
        let eps: Ratio<u32> = j.epsilon.parse().map_err(serde::de::Error::custom)?;
        Symbol::new(eps, j.top, j.bottom).map_err(serde::de::Error::custom)
    }
}

/// The beta set `{p_i + k' - i}` of `p♯`, in decreasing order.
fn sharp_betas(p: &Partition) -> Vec<usize> {
    let r = rank_and_core(p).rank;
    let k = p.len();
    let k2 = if r % 2 == k % 2 { k + 1 } else { k };
    p.padded(k2)
        .iter()
        .enumerate()
        .map(|(i, &pi)| pi + k2 - 1 - i)
        .collect()
}

/// `p -> Λ_p`.
pub fn partition_to_symbol(p: &Partition, epsilon: Ratio<u32>) -> Symbol {
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    for b in sharp_betas(p).into_iter().rev() {
        if b % 2 == 0 {
            lambda.push(b / 2);
        } else {
            mu.push(b / 2);
        }
    }
    Symbol {
        epsilon,
        lambda,
        mu,
    }
}

/// Inverse of [`partition_to_symbol`] on equivalence classes.
pub fn symbol_to_partition(sym: &Symbol) -> Partition {
    let mut betas: Vec<usize> = sym
        .lambda
        .iter()
        .map(|l| 2 * l)
        .chain(sym.mu.iter().map(|m| 2 * m + 1))
        .collect();
    betas.sort_unstable();
    Partition::from_beta_numbers(&betas)
}

/// `Λ -> (d_Λ, f_Λ)`.
pub fn symbol_to_bipartition(sym: &Symbol) -> Bipartition {
    let row = |v: &[usize]| {
        Partition::from_unsorted(v.iter().enumerate().map(|(i, &x)| x - i).collect())
    };
    Bipartition::new(row(&sym.lambda), row(&sym.mu))
}

/// The symbol of defect `t` with the fewest entries representing `(d, f)`.
pub fn bipartition_to_symbol(bp: &Bipartition, t: usize, epsilon: Ratio<u32>) -> Symbol {
    let n_bottom = bp.f.len().max(bp.d.len().saturating_sub(t));
    let row = |p: &Partition, len: usize| -> Vec<usize> {
        let mut parts = p.padded(len);
        parts.reverse();
        parts.iter().enumerate().map(|(i, &x)| x + i).collect()
    };
    Symbol {
        epsilon,
        lambda: row(&bp.d, n_bottom + t),
        mu: row(&bp.f, n_bottom),
    }
}

/// The partition of rank `r` labeling the same module as `(d, f)`.
pub fn bipartition_to_partition(bp: &Bipartition, r: usize) -> Partition {
    symbol_to_partition(&bipartition_to_symbol(bp, r + 1, Ratio::from_integer(0)))
}

/// `p -> (d, f)` through the symbol of defect `rank(p) + 1`.
pub fn partition_to_bipartition(p: &Partition) -> Bipartition {
    symbol_to_bipartition(&partition_to_symbol(p, Ratio::from_integer(0)))
}

/// Tensoring with sign on bipartitions: `(d, f) -> (f^t, d^t)`.
pub fn sign_on_bipartition(bp: &Bipartition) -> Bipartition {
    Bipartition::new(bp.f.transpose(), bp.d.transpose())
}

/// Tensoring with sign on symbols, by complementation in `[0, τ]`.
pub fn sign_on_symbol(sym: &Symbol) -> Symbol {
    let tau = sym
        .lambda
        .iter()
        .chain(&sym.mu)
        .copied()
        .max()
        .unwrap_or(0);
    let complement = |v: &[usize]| -> Vec<usize> {
        let taken: BTreeSet<usize> = v.iter().map(|x| tau - x).collect();
        (0..=tau).filter(|x| !taken.contains(x)).collect()
    };
    Symbol {
        epsilon: sym.epsilon,
        lambda: complement(&sym.mu),
        mu: complement(&sym.lambda),
    }
}

fn p_one(parts: &[usize], l: usize) -> Partition {
    let mut q = parts.to_vec();
    for x in q.iter_mut().take(l) {
        *x += 2;
    }
    Partition::from_unsorted(q)
}

fn p_two(parts: &[usize], l: usize) -> Partition {
    let mut q = parts.to_vec();
    for x in q.iter_mut().take(l - 1) {
        *x += 2;
    }
    q[l - 1] += 1;
    q[l] += 1;
    Partition::from_unsorted(q)
}

/// True iff inducing `p` from `W_m × S_l` has two constituents.
pub fn induction_splits(p: &Partition, l: usize, r: usize, integral: bool) -> bool {
    let q = p.padded(p.len().max(l + 1));
    integral && q[l - 1] == q[l] && (q[l - 1] + r + l).is_multiple_of(2)
}

/// Shapes of the constituents of `J([p] ⊗ sgn_l)`: `[p^I]` or
/// `[p^I, p^II]`.
pub fn truncated_induction_shapes(
    p: &Partition,
    l: usize,
    wp: &WeightParams,
) -> Result<Vec<Partition>> {
    let r = rank_and_core(p).rank;
    if r != wp.r {
        return Err(Error::RankMismatch {
            expected: wp.r,
            found: r,
        });
    }
    if l == 0 {
        return Ok(vec![p.clone()]);
    }
    let q = p.padded(p.len().max(l + 1));
    let mut out = vec![p_one(&q, l)];
    if induction_splits(p, l, r, wp.is_integral()) {
        out.push(p_two(&q, l));
    }
    Ok(out)
}

/// Induction on symbols: raise the `l` largest entries, or both candidates
/// for the `l`-th when it is ambiguous.
pub fn induce_symbol(sym: &Symbol, l: usize) -> Vec<Symbol> {
    let mut s = sym.clone();
    while s.lambda.len() + s.mu.len() < l + 1 {
        s = s.shift();
    }
    // entries tagged (value, row, index) with row 1 = top
    let eps_zero = s.epsilon == Ratio::from_integer(0);
    let mut entries: Vec<(usize, u8, usize)> = s
        .lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, 1u8, i))
        .chain(s.mu.iter().enumerate().map(|(i, &x)| (x, 0u8, i)))
        .collect();
    // on equal values a bottom entry ranks above a top one; this is the
    // ordering under which the induced cells carry [p^I] when ε > 0
    entries.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let raise = |chosen: &[(usize, u8, usize)]| -> Symbol {
        let mut out = s.clone();
        for &(_, row, i) in chosen {
            if row == 1 {
                out.lambda[i] += 1;
            } else {
                out.mu[i] += 1;
            }
        }
        out
    };
    if eps_zero && entries[l - 1].0 == entries[l].0 {
        let mut first = entries[..l - 1].to_vec();
        let mut second = first.clone();
        first.push(entries[l - 1]);
        second.push(entries[l]);
        vec![raise(&first), raise(&second)]
    } else {
        vec![raise(&entries[..l])]
    }
}

/// `{p^I : p ∈ P'} ∪ {p^II : p ∈ P', p_l = p_{l+1}, p_l + r - l even}`.
pub fn induced_shape_set(
    shapes: &BTreeSet<Partition>,
    l: usize,
    r: usize,
) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    for p in shapes {
        let q = p.padded(p.len().max(l + 1));
        out.insert(p_one(&q, l));
        if induction_splits(p, l, r, true) {
            out.insert(p_two(&q, l));
        }
    }
    out
}

/// A constructible representation as a sorted multiset of shapes.
pub type Constructible = Vec<Partition>;

/// Constructible representations of `W_n` for the given weights, built from
/// `W_0` by truncated induction from `W_m × S_l` and tensoring with sign.
pub fn constructible_set(n: usize, wp: &WeightParams) -> BTreeSet<Constructible> {
    let mut levels: BTreeMap<usize, BTreeSet<Constructible>> = BTreeMap::new();
    levels.insert(0, [vec![Partition::staircase(wp.r)]].into_iter().collect());
    for k in 1..=n {
        let mut here: BTreeSet<Constructible> = BTreeSet::new();
        for l in 1..=k {
            for c in &levels[&(k - l)] {
                let mut induced: Vec<Partition> = c
                    .iter()
                    .flat_map(|p| truncated_induction_shapes(p, l, wp).expect("rank r"))
                    .collect();
                induced.sort();
                here.insert(induced);
            }
        }
        let transposed: Vec<Constructible> = here
            .iter()
            .map(|c| {
                let mut t: Vec<Partition> = c.iter().map(Partition::transpose).collect();
                t.sort();
                t
            })
            .collect();
        here.extend(transposed);
        levels.insert(k, here);
    }
    levels.remove(&n).unwrap()
}
