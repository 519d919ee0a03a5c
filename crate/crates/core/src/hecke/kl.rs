//! Kazhdan–Lusztig basis for unequal parameters.
//!
//! `C_w` is built from `C_s C_{sw} = C_w + sum mu^s_{z,sw} C_z`, where the
//! bar-invariant `mu^s_{z,x}` (for `sz < z < x < sx`) are determined by
//! requiring `sum_{y <= z < x, sz < z} p_{y,z} mu^s_{z,x} - v_s p_{y,x}` to
//! have only negative powers of `v` for every `y < x` with `sy < y`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::perm::SignedPermutation;

use super::{Group, HeckeElement, WeightFunction};

/// Hard ceiling on the rank handled by the engine.
pub const MAX_N: usize = 5;

/// Sparse column `y -> p_{y,x}` sorted by `y`.
pub type Column = Vec<(u32, Laurent)>;

#[derive(Clone, Debug)]
pub struct KLTable {
    pub n: usize,
    pub weight: WeightFunction,
    pub group: Group,
    p: Vec<Column>,
    /// `mu[x][k]`: the pairs `(z, mu^k_{z,x})` when `g_k x > x`.
    mu: Vec<Vec<Column>>,
}

/// `c_0 + sum_{k>0} c_k (v^k + v^-k)` from the non-negative part of `x`.
fn symmetrize_nonnegative(x: &Laurent) -> Laurent {
    Laurent::from_terms(x.terms().iter().filter(|t| t.0 >= 0).flat_map(|&(e, c)| {
        if e == 0 {
            vec![(0, c)]
        } else {
            vec![(e, c), (-e, c)]
        }
    }))
}

fn lookup(col: &Column, y: usize) -> Option<&Laurent> {
    col.binary_search_by_key(&(y as u32), |t| t.0)
        .ok()
        .map(|i| &col[i].1)
}

impl KLTable {
    /// Computes the full table for `W_n`, refusing `n > max_n`.
    pub fn compute(n: usize, weight: WeightFunction, max_n: usize) -> Result<Self> {
        if n > max_n.min(MAX_N) {
            return Err(Error::ResourceBound(format!(
                "KL table for n={} exceeds the bound {}",
                n,
                max_n.min(MAX_N)
            )));
        }
        let group = Group::new(n);
        let mut table = KLTable {
            n,
            weight,
            p: Vec::with_capacity(group.len()),
            mu: Vec::with_capacity(group.len()),
            group,
        };
        for w in 0..table.group.len() {
            let col = if w == 0 {
                vec![(0, Laurent::one())]
            } else {
                table.column_from_recursion(w)
            };
            table.p.push(col);
            let mus = table.mu_for(w);
            table.mu.push(mus);
        }
        Ok(table)
    }

    /// Rebuilds a table from stored columns, recomputing the `mu` data.
    pub(crate) fn from_columns(n: usize, weight: WeightFunction, p: Vec<Column>) -> Result<Self> {
        let group = Group::new(n);
        if p.len() != group.len() {
            return Err(Error::Cache(format!(
                "expected {} columns, found {}",
                group.len(),
                p.len()
            )));
        }
        let mut table = KLTable {
            n,
            weight,
            group,
            p,
            mu: Vec::new(),
        };
        for w in 0..table.group.len() {
            let mus = table.mu_for(w);
            table.mu.push(mus);
        }
        Ok(table)
    }

    fn column_from_recursion(&self, w: usize) -> Column {
        let g = &self.group;
        let k = g.first_left_descent(w).expect("w is not the identity");
        let w1 = g.lmul[k][w];
        let vs = self.weight.of_generator(k);
        let mut acc: BTreeMap<usize, Laurent> = BTreeMap::new();
        for (y, c) in &self.p[w1] {
            let y = *y as usize;
            let sy = g.lmul[k][y];
            *acc.entry(sy).or_default() += c;
            let shift = if g.length[sy] > g.length[y] { -vs } else { vs };
            *acc.entry(y).or_default() += &c.shift(shift);
        }
        for (z, m) in &self.mu[w1][k] {
            for (y, c) in &self.p[*z as usize] {
                *acc.entry(*y as usize).or_default() -= &(c * m);
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(y, c)| (y as u32, c))
            .collect()
    }

    fn mu_for(&self, w: usize) -> Vec<Column> {
        (0..self.group.generators())
            .map(|k| {
                if self.group.left_descent(k, w) {
                    Vec::new()
                } else {
                    self.compute_mu(k, w)
                }
            })
            .collect()
    }

    fn compute_mu(&self, k: usize, w: usize) -> Column {
        let g = &self.group;
        let vs = self.weight.of_generator(k);
        let mut cand: BTreeSet<usize> = self.p[w]
            .iter()
            .map(|t| t.0 as usize)
            .filter(|&y| y != w)
            .collect();
        let mut found: Vec<(usize, Laurent)> = Vec::new();
        while let Some(y) = cand.pop_last() {
            if !g.left_descent(k, y) {
                continue;
            }
            let mut x = lookup(&self.p[w], y).map_or_else(Laurent::zero, |c| c.shift(vs));
            for (z, m) in &found {
                if let Some(pyz) = lookup(&self.p[*z], y) {
                    x -= &(pyz * m);
                }
            }
            let m = symmetrize_nonnegative(&x);
            if !m.is_zero() {
                cand.extend(self.p[y].iter().map(|t| t.0 as usize).filter(|&u| u != y));
                found.push((y, m));
            }
        }
        found.sort_by_key(|t| t.0);
        found.into_iter().map(|(z, m)| (z as u32, m)).collect()
    }

    pub fn len(&self) -> usize {
        self.group.len()
    }

    pub fn is_empty(&self) -> bool {
        self.group.is_empty()
    }

    /// `p_{y,x}` by group index.
    pub fn p_index(&self, y: usize, x: usize) -> Laurent {
        lookup(&self.p[x], y).cloned().unwrap_or_default()
    }

    pub fn p(&self, y: &SignedPermutation, x: &SignedPermutation) -> Laurent {
        match (self.group.index_of(y), self.group.index_of(x)) {
            (Some(y), Some(x)) => self.p_index(y, x),
            _ => Laurent::zero(),
        }
    }

    pub fn column(&self, x: usize) -> &Column {
        &self.p[x]
    }

    /// `(z, mu^k_{z,x})` for `g_k x > x`; empty when `k` is a left descent.
    pub fn mu(&self, k: usize, x: usize) -> &Column {
        &self.mu[x][k]
    }

    /// `C_x` as a T-basis element.
    pub fn c_element(&self, x: &SignedPermutation) -> Option<HeckeElement> {
        let i = self.group.index_of(x)?;
        let mut h = HeckeElement::zero();
        for (y, c) in &self.p[i] {
            h.add_term(self.group.element(*y as usize).clone(), c);
        }
        Some(h)
    }

    /// Elements `y` with `C_y` occurring in `C_{g_k} C_x`, with coefficients.
    pub fn left_product(&self, k: usize, x: usize) -> Vec<(usize, Laurent)> {
        let g = &self.group;
        let vs = self.weight.of_generator(k);
        if g.left_descent(k, x) {
            return vec![(x, Laurent::from_terms([(vs, 1), (-vs, 1)]))];
        }
        let mut out = vec![(g.lmul[k][x], Laurent::one())];
        out.extend(self.mu[x][k].iter().map(|(z, m)| (*z as usize, m.clone())));
        out
    }

    /// Checks unitriangularity and the degree bound on every column.
    pub fn check_normal_form(&self) -> std::result::Result<(), String> {
        for (x, col) in self.p.iter().enumerate() {
            for (y, c) in col {
                let y = *y as usize;
                if y == x {
                    if !c.is_one() {
                        return Err(format!("p_(x,x) != 1 at {}", self.group.element(x)));
                    }
                } else if !c.has_only_negative_exponents()
                    || self.group.length[y] >= self.group.length[x]
                {
                    return Err(format!(
                        "p_(y,x) not in v^-1 Z[v^-1] for y={} x={}",
                        self.group.element(y),
                        self.group.element(x)
                    ));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn columns(&self) -> &[Column] {
        &self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one() {
        let wf = WeightFunction::new(1, 3).unwrap();
        let t = KLTable::compute(1, wf, 5).unwrap();
        assert_eq!(t.p(&w("1"), &w("-1")), Laurent::monomial(-3, 1));
        assert_eq!(t.p(&w("-1"), &w("-1")), Laurent::one());
    }

    #[test]
    fn bar_invariance_and_bruhat_support() {
        for n in 1..=3 {
            for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 3)] {
                let wf = WeightFunction::new(a, b).unwrap();
                let t = KLTable::compute(n, wf, 5).unwrap();
                t.check_normal_form().unwrap();
                for x in &t.group.elements {
                    let c = t.c_element(x).unwrap();
                    assert_eq!(c.bar(&wf), c, "C_{} not bar invariant for {:?}", x, wf);
                    for y in c.terms.keys() {
                        assert!(y.bruhat_leq(x));
                    }
                }
            }
        }
    }

    #[test]
    fn c_s_squared() {
        let wf = WeightFunction::new(2, 1).unwrap();
        let t = KLTable::compute(2, wf, 5).unwrap();
        for k in 0..2 {
            let s = SignedPermutation::generator(2, k);
            let cs = t.c_element(&s).unwrap();
            let sq = super::super::t_multiply(&cs, &cs, &wf);
            let l = wf.of_generator(k);
            assert_eq!(sq, cs.scale(&Laurent::from_terms([(l, 1), (-l, 1)])));
        }
    }

    #[test]
    fn equal_parameter_a2_is_classical() {
        // in the type A part with equal weights all p_{y,x} are v^{l(y)-l(x)}
        // times a KL polynomial; for S_3 they are monomials
        let wf = WeightFunction::new(1, 1).unwrap();
        let t = KLTable::compute(3, wf, 5).unwrap();
        let x = w("3 2 1");
        for y in &t.group.elements {
            if y.window().iter().all(|&v| v > 0) {
                let d = y.length() as i32 - x.length() as i32;
                assert_eq!(t.p(y, &x), Laurent::monomial(d, 1));
            }
        }
    }

    #[test]
    fn refuses_large_n() {
        let wf = WeightFunction::new(1, 1).unwrap();
        assert!(matches!(
            KLTable::compute(4, wf, 3),
            Err(Error::ResourceBound(_))
        ));
    }
}
