//! The Iwahori–Hecke algebra of `W_n` with weights `L(t) = b`, `L(s_i) = a`.

pub mod asymptotic;
pub mod cache;
pub mod cells;
pub mod kl;
pub mod module;
pub mod properties;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::perm::SignedPermutation;

pub use asymptotic::AsymptoticData;
pub use cells::{CellPartition, Side};
pub use kl::KLTable;

/// Positive weights on the generators: `b` on `t`, `a` on every `s_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightFunction {
    pub a: u32,
    pub b: u32,
}

impl WeightFunction {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidWeight { a, b });
        }
        Ok(WeightFunction { a, b })
    }

    /// `L` of generator `k`.
    pub fn of_generator(&self, k: usize) -> i32 {
        if k == 0 {
            self.b as i32
        } else {
            self.a as i32
        }
    }

    pub fn of(&self, w: &SignedPermutation) -> i32 {
        let st = w.length_stats();
        self.a as i32 * st.ell_s as i32 + self.b as i32 * st.ell_t as i32
    }

    /// `v_s - v_s^{-1}` for generator `k`.
    pub fn xi(&self, k: usize) -> Laurent {
        let l = self.of_generator(k);
        Laurent::from_terms([(l, 1), (-l, -1)])
    }
}

/// The elements of `W_n` indexed by `(length, window)` with multiplication
/// tables by generators.
#[derive(Clone, Debug)]
pub struct Group {
    pub n: usize,
    pub elements: Vec<SignedPermutation>,
    pub length: Vec<usize>,
    /// `lmul[k][x]` = index of `g_k * x`.
    pub lmul: Vec<Vec<usize>>,
    /// `rmul[k][x]` = index of `x * g_k`.
    pub rmul: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    index: HashMap<SignedPermutation, usize>,
}

impl Group {
    pub fn new(n: usize) -> Self {
        let mut elements = SignedPermutation::all(n);
        elements.sort_by_cached_key(|w| (w.length(), w.clone()));
        let index: HashMap<SignedPermutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let length = elements.iter().map(|w| w.length()).collect();
        let gens = n;
        let lmul = (0..gens)
            .map(|k| {
                elements
                    .iter()
                    .map(|w| index[&w.left_mul_generator(k)])
                    .collect()
            })
            .collect();
        let rmul = (0..gens)
            .map(|k| {
                elements
                    .iter()
                    .map(|w| index[&w.right_mul_generator(k)])
                    .collect()
            })
            .collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        Group {
            n,
            elements,
            length,
            lmul,
            rmul,
            inverse,
            index,
        }
    }

    /// `|W_n| = 2^n n!`.
    pub fn order(n: usize) -> usize {
        (1..=n).product::<usize>() << n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    /// True iff `g_k * x < x`.
    pub fn left_descent(&self, k: usize, x: usize) -> bool {
        self.length[self.lmul[k][x]] < self.length[x]
    }

    /// Smallest generator `k` with `g_k * x < x`.
    pub fn first_left_descent(&self, x: usize) -> Option<usize> {
        (0..self.n).find(|&k| self.left_descent(k, x))
    }

    /// A reduced word of element `x`, as generator indices.
    pub fn reduced_word(&self, x: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x;
        while let Some(k) = self.first_left_descent(cur) {
            word.push(k);
            cur = self.lmul[k][cur];
        }
        word
    }

    /// Index of the product `x * y`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let mut cur = y;
        for &k in self.reduced_word(x).iter().rev() {
            cur = self.lmul[k][cur];
        }
        cur
    }
}

/// A finite `A`-linear combination of `T_w`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    pub terms: BTreeMap<SignedPermutation, Laurent>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    /// `c * T_w`.
    pub fn basis(w: SignedPermutation, c: Laurent) -> Self {
        let mut h = HeckeElement::zero();
        h.add_term(w, &c);
        h
    }

    pub fn t(w: SignedPermutation) -> Self {
        Self::basis(w, Laurent::one())
    }

    pub fn coeff(&self, w: &SignedPermutation) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: SignedPermutation, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// `T_{g_k} * self`.
    pub fn left_mul_generator(&self, k: usize, wf: &WeightFunction) -> HeckeElement {
        let xi = wf.xi(k);
        let mut out = HeckeElement::zero();
        for (y, c) in &self.terms {
            let sy = y.left_mul_generator(k);
            if sy.length() > y.length() {
                out.add_term(sy, c);
            } else {
                out.add_term(sy, c);
                out.add_term(y.clone(), &(c * &xi));
            }
        }
        out
    }

    /// `T_{g_k}^{-1} * self`, using `T_s^{-1} = T_s - (v_s - v_s^{-1})`.
    pub fn left_mul_generator_inverse(&self, k: usize, wf: &WeightFunction) -> HeckeElement {
        let xi = wf.xi(k);
        let mut out = self.left_mul_generator(k, wf);
        for (y, c) in &self.terms {
            out.add_term(y.clone(), &(-&(c * &xi)));
        }
        out
    }

    /// The bar involution: `v -> v^{-1}` on coefficients and
    /// `T_w -> T_{w^{-1}}^{-1}`.
    pub fn bar(&self, wf: &WeightFunction) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &self.terms {
            let mut img = HeckeElement::t(SignedPermutation::identity(w.n()));
            for &k in w.reduced_word().iter().rev() {
                img = img.left_mul_generator_inverse(k, wf);
            }
            out = out.add(&img.scale(&c.bar()));
        }
        out
    }
}

/// Product in the T-basis.
pub fn t_multiply(h1: &HeckeElement, h2: &HeckeElement, wf: &WeightFunction) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (x, c) in &h1.terms {
        let mut part = h2.clone();
        for &k in x.reduced_word().iter().rev() {
            part = part.left_mul_generator(k, wf);
        }
        out = out.add(&part.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let wf = WeightFunction::new(2, 3).unwrap();
        let tt = HeckeElement::t(w("-1"));
        let sq = t_multiply(&tt, &tt, &wf);
        let expect = HeckeElement::t(w("1")).add(&tt.scale(&wf.xi(0)));
        assert_eq!(sq, expect);
        let e = HeckeElement::t(w("1 2"));
        let h = HeckeElement::t(w("-2 1")).add(&HeckeElement::basis(w("2 -1"), Laurent::monomial(-1, 3)));
        assert_eq!(t_multiply(&e, &h, &wf), h);
    }

    #[test]
    fn bar_of_generator() {
        let wf = WeightFunction::new(1, 3).unwrap();
        let b = HeckeElement::t(w("-1")).bar(&wf);
        let expect = HeckeElement::t(w("-1")).add(&HeckeElement::basis(w("1"), -&wf.xi(0)));
        assert_eq!(b, expect);
        assert_eq!(HeckeElement::t(w("1")).bar(&wf), HeckeElement::t(w("1")));
    }

    #[test]
    fn specializes_to_group_algebra() {
        let wf = WeightFunction::new(1, 2).unwrap();
        let all = SignedPermutation::all(2);
        for x in &all {
            for y in &all {
                let p = t_multiply(&HeckeElement::t(x.clone()), &HeckeElement::t(y.clone()), &wf);
                let at_one: Vec<(SignedPermutation, i64)> = p
                    .terms
                    .iter()
                    .map(|(z, c)| (z.clone(), c.eval_one()))
                    .filter(|(_, c)| *c != 0)
                    .collect();
                assert_eq!(at_one, vec![(x.mul(y), 1)]);
            }
        }
    }

    #[test]
    fn group_tables() {
        let g = Group::new(3);
        assert_eq!(g.len(), 48);
        for x in 0..g.len() {
            assert_eq!(g.inverse[g.inverse[x]], x);
            for k in 0..3 {
                assert_eq!(g.lmul[k][g.lmul[k][x]], x);
                assert_eq!(g.element(g.lmul[k][x]), &g.element(x).left_mul_generator(k));
            }
            assert_eq!(g.reduced_word(x).len(), g.length[x]);
        }
        let x = g.index_of(&w("-3 1 -2")).unwrap();
        let y = g.index_of(&w("2 -1 3")).unwrap();
        assert_eq!(g.element(g.mul(x, y)), &w("-3 1 -2").mul(&w("2 -1 3")));
    }

    fn elem3() -> impl Strategy<Value = SignedPermutation> {
        (0usize..48).prop_map(|i| SignedPermutation::all(3)[i].clone())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn associativity(x in elem3(), y in elem3(), z in elem3(), a in 1u32..3, b in 1u32..4) {
            let wf = WeightFunction::new(a, b).unwrap();
            let (tx, ty, tz) = (HeckeElement::t(x), HeckeElement::t(y), HeckeElement::t(z));
            let l = t_multiply(&t_multiply(&tx, &ty, &wf), &tz, &wf);
            let r = t_multiply(&tx, &t_multiply(&ty, &tz, &wf), &wf);
            prop_assert_eq!(l, r);
        }

        #[test]
        fn bar_is_a_multiplicative_involution(i in 0usize..8, j in 0usize..8, b in 1u32..4) {
            let wf = WeightFunction::new(1, b).unwrap();
            let all = SignedPermutation::all(2);
            let x = HeckeElement::basis(all[i].clone(), Laurent::from_terms([(1, 2), (-2, 1)]));
            let y = HeckeElement::t(all[j].clone());
            prop_assert_eq!(x.bar(&wf).bar(&wf), x.clone());
            prop_assert_eq!(t_multiply(&x, &y, &wf).bar(&wf), t_multiply(&x.bar(&wf), &y.bar(&wf), &wf));
        }
    }
}
