//! Signed permutations: the Weyl group of type B_n.
//!
//! An element is stored by its window `(w(1), ..., w(n))`. Products compose as
//! maps, `(x * y)(i) = x(y(i))`. Generator 0 is the sign change `t` of the
//! value 1 and generator `i >= 1` is the transposition `s_i` of `i` and `i+1`;
//! multiplying by a generator on the left acts on values, on the right acts
//! on positions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

/// Coxeter length together with the number of sign-change generators `ell_t`
/// and type-A generators `ell_s` in any reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LengthStats {
    pub ell: usize,
    pub ell_t: usize,
    pub ell_s: usize,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &w in &window {
            let a = w.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{:?}", window)));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// `w_0 = (-1, -2, ..., -n)`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    /// Generator `k` of `W_n`: `t` for `k = 0`, `s_k` otherwise.
    pub fn generator(n: usize, k: usize) -> Self {
        assert!(k < n.max(1), "generator index {} out of range for n={}", k, n);
        let mut w = Self::identity(n);
        if k == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(k - 1, k);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a nonzero `i` in `[-n, n]`.
    pub fn apply(&self, i: i32) -> i32 {
        let w = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -w
        } else {
            w
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.mul(other))
    }

    /// `self * other`, both of the same size.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        SignedPermutation {
            window: other.window.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut w = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = (i + 1) as i32;
            w[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        SignedPermutation { window: w }
    }

    /// `g * self` for generator `k` (acts on values).
    pub fn left_mul_generator(&self, k: usize) -> Self {
        let mut w = self.window.clone();
        for v in w.iter_mut() {
            if k == 0 {
                if v.abs() == 1 {
                    *v = -*v;
                }
            } else {
                let a = v.unsigned_abs() as usize;
                if a == k || a == k + 1 {
                    let b = if a == k { k + 1 } else { k } as i32;
                    *v = if *v < 0 { -b } else { b };
                }
            }
        }
        SignedPermutation { window: w }
    }

    /// `self * g` for generator `k` (acts on positions).
    pub fn right_mul_generator(&self, k: usize) -> Self {
        let mut w = self.window.clone();
        if k == 0 {
            w[0] = -w[0];
        } else {
            w.swap(k - 1, k);
        }
        SignedPermutation { window: w }
    }

    pub fn length_stats(&self) -> LengthStats {
        let w = &self.window;
        let n = w.len();
        let mut inv = 0;
        let mut nsp = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    inv += 1;
                }
                if w[i] + w[j] < 0 {
                    nsp += 1;
                }
            }
        }
        let neg = w.iter().filter(|&&v| v < 0).count();
        let ell = inv + nsp + neg;
        LengthStats {
            ell,
            ell_t: neg,
            ell_s: ell - neg,
        }
    }

    pub fn length(&self) -> usize {
        self.length_stats().ell
    }

    /// True iff `ell(g * self) < ell(self)`.
    pub fn has_left_descent(&self, k: usize) -> bool {
        if k == 0 {
            // t flips the sign of the value 1
            self.window.contains(&-1)
        } else {
            // s_k swaps the values k, k+1: descent iff k+1 appears before k,
            // read through the signed inverse
            let inv = self.inverse();
            inv.window[k - 1] > inv.window[k]
        }
    }

    /// True iff `ell(self * g) < ell(self)`.
    pub fn has_right_descent(&self, k: usize) -> bool {
        if k == 0 {
            self.window[0] < 0
        } else {
            self.window[k - 1] > self.window[k]
        }
    }

    /// A reduced word `g_1 ... g_l` with `self = g_1 * ... * g_l`, built by
    /// repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(k) = (0..self.n()).find(|&k| cur.has_left_descent(k)) {
            word.push(k);
            cur = cur.left_mul_generator(k);
        }
        word
    }

    pub fn is_involution(&self) -> bool {
        *self == self.inverse()
    }

    /// All `2^n n!` elements sorted by window.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i32 {
                    if !p.iter().any(|x: &i32| x.abs() == v) {
                        for s in [-v, v] {
                            let mut q = p.clone();
                            q.push(s);
                            next.push(q);
                        }
                    }
                }
            }
            perms = next;
        }
        let mut out: Vec<_> = perms
            .into_iter()
            .map(|window| SignedPermutation { window })
            .collect();
        out.sort();
        out
    }

    /// Bruhat order, decided by Deodhar's lifting property along a left descent of `x`.
    pub fn bruhat_leq(&self, x: &SignedPermutation) -> bool {
        let mut y = self.clone();
        let mut x = x.clone();
        loop {
            let ly = y.length();
            let lx = x.length();
            if ly > lx {
                return false;
            }
            if lx == 0 {
                return ly == 0;
            }
            let k = (0..x.n())
                .find(|&k| x.has_left_descent(k))
                .expect("nonidentity element has a descent");
            if y.has_left_descent(k) {
                y = y.left_mul_generator(k);
            }
            x = x.left_mul_generator(k);
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses a space-separated window such as `-3 1 -2`; the empty string is
    /// the element of `W_0`.
    fn from_str(s: &str) -> Result<Self> {
        let window = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `compose(x, y) = x * y`; errors on a size mismatch.
pub fn compose(x: &SignedPermutation, y: &SignedPermutation) -> Result<SignedPermutation> {
    x.compose(y)
}

pub fn longest_element(n: usize) -> SignedPermutation {
    SignedPermutation::longest(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    /// Breadth-first search over the Cayley graph for right multiplication;
    /// records the length and minimal number of `t` letters of each element.
    fn bfs(n: usize) -> HashMap<SignedPermutation, (usize, usize)> {
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(SignedPermutation::identity(n), (0, 0));
        queue.push_back(SignedPermutation::identity(n));
        while let Some(x) = queue.pop_front() {
            let (d, t) = dist[&x];
            for k in 0..n {
                let y = x.mul(&SignedPermutation::generator(n, k));
                let cand = (d + 1, t + usize::from(k == 0));
                match dist.get(&y) {
                    None => {
                        dist.insert(y.clone(), cand);
                        queue.push_back(y);
                    }
                    Some(&(dy, ty)) if dy == d + 1 => {
                        // every reduced word has the same t-count; keep the first and
                        // check consistency
                        assert_eq!(ty, cand.1, "t-count differs between reduced words");
                    }
                    _ => {}
                }
            }
        }
        dist
    }

    #[test]
    fn group_basics() {
        for x in SignedPermutation::all(3) {
            assert_eq!(x.mul(&x.inverse()), SignedPermutation::identity(3));
        }
        assert_eq!(w("-1").mul(&w("-1")), w("1"));
        assert_eq!(bfs(2).len(), 8);
        assert_eq!(SignedPermutation::all(3).len(), 48);
        assert!(w("1 2").compose(&w("1")).is_err());
    }

    #[test]
    fn longest_element_properties() {
        assert_eq!(longest_element(1), w("-1"));
        let w0 = longest_element(2);
        assert_eq!(w0, w("-1 -2"));
        assert_eq!(bfs(2)[&w0].0, 4);
        assert_eq!(w0.mul(&w0), SignedPermutation::identity(2));
        for n in 1..=4 {
            let max = SignedPermutation::all(n).iter().map(|x| x.length()).max().unwrap();
            assert_eq!(longest_element(n).length(), max);
        }
    }

    #[test]
    fn length_stats_match_breadth_first_search() {
        for n in 1..=4 {
            let dist = bfs(n);
            assert_eq!(dist.len(), (1..=n).product::<usize>() << n);
            for (x, &(d, t)) in &dist {
                let st = x.length_stats();
                assert_eq!((st.ell, st.ell_t), (d, t), "{}", x);
                assert_eq!(st.ell_s + st.ell_t, st.ell);
                let word = x.reduced_word();
                assert_eq!(word.len(), d);
                let prod = word
                    .iter()
                    .fold(SignedPermutation::identity(n), |acc, &k| {
                        acc.mul(&SignedPermutation::generator(n, k))
                    });
                assert_eq!(&prod, x);
            }
        }
        assert_eq!(SignedPermutation::identity(3).length_stats().ell, 0);
        let t = w("-1").length_stats();
        assert_eq!((t.ell, t.ell_t, t.ell_s), (1, 1, 0));
        let w0 = longest_element(2).length_stats();
        assert_eq!((w0.ell, w0.ell_t, w0.ell_s), (4, 2, 2));
    }

    #[test]
    fn descents_agree_with_lengths() {
        for x in SignedPermutation::all(3) {
            for k in 0..3 {
                let l = x.left_mul_generator(k);
                assert_eq!(l, SignedPermutation::generator(3, k).mul(&x));
                assert_eq!(x.has_left_descent(k), l.length() < x.length());
                let r = x.right_mul_generator(k);
                assert_eq!(r, x.mul(&SignedPermutation::generator(3, k)));
                assert_eq!(x.has_right_descent(k), r.length() < x.length());
            }
        }
    }

    /// Subword property: y <= x iff some subword of a reduced word of x is a
    /// word for y.
    fn bruhat_by_subwords(n: usize, x: &SignedPermutation) -> HashSet<SignedPermutation> {
        let word = x.reduced_word();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let mut e = SignedPermutation::identity(n);
            for (i, &k) in word.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    e = e.mul(&SignedPermutation::generator(n, k));
                }
            }
            out.insert(e);
        }
        out
    }

    #[test]
    fn bruhat_matches_subword_property() {
        for n in 1..=3 {
            let all = SignedPermutation::all(n);
            for x in &all {
                let below = bruhat_by_subwords(n, x);
                for y in &all {
                    assert_eq!(y.bruhat_leq(x), below.contains(y), "{} <= {}", y, x);
                }
                assert!(x.bruhat_leq(x));
                assert!(SignedPermutation::identity(n).bruhat_leq(x));
            }
        }
    }

    #[test]
    fn bruhat_relation_count_on_w2() {
        // transitive closure of the covers y = x * r, r a reflection, l(y) = l(x) - 1
        let n = 2;
        let all = SignedPermutation::all(n);
        let reflections: HashSet<SignedPermutation> = all
            .iter()
            .flat_map(|g| {
                (0..n).map(move |k| g.mul(&SignedPermutation::generator(n, k)).mul(&g.inverse()))
            })
            .collect();
        let idx = |x: &SignedPermutation| all.iter().position(|y| y == x).unwrap();
        let mut leq: HashSet<(usize, usize)> = (0..all.len()).map(|i| (i, i)).collect();
        for x in &all {
            for r in &reflections {
                let y = x.mul(r);
                if y.length() + 1 == x.length() {
                    leq.insert((idx(&y), idx(x)));
                }
            }
        }
        loop {
            let before = leq.len();
            let snapshot: Vec<_> = leq.iter().copied().collect();
            for &(a, b) in &snapshot {
                for &(c, d) in &snapshot {
                    if b == c {
                        leq.insert((a, d));
                    }
                }
            }
            if leq.len() == before {
                break;
            }
        }
        for (i, y) in all.iter().enumerate() {
            for (j, x) in all.iter().enumerate() {
                assert_eq!(y.bruhat_leq(x), leq.contains(&(i, j)));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("-3 1 -2").window(), &[-3, 1, -2]);
        assert_eq!(w("-3 1 -2").to_string(), "-3 1 -2");
        assert_eq!(w("").n(), 0);
        assert!("1 1".parse::<SignedPermutation>().is_err());
        assert!("0".parse::<SignedPermutation>().is_err());
    }
}
