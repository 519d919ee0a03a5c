//! Sparse Laurent polynomials in one variable `v` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[v, v^-1]`, stored as `(exponent, coefficient)` pairs sorted
/// by exponent with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: Vec<(i32, i64)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i32, coeff: i64) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Laurent {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// Builds a polynomial from arbitrary pairs, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(iter: I) -> Self {
        let mut terms: Vec<(i32, i64)> = iter.into_iter().collect();
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Laurent { terms: out }
    }

    /// `v^k + v^-k`, which is `2` when `k == 0`.
    pub fn symmetric(k: i32) -> Self {
        Self::from_terms([(k, 1), (-k, 1)])
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> i64 {
        self.terms.last().map_or(0, |t| t.1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .map_or(0, |i| self.terms[i].1)
    }

    /// The involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|&(e, c)| (e, c * k)).collect(),
        }
    }

    /// Terms with exponent strictly below zero.
    pub fn negative_part(&self) -> Self {
        Laurent {
            terms: self.terms.iter().copied().filter(|t| t.0 < 0).collect(),
        }
    }

    /// Terms with exponent zero or above.
    pub fn nonnegative_part(&self) -> Self {
        Laurent {
            terms: self.terms.iter().copied().filter(|t| t.0 >= 0).collect(),
        }
    }

    /// True when every exponent is strictly negative (membership in `v^-1 Z[v^-1]`).
    pub fn has_only_negative_exponents(&self) -> bool {
        self.terms.iter().all(|t| t.0 < 0)
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    fn merge(&self, other: &Self, sign: i64) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1 + sign * b[j].1;
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, sign * c)));
        Laurent { terms: out }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {} ", sign)?;
            } else {
                write!(f, "{}", sign)?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{}", a)?,
                (_, 1) => write!(f, "v^{}", e)?,
                _ => write!(f, "{}v^{}", a, e)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.merge(rhs, 1)
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self.merge(rhs, -1)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, 1)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, -1)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, 1);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, -1);
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms[0];
            return Laurent {
                terms: self.terms.iter().map(|&(a, b)| (a + e, b * c)).collect(),
            };
        }
        Laurent::from_terms(
            self.terms
                .iter()
                .flat_map(|&(a, b)| rhs.terms.iter().map(move |&(e, c)| (a + e, b * c))),
        )
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i32, i64)> = Vec::deserialize(d)?;
        Ok(Laurent::from_terms(pairs))
    }
}
