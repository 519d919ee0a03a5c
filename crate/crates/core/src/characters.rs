//! Characters of the hyperoctahedral group `W_n`.
//!
//! Irreducibles are labeled by bipartitions `(d, f)` with `((n), ())` trivial
//! and `((), (1^n))` the sign. Values come from the Murnaghan–Nakayama rule
//! for `Z/2 wr S_n`: removing a rim hook from `f` for a negative cycle picks
//! up an extra factor `-1`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::module::{check_relations, identity, mat_mul, Matrix};
use crate::partition::{enumerate_bipartitions, Bipartition, Partition};
use crate::perm::SignedPermutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Lengths of the positive cycles.
    pub positive_type: Partition,
    /// Lengths of the negative cycles.
    pub negative_type: Partition,
    pub size: u128,
    /// Generator indices `k` (`0` is `t`) with the representative `g_{k_1} ... g_{k_l}`.
    pub representative_word: Vec<usize>,
}

impl ConjugacyClass {
    pub fn label(&self) -> String {
        let join = |p: &Partition| {
            p.parts()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(".")
        };
        format!("{}|{}", join(&self.positive_type), join(&self.negative_type))
    }

    pub fn representative(&self, n: usize) -> SignedPermutation {
        word_to_element(n, &self.representative_word)
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn word_to_element(n: usize, word: &[usize]) -> SignedPermutation {
    word.iter().fold(SignedPermutation::identity(n), |acc, &k| {
        acc.mul(&SignedPermutation::generator(n, k))
    })
}

/// `(positive, negative)` cycle lengths of a signed permutation.
pub fn signed_cycle_type(w: &SignedPermutation) -> (Partition, Partition) {
    let n = w.n();
    let win = w.window();
    let mut seen = vec![false; n];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut negs, mut i) = (0, 0, start);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            if win[i] < 0 {
                negs += 1;
            }
            i = win[i].unsigned_abs() as usize - 1;
        }
        if negs % 2 == 0 {
            pos.push(len);
        } else {
            neg.push(len);
        }
    }
    (Partition::from_unsorted(pos), Partition::from_unsorted(neg))
}

fn centralizer(p: &Partition) -> u128 {
    let mut counts: HashMap<usize, u32> = HashMap::new();
    for &k in p.parts() {
        *counts.entry(k).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(k, m)| (2 * k as u128).pow(m) * (1..=m as u128).product::<u128>())
        .product()
}

fn order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << n
}

/// Negative cycles first, each as a sign change conjugated into its block
/// followed by adjacent transpositions; then the positive cycles.
fn class_word(alpha: &Partition, beta: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 1;
    for &k in beta.parts() {
        word.extend((1..start).rev());
        word.push(0);
        word.extend(1..start);
        word.extend(start..start + k - 1);
        start += k;
    }
    for &k in alpha.parts() {
        word.extend(start..start + k - 1);
        start += k;
    }
    word
}

/// All classes, the identity first: by decreasing size of the positive
/// part, then each cycle type in increasing lexicographic order.
pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    let w = order(n);
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for alpha in Partition::all(k).into_iter().rev() {
            for beta in Partition::all(n - k).into_iter().rev() {
                out.push(ConjugacyClass {
                    size: w / (centralizer(&alpha) * centralizer(&beta)),
                    representative_word: class_word(&alpha, &beta),
                    positive_type: alpha.clone(),
                    negative_type: beta,
                });
            }
        }
    }
    out
}

/// Rim hooks of length `k`: the partitions left over, with leg lengths.
fn remove_rim_hooks(p: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let m = p.len();
    let beta = p.beta_numbers(m);
    let mut out = Vec::new();
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let nb: Vec<usize> = beta.iter().map(|&c| if c == b { b - k } else { c }).collect();
        out.push((Partition::from_beta_numbers(&nb), height));
    }
    out
}

type Memo = HashMap<(Bipartition, usize), i64>;

fn mn(bp: &Bipartition, cycles: &[(usize, bool)], memo: &mut Memo) -> i64 {
    let Some(&(k, negative)) = cycles.first() else {
        return 1;
    };
    let key = (bp.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let rest = &cycles[1..];
    let mut total = 0;
    for (d, h) in remove_rim_hooks(&bp.d, k) {
        let s = if h % 2 == 0 { 1 } else { -1 };
        total += s * mn(&Bipartition::new(d, bp.f.clone()), rest, memo);
    }
    for (f, h) in remove_rim_hooks(&bp.f, k) {
        let mut s = if h % 2 == 0 { 1 } else { -1 };
        if negative {
            s = -s;
        }
        total += s * mn(&Bipartition::new(bp.d.clone(), f), rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `chi^{(d,f)}` on a class.
pub fn character_value(bp: &Bipartition, class: &ConjugacyClass) -> i64 {
    let cycles: Vec<(usize, bool)> = class
        .negative_type
        .parts()
        .iter()
        .map(|&k| (k, true))
        .chain(class.positive_type.parts().iter().map(|&k| (k, false)))
        .collect();
    mn(bp, &cycles, &mut Memo::new())
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<ConjugacyClass>,
    pub labels: Vec<Bipartition>,
    pub rows: Vec<Vec<i64>>,
}

/// Largest `n` for which a table is built.
pub const MAX_TABLE_N: usize = 10;

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_TABLE_N {
            return Err(Error::ResourceBound(format!(
                "character table for n={} exceeds the bound {}",
                n, MAX_TABLE_N
            )));
        }
        let classes = conjugacy_classes(n);
        let labels = enumerate_bipartitions(n);
        let rows = labels
            .iter()
            .map(|bp| {
                classes.iter().map(|c| character_value(bp, c)).collect()
            })
            .collect();
        Ok(CharacterTable {
            n,
            classes,
            labels,
            rows,
        })
    }

    pub fn order(&self) -> u128 {
        order(self.n)
    }

    pub fn row(&self, bp: &Bipartition) -> Option<&[i64]> {
        let i = self.labels.iter().position(|b| b == bp)?;
        Some(&self.rows[i])
    }

    /// `sum_c |c| chi(c) psi(c)`; characters of `W_n` are real.
    pub fn pairing(&self, chi: &[i64], psi: &[i64]) -> i128 {
        self.classes
            .iter()
            .zip(chi.iter().zip(psi))
            .map(|(c, (&x, &y))| c.size as i128 * x as i128 * y as i128)
            .sum()
    }

    /// Rows are bipartitions, columns classes; the first two lines carry the
    /// class labels and sizes.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class");
        for c in &self.classes {
            out.push_str(&format!(",{}", c.label()));
        }
        out.push_str("\nsize");
        for c in &self.classes {
            out.push_str(&format!(",{}", c.size));
        }
        out.push('\n');
        for (bp, row) in self.labels.iter().zip(&self.rows) {
            out.push_str(&format!("\"{}\"", bp));
            for v in row {
                out.push_str(&format!(",{}", v));
            }
            out.push('\n');
        }
        out
    }
}

/// Trace of each class representative acting through generator matrices.
pub fn module_character(mats: &[Matrix], n: usize) -> Result<Vec<i64>> {
    if mats.len() != n {
        return Err(Error::Character(format!(
            "expected {} generator matrices, found {}",
            n,
            mats.len()
        )));
    }
    check_relations(mats).map_err(Error::Character)?;
    let d = mats.first().map_or(0, Vec::len);
    Ok(conjugacy_classes(n)
        .iter()
        .map(|c| {
            let m = c
                .representative_word
                .iter()
                .fold(identity(d), |acc, &k| mat_mul(&acc, &mats[k]));
            (0..d).map(|i| m[i][i]).sum()
        })
        .collect())
}

/// Multiplicities of the irreducibles in `chi`, omitting zeros.
pub fn decompose(chi: &[i64], table: &CharacterTable) -> Result<Vec<(Bipartition, u64)>> {
    let w = table.order() as i128;
    let mut out = Vec::new();
    for (bp, row) in table.labels.iter().zip(&table.rows) {
        let s = table.pairing(chi, row);
        if s % w != 0 || s < 0 {
            return Err(Error::Character(format!(
                "multiplicity of {} is {}/{}",
                bp, s, w
            )));
        }
        if s > 0 {
            out.push((bp.clone(), (s / w) as u64));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(d: &[usize], f: &[usize]) -> Bipartition {
        Bipartition::new(
            Partition::new(d.to_vec()).unwrap(),
            Partition::new(f.to_vec()).unwrap(),
        )
    }

    #[test]
    fn class_counts_and_sizes() {
        assert_eq!(conjugacy_classes(1).len(), 2);
        assert_eq!(conjugacy_classes(2).len(), 5);
        for n in 1..=5 {
            let total: u128 = conjugacy_classes(n).iter().map(|c| c.size).sum();
            assert_eq!(total, order(n));
        }
    }

    #[test]
    fn representatives_have_their_type() {
        for n in 1..=5 {
            let mut count: HashMap<(Partition, Partition), u128> = HashMap::new();
            for w in SignedPermutation::all(n) {
                *count.entry(signed_cycle_type(&w)).or_default() += 1;
            }
            for c in conjugacy_classes(n) {
                let rep = c.representative(n);
                assert_eq!(
                    signed_cycle_type(&rep),
                    (c.positive_type.clone(), c.negative_type.clone())
                );
                assert_eq!(count[&(c.positive_type.clone(), c.negative_type.clone())], c.size);
            }
        }
    }

    #[test]
    fn orthogonality_and_degrees() {
        for n in 1..=5 {
            let t = CharacterTable::new(n).unwrap();
            let w = t.order() as i128;
            for i in 0..t.rows.len() {
                for j in 0..t.rows.len() {
                    let expect = if i == j { w } else { 0 };
                    assert_eq!(t.pairing(&t.rows[i], &t.rows[j]), expect);
                }
                assert_eq!(t.rows[i][0] as u128, t.labels[i].degree());
            }
            let sq: u128 = t.labels.iter().map(|b| b.degree() * b.degree()).sum();
            assert_eq!(sq, t.order());
        }
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=4 {
            let t = CharacterTable::new(n).unwrap();
            let triv = t.row(&bp(&[n], &[])).unwrap();
            assert!(triv.iter().all(|&v| v == 1));
            let sign = t.row(&bp(&[], &vec![1; n])).unwrap();
            for (c, &v) in t.classes.iter().zip(sign) {
                let l = c.representative(n).length();
                assert_eq!(v, if l % 2 == 0 { 1 } else { -1 });
            }
        }
        let t4 = CharacterTable::new(4).unwrap();
        assert_eq!(t4.row(&bp(&[1, 1, 1], &[1])).unwrap()[0], 4);
    }

    #[test]
    fn decompose_regular() {
        let t = CharacterTable::new(3).unwrap();
        let mut reg = vec![0; t.classes.len()];
        reg[0] = 48;
        for (b, m) in decompose(&reg, &t).unwrap() {
            assert_eq!(m as u128, b.degree());
        }
        let triv = t.row(&bp(&[3], &[])).unwrap().to_vec();
        assert_eq!(decompose(&triv, &t).unwrap(), vec![(bp(&[3], &[]), 1)]);
        let mut bad = vec![0; t.classes.len()];
        bad[0] = 1;
        assert!(decompose(&bad, &t).is_err());
    }

    #[test]
    fn matrices_give_characters() {
        // the sign module of W_2 from 1x1 matrices
        let mats = vec![vec![vec![-1]], vec![vec![-1]]];
        let chi = module_character(&mats, 2).unwrap();
        let t = CharacterTable::new(2).unwrap();
        assert_eq!(decompose(&chi, &t).unwrap(), vec![(bp(&[], &[1, 1]), 1)]);
        // a generator that does not square to 1
        let bad = vec![vec![vec![2]], vec![vec![1]]];
        assert!(module_character(&bad, 2).is_err());
    }
}
