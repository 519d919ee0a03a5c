//! Structure constants `h_{x,y,z}` and the invariants `a`, `Delta`, `n_z`,
//! `gamma` and the set `D`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::perm::SignedPermutation;

use super::KLTable;

/// Default ceiling for the full `h` table.
pub const DEFAULT_MAX_N: usize = 3;

type Sparse = BTreeMap<usize, Laurent>;

/// `C_{g_k}` applied to a combination of `C_u`.
fn lmul_c(table: &KLTable, k: usize, vec: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&u, c) in vec {
        for (z, m) in table.left_product(k, u) {
            *out.entry(z).or_default() += &(c * &m);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Every product `C_x C_y` in the C-basis, indexed `[x][y]`.
pub struct HTable {
    h: Vec<Vec<Vec<(u32, Laurent)>>>,
}

impl HTable {
    pub fn compute(table: &KLTable) -> Self {
        let g = &table.group;
        let n = g.len();
        let mut h: Vec<Vec<Vec<(u32, Laurent)>>> = Vec::with_capacity(n);
        let to_sparse = |v: &Vec<(u32, Laurent)>| -> Sparse {
            v.iter().map(|(z, c)| (*z as usize, c.clone())).collect()
        };
        for x in 0..n {
            let row: Vec<Vec<(u32, Laurent)>> = match g.first_left_descent(x) {
                None => (0..n).map(|y| vec![(y as u32, Laurent::one())]).collect(),
                Some(k) => {
                    let x1 = g.lmul[k][x];
                    (0..n)
                        .map(|y| {
                            let mut acc = lmul_c(table, k, &to_sparse(&h[x1][y]));
                            for (z, m) in table.mu(k, x1) {
                                for (u, c) in &h[*z as usize][y] {
                                    *acc.entry(*u as usize).or_default() -= &(c * m);
                                }
                            }
                            acc.into_iter()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(u, c)| (u as u32, c))
                                .collect()
                        })
                        .collect()
                }
            };
            h.push(row);
        }
        HTable { h }
    }

    /// `z -> h_{x,y,z}`.
    pub fn row(&self, x: usize, y: usize) -> &[(u32, Laurent)] {
        &self.h[x][y]
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> Laurent {
        let r = &self.h[x][y];
        r.binary_search_by_key(&(z as u32), |t| t.0)
            .map(|i| r[i].1.clone())
            .unwrap_or_default()
    }
}

/// `z -> h_{x,y,z}` for a single pair, keyed by element.
pub fn h_constants(
    table: &KLTable,
    x: &SignedPermutation,
    y: &SignedPermutation,
) -> Option<BTreeMap<SignedPermutation, Laurent>> {
    let g = &table.group;
    let xi = g.index_of(x)?;
    let yi = g.index_of(y)?;
    // C_u C_y for every u reached by the recursion on x, shortest first
    let mut needed: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![xi];
    while let Some(u) = stack.pop() {
        if !needed.insert(u) {
            continue;
        }
        if let Some(k) = g.first_left_descent(u) {
            let u1 = g.lmul[k][u];
            stack.push(u1);
            stack.extend(table.mu(k, u1).iter().map(|t| t.0 as usize));
        }
    }
    let mut memo: BTreeMap<usize, Sparse> = BTreeMap::new();
    let mut order: Vec<usize> = needed.into_iter().collect();
    order.sort_by_key(|&u| (g.length[u], u));
    for u in order {
        let val = match g.first_left_descent(u) {
            None => [(yi, Laurent::one())].into_iter().collect(),
            Some(k) => {
                let u1 = g.lmul[k][u];
                let mut acc = lmul_c(table, k, &memo[&u1]);
                for (z, m) in table.mu(k, u1) {
                    for (w, c) in &memo[&(*z as usize)] {
                        *acc.entry(*w).or_default() -= &(c * m);
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                acc
            }
        };
        memo.insert(u, val);
    }
    Some(
        memo.remove(&xi)?
            .into_iter()
            .map(|(z, c)| (g.element(z).clone(), c))
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticData {
    pub a_val: Vec<i32>,
    pub delta: Vec<i32>,
    pub n_z: Vec<i64>,
    /// Nonzero `gamma_{x,y,z}` keyed by group indices.
    pub gamma: BTreeMap<(u32, u32, u32), i64>,
    pub duflo: BTreeSet<usize>,
}

impl AsymptoticData {
    pub fn compute(table: &KLTable, max_n: usize) -> Result<(Self, HTable)> {
        if table.n > max_n {
            return Err(Error::ResourceBound(format!(
                "asymptotic data for n={} exceeds the bound {}",
                table.n, max_n
            )));
        }
        let g = &table.group;
        let n = g.len();
        let h = HTable::compute(table);
        let mut a_val = vec![0i32; n];
        for x in 0..n {
            for y in 0..n {
                for (z, c) in h.row(x, y) {
                    let d = c.degree().unwrap_or(0);
                    let a = &mut a_val[*z as usize];
                    *a = (*a).max(d);
                }
            }
        }
        let mut gamma = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                for (z, c) in h.row(x, y) {
                    let z = *z as usize;
                    let co = c.coeff(a_val[z]);
                    if co != 0 {
                        gamma.insert((x as u32, y as u32, g.inverse[z] as u32), co);
                    }
                }
            }
        }
        let mut delta = vec![0; n];
        let mut n_z = vec![0; n];
        for z in 0..n {
            let p = table.p_index(0, z);
            delta[z] = -p.degree().expect("p_{e,z} is nonzero");
            n_z[z] = p.leading_coeff();
        }
        let duflo = (0..n).filter(|&z| a_val[z] == delta[z]).collect();
        Ok((
            AsymptoticData {
                a_val,
                delta,
                n_z,
                gamma,
                duflo,
            },
            h,
        ))
    }

    pub fn gamma(&self, x: usize, y: usize, z: usize) -> i64 {
        self.gamma
            .get(&(x as u32, y as u32, z as u32))
            .copied()
            .unwrap_or(0)
    }
}
