//! Cell modules: the action of `C_s` on `e_y`, `y` in a left cell.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::Laurent;

use super::{CellPartition, KLTable, Side};

/// Square matrix over `Z`, row-major.
pub type Matrix = Vec<Vec<i64>>;

fn check_cell(table: &KLTable, cells: &CellPartition, cell: &[usize]) -> Result<Vec<usize>> {
    if cells.side != Side::Left {
        return Err(Error::NotACell("expected a left cell partition".into()));
    }
    if cell.iter().any(|&x| x >= table.len()) {
        return Err(Error::NotACell("index out of range".into()));
    }
    match cells.find_block(cell) {
        Some(b) => Ok(cells.members[b].clone()),
        None => Err(Error::NotACell(format!("{:?} is not a left cell", cell))),
    }
}

/// Matrices of `C_{g_k}` on the basis `e_y` (columns indexed by `y`),
/// for every generator, over `A`.
pub fn c_matrices(
    table: &KLTable,
    cells: &CellPartition,
    cell: &[usize],
) -> Result<Vec<Vec<Vec<Laurent>>>> {
    let members = check_cell(table, cells, cell)?;
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let d = members.len();
    Ok((0..table.group.generators())
        .map(|k| {
            let mut m = vec![vec![Laurent::zero(); d]; d];
            for (col, &y) in members.iter().enumerate() {
                for (z, c) in table.left_product(k, y) {
                    if let Some(&row) = pos.get(&z) {
                        m[row][col] += &c;
                    }
                }
            }
            m
        })
        .collect())
}

/// The `W_n`-action at `v = 1`: generator `k` acts by `1 - C_{g_k}|_{v=1}`.
///
/// With this normalization the cell `{e}` carries the trivial module.
pub fn cell_module_matrices(
    table: &KLTable,
    cells: &CellPartition,
    cell: &[usize],
) -> Result<Vec<Matrix>> {
    let cm = c_matrices(table, cells, cell)?;
    Ok(cm
        .into_iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| i64::from(i == j) - c.eval_one())
                        .collect()
                })
                .collect()
        })
        .collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0; m]; n];
    for i in 0..n {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Checks the Coxeter relations of type `B_n` for generator matrices.
pub fn check_relations(mats: &[Matrix]) -> std::result::Result<(), String> {
    let d = mats.first().map_or(0, Vec::len);
    let id = identity(d);
    let power = |m: &Matrix, e: u32| (0..e).fold(identity(d), |acc, _| mat_mul(&acc, m));
    for (i, a) in mats.iter().enumerate() {
        if mat_mul(a, a) != id {
            return Err(format!("generator {} does not square to 1", i));
        }
        for (j, b) in mats.iter().enumerate().skip(i + 1) {
            let order = match (i, j) {
                (0, 1) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            };
            if power(&mat_mul(a, b), order) != id {
                return Err(format!("braid relation fails for generators {} and {}", i, j));
            }
        }
    }
    Ok(())
}
