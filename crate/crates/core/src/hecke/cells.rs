//! Left, right and two-sided cells from the preorders generated by
//! `C_s C_x`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::error::Error;
use crate::perm::SignedPermutation;

use super::KLTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two-sided" | "twosided" | "two_sided" => Ok(Side::TwoSided),
            _ => Err(Error::Parse(format!("unknown side {:?}", s))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

/// Cells of one side, as blocks of group indices.
#[derive(Clone, Debug)]
pub struct CellPartition {
    pub side: Side,
    /// Blocks sorted by their smallest index; members sorted.
    pub members: Vec<Vec<usize>>,
    /// `block_of[x]` for every group index.
    pub block_of: Vec<usize>,
    /// `below[i]`: blocks `j` with block `j` `<=` block `i` (reflexive).
    pub below: Vec<BTreeSet<usize>>,
}

/// Direct edges `x -> y` meaning `y <= x` for the left preorder.
pub fn left_edges(table: &KLTable) -> Vec<Vec<usize>> {
    let g = &table.group;
    (0..g.len())
        .map(|x| {
            let mut out: BTreeSet<usize> = BTreeSet::new();
            for k in 0..g.generators() {
                for (y, _) in table.left_product(k, x) {
                    if y != x {
                        out.insert(y);
                    }
                }
            }
            out.into_iter().collect()
        })
        .collect()
}

fn right_from_left(table: &KLTable, left: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let inv = &table.group.inverse;
    let mut out = vec![Vec::new(); left.len()];
    for (x, ys) in left.iter().enumerate() {
        out[inv[x]] = ys.iter().map(|&y| inv[y]).collect();
    }
    out
}

impl CellPartition {
    pub fn compute(table: &KLTable, side: Side) -> Self {
        let left = left_edges(table);
        let edges = match side {
            Side::Left => left,
            Side::Right => right_from_left(table, &left),
            Side::TwoSided => {
                let right = right_from_left(table, &left);
                left.into_iter()
                    .zip(right)
                    .map(|(mut a, b)| {
                        a.extend(b);
                        a.sort_unstable();
                        a.dedup();
                        a
                    })
                    .collect()
            }
        };
        Self::from_edges(side, &edges)
    }

    fn from_edges(side: Side, edges: &[Vec<usize>]) -> Self {
        let n = edges.len();
        let mut graph = DiGraph::<(), ()>::with_capacity(n, 0);
        let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
        for (x, ys) in edges.iter().enumerate() {
            for &y in ys {
                graph.add_edge(nodes[x], nodes[y], ());
            }
        }
        let mut members: Vec<Vec<usize>> = tarjan_scc(&graph)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|ix| ix.index()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        members.sort();
        let mut block_of = vec![0; n];
        for (b, m) in members.iter().enumerate() {
            for &x in m {
                block_of[x] = b;
            }
        }
        // reachability between blocks
        let nb = members.len();
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nb];
        for (x, ys) in edges.iter().enumerate() {
            for &y in ys {
                if block_of[x] != block_of[y] {
                    succ[block_of[x]].insert(block_of[y]);
                }
            }
        }
        let below = (0..nb)
            .map(|b| {
                let mut seen: BTreeSet<usize> = [b].into_iter().collect();
                let mut stack = vec![b];
                while let Some(c) = stack.pop() {
                    for &d in &succ[c] {
                        if seen.insert(d) {
                            stack.push(d);
                        }
                    }
                }
                seen
            })
            .collect();
        CellPartition {
            side,
            members,
            block_of,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True iff `y <= x` in this preorder (group indices).
    pub fn leq(&self, y: usize, x: usize) -> bool {
        self.below[self.block_of[x]].contains(&self.block_of[y])
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Blocks as signed permutations, each sorted by window.
    pub fn blocks(&self, table: &KLTable) -> Vec<Vec<SignedPermutation>> {
        self.members
            .iter()
            .map(|m| {
                let mut v: Vec<SignedPermutation> =
                    m.iter().map(|&x| table.group.element(x).clone()).collect();
                v.sort();
                v
            })
            .collect()
    }

    /// Index of the block equal to the given set, if any.
    pub fn find_block(&self, cell: &[usize]) -> Option<usize> {
        let first = *cell.first()?;
        let b = self.block_of[first];
        let mut sorted = cell.to_vec();
        sorted.sort_unstable();
        (self.members[b] == sorted).then_some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::WeightFunction;

    #[test]
    fn rank_one_cells() {
        for (a, b) in [(1, 1), (1, 2), (3, 1)] {
            let t = KLTable::compute(1, WeightFunction::new(a, b).unwrap(), 5).unwrap();
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                let c = CellPartition::compute(&t, side);
                assert_eq!(c.len(), 2);
                // e sits above t
                assert!(c.leq(1, 0));
                assert!(!c.leq(0, 1));
            }
        }
    }

    #[test]
    fn blocks_partition_the_group() {
        for n in 1..=3 {
            let t = KLTable::compute(n, WeightFunction::new(1, 2).unwrap(), 5).unwrap();
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                let c = CellPartition::compute(&t, side);
                let total: usize = c.members.iter().map(Vec::len).sum();
                assert_eq!(total, t.len());
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        if i != j {
                            assert!(!(c.below[i].contains(&j) && c.below[j].contains(&i)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_side() {
        assert_eq!("left".parse::<Side>().unwrap(), Side::Left);
        assert_eq!("two-sided".parse::<Side>().unwrap(), Side::TwoSided);
        assert!("up".parse::<Side>().is_err());
    }
}
