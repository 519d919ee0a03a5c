//! Weight sweeps and the fixed set of worked examples.
//!
//! The symbol example for `(4,3,2,2)` with `ε = 1/2` is computed at rank 2,
//! the rank of the shape, so the symbol has defect 3. A label of "r = 3"
//! attached to that example would not be consistent with its own symbol and
//! is treated as a misprint.

use num_rational::Ratio;
use serde::Serialize;

use crate::analysis::{run_verification, Check, VerificationReport, VerifyOptions};
use crate::error::Result;
use crate::partition::{rank_and_core, Partition};
use crate::symbols::{
    bipartition_to_partition, partition_to_bipartition, partition_to_symbol,
    sign_on_bipartition, truncated_induction_shapes, WeightParams,
};

/// `(a, b)` in lowest terms for `s` in {1/2, 1, 3/2, 2, 5/2, 3, n-1/2, n, n+1},
/// sorted by `s` without repeats.
pub fn default_sweep(n: usize) -> Vec<(u32, u32)> {
    let n = n as u32;
    let mut s: Vec<Ratio<u32>> = [(1, 2), (1, 1), (3, 2), (2, 1), (5, 2), (3, 1)]
        .into_iter()
        .map(|(p, q)| Ratio::new(p, q))
        .collect();
    if n >= 1 {
        s.push(Ratio::new(2 * n - 1, 2));
        s.push(Ratio::from_integer(n));
    }
    s.push(Ratio::from_integer(n + 1));
    s.sort();
    s.dedup();
    s.into_iter().map(|r| (*r.denom(), *r.numer())).collect()
}

pub fn sweep(n: usize, weights: &[(u32, u32)], opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    weights
        .iter()
        .map(|&(a, b)| run_verification(n, a, b, &Check::ALL, opts))
        .collect()
}

pub fn sweep_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(VerificationReport::CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WorkedExample {
    pub name: &'static str,
    pub value: String,
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

/// The worked examples, each rendered as a single line.
pub fn worked_examples() -> Vec<WorkedExample> {
    let dec = rank_and_core(&p("4,3,3,1"));
    let half = Ratio::new(1, 2);
    let q = p("4,3,2,2");
    let sym = partition_to_symbol(&q, half);
    let bp = partition_to_bipartition(&q);
    let signed = bipartition_to_partition(&sign_on_bipartition(&bp), 2);
    let wp = WeightParams::new(1, 3).expect("positive weights");
    let induced = truncated_induction_shapes(&p("4,3,2,2,2"), 4, &wp).expect("rank 2");
    vec![
        WorkedExample {
            name: "rank and core of (4,3,3,1)",
            value: format!("rank {}, core {}", dec.rank, dec.core),
        },
        WorkedExample {
            name: "symbol of (4,3,2,2), eps 1/2",
            value: sym.render(),
        },
        WorkedExample {
            name: "bipartition of (4,3,2,2)",
            value: bp.to_string(),
        },
        WorkedExample {
            name: "sign of (4,3,2,2)",
            value: signed.to_string(),
        },
        WorkedExample {
            name: "J((4,3,2,2,2) x sgn_4), s = 3",
            value: induced
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" + "),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_weights() {
        assert_eq!(
            default_sweep(3),
            vec![(2, 1), (1, 1), (2, 3), (1, 2), (2, 5), (1, 3), (1, 4)]
        );
        assert_eq!(default_sweep(1).first(), Some(&(2, 1)));
        assert!(default_sweep(5).contains(&(2, 9)));
    }

    #[test]
    fn examples() {
        let ex = worked_examples();
        let v: Vec<&str> = ex.iter().map(|e| e.value.as_str()).collect();
        assert_eq!(v[0], "rank 2, core (2,1)");
        assert_eq!(v[1], "[½ 2½ 3½ 4½ / 1]");
        assert_eq!(v[2], "((1,1,1), (1))");
        assert_eq!(v[3], "(4,4,2,1)");
        assert_eq!(v[4], "(6,5,4,4,2) + (6,5,4,3,3)");
    }
}
