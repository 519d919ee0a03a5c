//! Acceptance criteria 1 to 10, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always show; the process
//! exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use num_rational::Ratio;
use typeb_cells::analysis::{
    cell_module_shapes, induction_shapes, verify_conjecture, verify_hom_dims,
    verify_module_structure, verify_properties, Session, VerifyOptions,
};
use typeb_cells::characters::CharacterTable;
use typeb_cells::insertion::{g_r, g_r_inverse};
use typeb_cells::partition::{enumerate_rank_partitions, rank_and_core, Partition};
use typeb_cells::perm::SignedPermutation;
use typeb_cells::report::worked_examples;
use typeb_cells::symbols::{
    bipartition_to_partition, bipartition_to_symbol, constructible_set, partition_to_bipartition,
    partition_to_symbol, sign_on_bipartition, symbol_to_bipartition, symbol_to_partition,
    truncated_induction_shapes, WeightParams,
};
use typeb_cells::tableau::enumerate_tableaux;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// `s = b / a` as `(a, b)`.
const SMALL: [(u32, u32); 8] = [(2, 1), (1, 1), (2, 3), (1, 2), (2, 5), (1, 3), (2, 7), (1, 4)];
const N4_CONJECTURE: [(u32, u32); 6] = [(2, 1), (1, 1), (2, 3), (1, 2), (1, 3), (2, 9)];
const N4_MODULES: [(u32, u32); 3] = [(1, 1), (1, 2), (2, 5)];
const HOM: [(u32, u32); 3] = [(1, 1), (1, 2), (2, 5)];
const CONSTRUCTIBLE: [(u32, u32); 5] = [(2, 1), (1, 1), (2, 3), (1, 2), (1, 3)];

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

fn order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << n
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn c1_rs_bijection() -> Outcome {
    for n in 0..=5 {
        let ws = SignedPermutation::all(n);
        for r in 0..=4 {
            let mut seen = HashSet::new();
            for w in &ws {
                let pair = g_r(w, r);
                if pair.left.shape() != pair.right.shape() {
                    return Err(format!("shapes differ for {:?}, r = {}", w, r));
                }
                if !seen.insert(pair) {
                    return Err(format!("G_{} not injective at {:?}", r, w));
                }
            }
            let total: u128 = enumerate_rank_partitions(n, r)
                .iter()
                .map(|q| (enumerate_tableaux(q).len() as u128).pow(2))
                .sum();
            if total != order(n) {
                return Err(format!("n = {}, r = {}: sum of squares {} != {}", n, r, total, order(n)));
            }
        }
    }
    Ok("n <= 5, r <= 4".into())
}

fn c2_roundtrips() -> Outcome {
    for r in 0..=3 {
        for w in SignedPermutation::all(4) {
            let back = g_r_inverse(&g_r(&w, r)).map_err(|e| e.to_string())?;
            if back != w {
                return Err(format!("g_r_inverse(g_r({:?})) = {:?}, r = {}", w, back, r));
            }
        }
    }
    let eps = [Ratio::from_integer(0), Ratio::new(1, 2)];
    let mut count = 0;
    for n in 0..=8 {
        for r in 0..=5 {
            for q in enumerate_rank_partitions(n, r) {
                for &e in &eps {
                    let sym = partition_to_symbol(&q, e);
                    if symbol_to_partition(&sym) != q {
                        return Err(format!("symbol roundtrip fails on {}", q));
                    }
                    let bp = symbol_to_bipartition(&sym);
                    let sym2 = bipartition_to_symbol(&bp, r + 1, e);
                    if !sym2.equivalent(&sym) {
                        return Err(format!("bipartition -> symbol fails on {}", q));
                    }
                }
                let bp = partition_to_bipartition(&q);
                if bp.size() != n || bipartition_to_partition(&bp, r) != q {
                    return Err(format!("bipartition roundtrip fails on {}", q));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{} partitions", count))
}

fn c3_worked_examples() -> Outcome {
    let dec = rank_and_core(&p("4,3,3,1"));
    let direct = [
        (dec.rank == 2 && dec.core == p("2,1"), "rank/core of (4,3,3,1)"),
        (
            partition_to_symbol(&p("4,3,2,2"), Ratio::new(1, 2)).render() == "[½ 2½ 3½ 4½ / 1]",
            "symbol of (4,3,2,2)",
        ),
        (
            partition_to_bipartition(&p("4,3,2,2")).to_string() == "((1,1,1), (1))",
            "bipartition of (4,3,2,2)",
        ),
        (
            bipartition_to_partition(&sign_on_bipartition(&partition_to_bipartition(&p("4,3,2,2"))), 2)
                == p("4,4,2,1"),
            "sign of (4,3,2,2)",
        ),
        (
            truncated_induction_shapes(&p("4,3,2,2,2"), 4, &WeightParams::new(1, 3).unwrap())
                .map(|v| v == vec![p("6,5,4,4,2"), p("6,5,4,3,3")])
                .unwrap_or(false),
            "induction of (4,3,2,2,2)",
        ),
    ];
    for (ok, what) in direct {
        if !ok {
            return Err(what.into());
        }
    }
    let expect = [
        "rank 2, core (2,1)",
        "[½ 2½ 3½ 4½ / 1]",
        "((1,1,1), (1))",
        "(4,4,2,1)",
        "(6,5,4,4,2) + (6,5,4,3,3)",
    ];
    let got: Vec<String> = worked_examples().into_iter().map(|e| e.value).collect();
    if got != expect {
        return Err(format!("report renders {:?}", got));
    }
    Ok("5 examples".into())
}

fn runs(list: &[(usize, &[(u32, u32)])]) -> Vec<(usize, u32, u32)> {
    list.iter()
        .flat_map(|&(n, ws)| ws.iter().map(move |&(a, b)| (n, a, b)))
        .collect()
}

fn conjecture_runs() -> Vec<(usize, u32, u32)> {
    runs(&[(1, &SMALL), (2, &SMALL), (3, &SMALL), (4, &N4_CONJECTURE)])
}

fn c4_conjecture() -> Outcome {
    let all = conjecture_runs();
    for &(n, a, b) in &all {
        let s = Session::new(n, a, b, &opts()).map_err(|e| e.to_string())?;
        let res = verify_conjecture(&s);
        if !res.passed {
            return Err(format!("n = {}, s = {}/{}: {:?}", n, b, a, res.mismatch));
        }
    }
    Ok(format!("{} runs", all.len()))
}

fn c5_modules() -> Outcome {
    let all = runs(&[(1, &SMALL), (2, &SMALL), (3, &SMALL), (4, &N4_MODULES)]);
    let mut cells = 0;
    for &(n, a, b) in &all {
        let ct = CharacterTable::new(n).map_err(|e| e.to_string())?;
        let s = Session::new(n, a, b, &opts()).map_err(|e| e.to_string())?;
        let res = verify_module_structure(&s, &ct).map_err(|e| e.to_string())?;
        if !res.passed {
            let bad = res.cells.iter().find(|c| !(c.matches && c.multiplicity_free && c.tableau_counts_match_degrees));
            return Err(format!("n = {}, s = {}/{}: {:?}", n, b, a, bad));
        }
        cells += res.cells.len();
    }
    Ok(format!("{} runs, {} cells", all.len(), cells))
}

fn c6_hom() -> Outcome {
    let all = runs(&[(1, &HOM), (2, &HOM), (3, &HOM)]);
    for &(n, a, b) in &all {
        let ct = CharacterTable::new(n).map_err(|e| e.to_string())?;
        let s = Session::new(n, a, b, &opts()).map_err(|e| e.to_string())?;
        let res = verify_hom_dims(&s, &ct).map_err(|e| e.to_string())?;
        if !res.passed || res.total as u128 != order(n) {
            return Err(format!("n = {}, s = {}/{}", n, b, a));
        }
    }
    Ok(format!("{} runs", all.len()))
}

fn c7_properties() -> Outcome {
    let mut gated = 0;
    let mut diagnostic = Vec::new();
    for n in 1..=3usize {
        let mut weights: Vec<(u32, u32)> = SMALL.to_vec();
        weights.push((1, n as u32 + 1));
        weights.sort_by_key(|&(a, b)| Ratio::new(b, a));
        weights.dedup();
        for (a, b) in weights {
            let s = Session::new(n, a, b, &opts()).map_err(|e| e.to_string())?;
            let res = verify_properties(&s, &opts()).map_err(|e| e.to_string())?;
            let must = (a, b) == (1, 1) || (a, b) == (1, n as u32 + 1);
            if must {
                if !res.passed {
                    let bad: Vec<String> = res
                        .results
                        .iter()
                        .filter(|r| !r.passed)
                        .map(|r| r.property.to_string())
                        .collect();
                    return Err(format!("n = {}, s = {}/{}: {}", n, b, a, bad.join(",")));
                }
                gated += 1;
            } else if !res.passed {
                let bad: Vec<String> = res
                    .results
                    .iter()
                    .filter(|r| !r.passed)
                    .map(|r| r.property.to_string())
                    .collect();
                diagnostic.push(format!("n={} s={}/{} fails {}", n, b, a, bad.join(",")));
            }
        }
    }
    for d in &diagnostic {
        println!("    diagnostic: {}", d);
    }
    Ok(format!("{} gating runs, {} diagnostic failures", gated, diagnostic.len()))
}

fn c8_moving_through() -> Outcome {
    let ts = common::all_tableaux(4, 2);
    let mut moves = 0;
    moves += common::cycles_partition_labels(&ts)?;
    moves += common::validity_and_label_preservation(&ts)?;
    moves += common::shape_arithmetic(&ts)?;
    moves += common::involution(&ts)?;
    moves += common::commutation_and_orbits(&ts)?;
    let completions = common::uniqueness_completion(&common::all_tableaux(5, 2))?;
    Ok(format!("{} tableaux, {} checks, {} completions", ts.len(), moves, completions))
}

fn c9_induction() -> Outcome {
    let mut k = 0;
    for w in SignedPermutation::all(3) {
        for l in 1..=2 {
            for r in 0..=2 {
                let (direct, predicted) = induction_shapes(&w, l, r);
                if direct != predicted {
                    return Err(format!(
                        "w' = {:?}, l = {}, r = {}: direct {:?}, predicted {:?}",
                        w.window(),
                        l,
                        r,
                        direct,
                        predicted
                    ));
                }
                k += 1;
            }
        }
    }
    Ok(format!("{} cases", k))
}

fn c10_constructible() -> Outcome {
    let all = runs(&[(1, &CONSTRUCTIBLE), (2, &CONSTRUCTIBLE), (3, &CONSTRUCTIBLE)]);
    for &(n, a, b) in &all {
        let ct = CharacterTable::new(n).map_err(|e| e.to_string())?;
        let s = Session::new(n, a, b, &opts()).map_err(|e| e.to_string())?;
        let computed = cell_module_shapes(&s, &ct).map_err(|e| e.to_string())?;
        let wp = WeightParams::new(a, b).map_err(|e| e.to_string())?;
        let constructible: BTreeSet<Vec<Partition>> = constructible_set(n, &wp);
        if computed != constructible {
            return Err(format!(
                "n = {}, s = {}/{}: cells {:?} vs constructible {:?}",
                n, b, a, computed, constructible
            ));
        }
    }
    Ok(format!("{} runs", all.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 RS bijection", c1_rs_bijection),
        ("2 roundtrips", c2_roundtrips),
        ("3 worked examples", c3_worked_examples),
        ("4 cells conjecture", c4_conjecture),
        ("5 module structure", c5_modules),
        ("6 hom dimensions", c6_hom),
        ("7 properties", c7_properties),
        ("8 moving through", c8_moving_through),
        ("9 induction shapes", c9_induction),
        ("10 constructible", c10_constructible),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} ({}, {:.1}s)", name, detail, secs),
            Err(why) => {
                println!("FAIL {}: {}", name, why);
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 10/10 criteria passed");
    } else {
        println!("acceptance: failed {:?}", failed);
        std::process::exit(1);
    }
}
