//! Checks shared by the integration tests and the acceptance target. Each
//! returns the number of instances examined, or a description of the first
//! failure.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use typeb_cells::cycles::{
    cycle_with_labels, cycles, move_through, move_through_set, non_core_open_cycles, orbit, Cycle,
};
use typeb_cells::partition::Square;
use typeb_cells::tableau::{enumerate_all_tableaux, enumerate_tableaux, is_variable, validate, DominoTableau};

pub type Check = Result<usize, String>;

pub fn all_tableaux(n_max: usize, r_max: usize) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        for n in 0..=n_max {
            out.extend(enumerate_all_tableaux(n, r));
        }
    }
    out
}

fn variable_squares(t: &DominoTableau, labels: &BTreeSet<u32>) -> BTreeSet<Square> {
    labels
        .iter()
        .flat_map(|&l| t.domino(l).unwrap())
        .filter(|&s| is_variable(s, t.rank()))
        .collect()
}

fn fixed_squares(t: &DominoTableau) -> Vec<(Square, u32)> {
    t.dominoes()
        .iter()
        .flat_map(|(&l, d)| d.iter().map(move |&s| (s, l)))
        .filter(|&(s, _)| !is_variable(s, t.rank()))
        .collect()
}

pub fn movable(t: &DominoTableau) -> Vec<Cycle> {
    cycles(t).into_iter().filter(|c| !c.core_open).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn cycles_partition_labels(ts: &[DominoTableau]) -> Check {
    for t in ts {
        let mut seen = BTreeSet::new();
        for c in cycles(t) {
            ensure(c.is_open() == (c.s_b.is_some() && c.s_f.is_some()), || {
                format!("open flag inconsistent in\n{}", t)
            })?;
            for l in &c.labels {
                ensure(seen.insert(*l), || format!("label {} in two cycles of\n{}", l, t))?;
            }
        }
        ensure(seen.iter().copied().eq(t.labels()), || format!("labels not covered in\n{}", t))?;
    }
    Ok(ts.len())
}

/// Validity, fixed squares untouched, labels off the cycle untouched.
pub fn validity_and_label_preservation(ts: &[DominoTableau]) -> Check {
    let mut k = 0;
    for t in ts {
        for c in movable(t) {
            let m = move_through(t, &c).map_err(|e| e.to_string())?;
            ensure(validate(&m), || format!("invalid image of\n{}{:?}", t, c.labels))?;
            ensure(fixed_squares(t) == fixed_squares(&m), || format!("fixed square moved in\n{}", t))?;
            for (&l, d) in t.dominoes() {
                if !c.labels.contains(&l) {
                    ensure(m.domino(l) == Some(*d), || format!("label {} moved off-cycle in\n{}", l, t))?;
                }
            }
            k += 1;
        }
    }
    Ok(k)
}

pub fn shape_arithmetic(ts: &[DominoTableau]) -> Check {
    let mut k = 0;
    for t in ts {
        for c in movable(t) {
            let m = move_through(t, &c).map_err(|e| e.to_string())?;
            match (c.s_b, c.s_f) {
                (Some(b), Some(f)) => {
                    ensure(b != f, || format!("s_b = s_f in\n{}", t))?;
                    let expect = t.shape().without_square(b).and_then(|p| p.with_square(f));
                    ensure(expect.as_ref() == Ok(m.shape()), || format!("shape arithmetic fails for\n{}", t))?;
                }
                _ => ensure(m.shape() == t.shape(), || format!("closed cycle changed shape in\n{}", t))?,
            }
            k += 1;
        }
    }
    Ok(k)
}

pub fn involution(ts: &[DominoTableau]) -> Check {
    let mut k = 0;
    for t in ts {
        for c in movable(t) {
            let m = move_through(t, &c).map_err(|e| e.to_string())?;
            let back = cycle_with_labels(&m, &c.labels)
                .ok_or_else(|| format!("label set lost after moving\n{}", t))?;
            ensure(move_through(&m, &back).ok().as_ref() == Some(t), || {
                format!("moving twice is not the identity on\n{}", t)
            })?;
            k += 1;
        }
    }
    Ok(k)
}

/// Commutation of disjoint moves and `2^k` orbit sizes.
pub fn commutation_and_orbits(ts: &[DominoTableau]) -> Check {
    for t in ts {
        let oc = non_core_open_cycles(t);
        let images: HashSet<DominoTableau> = orbit(t).into_iter().collect();
        ensure(images.len() == 1 << oc.len(), || format!("orbit of size {} for\n{}", images.len(), t))?;
        if oc.len() >= 2 {
            let fwd = move_through_set(t, &oc).map_err(|e| e.to_string())?;
            let rev: Vec<Cycle> = oc.iter().rev().cloned().collect();
            let bwd = move_through_set(t, &rev).map_err(|e| e.to_string())?;
            ensure(fwd == bwd, || format!("moves do not commute on\n{}", t))?;
        }
    }
    Ok(ts.len())
}

/// The image is the only tableau of its shape agreeing with `T` off the
/// variable squares of the cycle.
pub fn uniqueness_completion(ts: &[DominoTableau]) -> Check {
    let mut checked = 0;
    for t in ts {
        for c in movable(t).into_iter().filter(|c| c.is_open()) {
            let m = move_through(t, &c).map_err(|e| e.to_string())?;
            let mut free = variable_squares(t, &c.labels);
            free.extend(variable_squares(&m, &c.labels));
            let agrees = |u: &DominoTableau| {
                m.shape()
                    .squares()
                    .filter(|s| !free.contains(s))
                    .all(|s| u.label_at(s) == t.label_at(s))
            };
            let hits: Vec<DominoTableau> =
                enumerate_tableaux(m.shape()).into_iter().filter(agrees).collect();
            ensure(hits == vec![m.clone()], || format!("completion not unique for\n{}", t))?;
            checked += 1;
        }
    }
    Ok(checked)
}
