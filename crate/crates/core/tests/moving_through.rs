mod common;

use std::collections::BTreeSet;

use common::all_tableaux as all;
use typeb_cells::cycles::{cycles, extended_open_cycles, move_through_set};
use typeb_cells::partition::Square;
use typeb_cells::tableau::{enumerate_all_tableaux, enumerate_tableaux};

#[test]
fn cycles_partition_labels() {
    common::cycles_partition_labels(&all(4, 2)).unwrap();
}

#[test]
fn moved_tableaux_are_valid_and_keep_fixed_squares() {
    common::validity_and_label_preservation(&all(4, 2)).unwrap();
}

#[test]
fn shape_arithmetic() {
    common::shape_arithmetic(&all(4, 2)).unwrap();
}

#[test]
fn moving_is_an_involution() {
    common::involution(&all(4, 2)).unwrap();
}

#[test]
fn disjoint_moves_commute_and_orbits_have_full_size() {
    common::commutation_and_orbits(&all(4, 2)).unwrap();
    for t in all(2, 1) {
        assert_eq!(move_through_set(&t, &[]).unwrap(), t);
    }
}

#[test]
fn move_through_set_rejects_closed_and_core_cycles() {
    for t in all(3, 2) {
        for c in cycles(&t) {
            if !c.is_non_core_open() {
                assert!(move_through_set(&t, &[c]).is_err());
            }
        }
    }
}

#[test]
fn uniqueness_completion() {
    assert!(common::uniqueness_completion(&all(5, 2)).unwrap() > 100);
}

#[test]
fn extended_cycles_of_a_tableau_with_itself() {
    for t in all(4, 2) {
        for e in extended_open_cycles(&t, &t).unwrap() {
            assert_eq!(e.cycles_in_t.len(), 1);
            assert_eq!(e.cycles_in_t, e.cycles_in_t2);
        }
    }
}

#[test]
fn extended_cycles_pair_both_sides() {
    for r in 0..=2 {
        for n in 1..=4 {
            for p in typeb_cells::partition::enumerate_rank_partitions(n, r) {
                let ts = enumerate_tableaux(&p);
                for a in &ts {
                    for b in &ts {
                        for e in extended_open_cycles(a, b).unwrap() {
                            assert!(!e.cycles_in_t.is_empty() && !e.cycles_in_t2.is_empty());
                            let removed: BTreeSet<Square> =
                                e.cycles_in_t.iter().filter_map(|c| c.s_b).collect();
                            let removed2: BTreeSet<Square> =
                                e.cycles_in_t2.iter().filter_map(|c| c.s_b).collect();
                            assert_eq!(removed, removed2);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn extended_cycles_reject_shape_mismatch() {
    let a = enumerate_all_tableaux(2, 0);
    let x = a.iter().find(|t| t.shape().parts() == [4]).unwrap();
    let y = a.iter().find(|t| t.shape().parts() == [2, 2]).unwrap();
    assert!(extended_open_cycles(x, y).is_err());
}
