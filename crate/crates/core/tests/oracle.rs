mod common;

use common::*;
use cyclic_core::oracle::*;
use cyclic_core::witness::build_witness;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

#[test]
fn class_counts_up_to_eight() {
    let counts: Vec<usize> = (1..=8)
        .map(|n| enumerate_groups(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5]);
}

#[test]
fn order_four_and_eight() {
    let four = enumerate_groups(4).unwrap();
    assert!(four.iter().all(CayleyTable::is_abelian));
    assert_eq!(four.iter().filter(|t| t.is_cyclic()).count(), 1);
    assert_ne!(four[0].canonical_form(), four[1].canonical_form());

    let eight = enumerate_groups(8).unwrap();
    assert_eq!(eight.iter().filter(|t| t.is_cyclic()).count(), 1);
    assert_eq!(eight.iter().filter(|t| !t.is_abelian()).count(), 2);
}

#[test]
fn enumerated_tables_are_groups() {
    for n in 1..=8 {
        for t in enumerate_labeled_tables(n, 8).unwrap() {
            t.validate().unwrap();
        }
    }
}

#[test]
fn canonical_form_idempotent() {
    for n in 1..=8 {
        for t in enumerate_groups(n).unwrap() {
            assert_eq!(t.canonical_form(), t);
        }
    }
}

#[test]
fn canonical_form_invariant_under_relabeling() {
    let mut runner = TestRunner::new(Config::with_cases(500));
    for n in 2..=8usize {
        for t in enumerate_groups(n).unwrap() {
            let sigma_strategy = Just((1..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|rest| {
                    let mut s = vec![0];
                    s.extend(rest);
                    s
                });
            runner
                .run(&sigma_strategy, |sigma| {
                    let moved = t.relabel(&sigma);
                    prop_assert!(moved.validate().is_ok());
                    prop_assert_eq!(moved.canonical_form(), t.clone());
                    Ok(())
                })
                .unwrap();
        }
    }
}

#[test]
fn prime_orders_are_cyclic() {
    for p in [2, 3, 5, 7] {
        let classes = enumerate_groups(p).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes[0].is_cyclic());
    }
}

#[test]
fn regular_representations() {
    let trivial = &enumerate_groups(1).unwrap()[0];
    assert_eq!(trivial.regular_representation().order(), 1);
    for n in 1..=8 {
        for t in enumerate_groups(n).unwrap() {
            let g = t.regular_representation();
            assert_eq!(g.order(), n);
            assert_eq!(g.is_cyclic().is_some(), t.is_cyclic());
            assert_eq!(g.order_multiset(), t.order_multiset());
        }
    }
    let six = enumerate_groups(6).unwrap();
    let nonabelian = six.iter().find(|t| !t.is_abelian()).unwrap();
    let witness = group(&build_witness(6).unwrap().unwrap().generators);
    let rep = nonabelian.regular_representation();
    assert_eq!(rep.order(), witness.order());
    assert_eq!(rep.order_multiset(), witness.order_multiset());
    assert_eq!(rep.order_multiset(), s3().order_multiset());
}

#[test]
fn theorem_agreement() {
    let rows = verify_theorem_small(8).unwrap();
    for row in &rows {
        assert!(row.agrees(), "{row:?}");
    }
    for n in [1, 2, 3, 5, 7] {
        assert!(rows[n - 1].all_cyclic() && rows[n - 1].cyclic_number);
    }
    for n in [4, 6, 8] {
        assert!(!rows[n - 1].all_cyclic() && !rows[n - 1].cyclic_number);
    }
    assert_eq!((rows[5].classes, rows[5].cyclic_classes), (2, 1));
}

#[test]
fn witness_matches_some_class() {
    for n in 1..=8u64 {
        let Some(cert) = build_witness(n).unwrap() else {
            continue;
        };
        let multiset = group(&cert.generators).order_multiset();
        let classes = enumerate_groups(n as usize).unwrap();
        assert!(
            classes.iter().any(|t| t.order_multiset() == multiset),
            "n = {n}"
        );
    }
}

#[test]
fn orders_nine_and_ten() {
    for n in [9, 10] {
        let row = theorem_row(n, 10).unwrap();
        assert_eq!((row.classes, row.cyclic_classes), (2, 1));
        assert!(row.agrees());
    }
}
