mod common;

use std::collections::BTreeSet;

use common::*;
use spherical::enumerate::modulo_diagram_automorphisms;
use spherical::{enumerate_a_matrices, enumerate_systems, Family, SimpleSet, F4_CENSUS};

#[test]
fn f4_census_counts() {
    let report = enumerate_systems(f4(), None);
    assert_eq!(report.total, 266);
    assert!(report.diff(&F4_CENSUS).is_empty());
    assert!(report.systems.iter().all(|s| s.is_valid()));
    let distinct: BTreeSet<_> = report.systems.iter().map(|s| s.key()).collect();
    assert_eq!(distinct.len(), 266);
}

#[test]
fn rank_zero_is_every_sp() {
    let report = enumerate_systems(f4(), Some(0));
    assert_eq!(report.total, 16);
}

#[test]
fn a1_census() {
    let report = enumerate_systems(rs(Family::A, 1), None);
    let mut got: Vec<_> = report.systems.iter().map(|s| s.key()).collect();
    got.sort();
    let mut want = vec![
        (vec![], SimpleSet::EMPTY.0, vec![]),
        (vec![], SimpleSet::full(1).0, vec![]),
        (vec![vec![1]], SimpleSet::EMPTY.0, vec![vec![1], vec![1]]),
        (vec![vec![2]], SimpleSet::EMPTY.0, vec![]),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn a_matrix_enumeration() {
    let a1 = rs(Family::A, 1);
    assert_eq!(
        enumerate_a_matrices(&a1, &[vec![1]], SimpleSet::EMPTY).unwrap(),
        vec![vec![vec![1], vec![1]]]
    );
    let f4 = f4();
    let found =
        enumerate_a_matrices(&f4, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]], SimpleSet::EMPTY).unwrap();
    assert_eq!(found, vec![Vec::<Vec<i64>>::new()]);
    let e3 = a4_shared();
    let target = sorted(&[&[1, -1, 1], &[1, 0, -1], &[0, 1, -1], &[-1, 1, 1]]);
    let found = enumerate_a_matrices(&e3.rs, &e3.sigma, e3.sp).unwrap();
    assert!(found.iter().any(|m| {
        let mut m = m.clone();
        m.sort();
        m == target
    }));
}

#[test]
fn diagram_automorphisms_fold_the_census() {
    let a3 = rs(Family::A, 3);
    let full = enumerate_systems(a3.clone(), None);
    let folded = modulo_diagram_automorphisms(enumerate_systems(a3, None));
    assert!(folded.total < full.total);
    assert_eq!(
        modulo_diagram_automorphisms(enumerate_systems(f4(), None)).total,
        266
    );
}
