mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use spherical::{enumerate_systems, Family, Placement, SimpleSet, SphericalSystem, Violation};

fn census() -> &'static [SphericalSystem] {
    static CENSUS: OnceLock<Vec<SphericalSystem>> = OnceLock::new();
    CENSUS.get_or_init(|| enumerate_systems(f4(), None).systems)
}

fn owned_by(sys: &SphericalSystem, l: &[usize]) -> usize {
    let cs = sys.colors().unwrap();
    cs.colors
        .iter()
        .position(|c| c.owners() == labels(l))
        .expect("color present")
}

#[test]
fn validation_examples() {
    assert!(b4_doubled().is_valid());
    assert!(SphericalSystem::homogeneous(f4(), SimpleSet::EMPTY).is_valid());
    let c4 = rs(Family::C, 4);
    assert!(system(&c4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]], &[], &[]).is_valid());
    let bad = system(&f4(), &[&[2, 0, 0, 0], &[1, 1, 0, 0]], &[], &[]);
    assert!(bad
        .validate()
        .iter()
        .any(|v| matches!(v, Violation::Sigma1 { alpha: 0, .. })));
    assert!(bad.ensure_valid().is_err());
}

#[test]
fn defects() {
    assert_eq!(rank_one().defect().unwrap(), 0);
    assert_eq!(rank_two().defect().unwrap(), 1);
    assert_eq!(
        SphericalSystem::homogeneous(f4(), SimpleSet::EMPTY)
            .defect()
            .unwrap(),
        4
    );
}

#[test]
fn dimensions() {
    assert_eq!(rank_two().dimension().unwrap(), 26);
    assert_eq!(rank_one().dimension().unwrap(), 16);
    assert_eq!(
        SphericalSystem::homogeneous(f4(), SimpleSet::EMPTY)
            .dimension()
            .unwrap(),
        24
    );
}

#[test]
fn localization_by_spherical_roots() {
    let e4 = f4_three_roots();
    assert_eq!(
        e4.localize_sigma(&e4.sigma).unwrap().canonical_form(),
        e4.canonical_form()
    );
    let local = e4.localize_sigma(&[vec![1, 0, 0, 0]]).unwrap();
    assert!(local.is_valid());
    assert_eq!(sorted_rows(&local.a_rows), vec![vec![1], vec![1]]);
    let empty = e4.localize_sigma(&[]).unwrap();
    assert!(empty.sigma.is_empty() && empty.a_rows.is_empty() && empty.sp == e4.sp);
    assert!(e4.localize_sigma(&[vec![0, 0, 0, 1]]).is_err());
}

fn sorted_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut v = rows.to_vec();
    v.sort();
    v
}

#[test]
fn localization_by_simple_roots() {
    let e4 = f4_three_roots();
    assert_eq!(
        e4.localize_s(SimpleSet::full(4)).canonical_form(),
        e4.canonical_form()
    );
    let c4 = rs(Family::C, 4);
    let e2 = system(&c4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]], &[], &[]);
    let local = e2.localize_s(labels(&[2, 3]));
    assert_eq!(local.sigma, vec![vec![1, 1]]);
    assert!(local.is_valid());
    let s12 = s12();
    let b3 = s12.localize_s(labels(&[1, 2, 3]));
    assert_eq!(b3.rs.spec.to_string(), "B3");
    assert!(b3.is_valid());
}

#[test]
fn negative_colors() {
    let r2 = rank_two();
    let neg = r2.negative_colors().unwrap();
    assert_eq!(neg, vec![(owned_by(&r2, &[3]), Placement::Interior)]);
    assert!(rank_one().negative_colors().unwrap().is_empty());
    let flag = SphericalSystem::homogeneous(f4(), SimpleSet::EMPTY);
    let neg = flag.negative_colors().unwrap();
    assert_eq!(neg.len(), 4);
    assert!(neg.iter().all(|(_, p)| *p == Placement::Exterior));
}

#[test]
fn cuspidality() {
    assert!(rank_one().is_cuspidal().unwrap());
    assert!(!system(&f4(), &[&[1, 0, 0, 0]], &[], &[&[1], &[1]])
        .is_cuspidal()
        .unwrap());
    assert!(SphericalSystem::homogeneous(f4(), SimpleSet::full(4))
        .is_cuspidal()
        .unwrap());
}

#[test]
fn canonical_form_ignores_presentation() {
    let e3 = a4_shared();
    let mut shuffled = e3.clone();
    shuffled.a_rows.reverse();
    shuffled.a_rows.swap(0, 2);
    assert_eq!(shuffled.canonical_form(), e3.canonical_form());
    let e1 = b4_doubled();
    assert_eq!(e1.canonical_form().canonical_form(), e1.canonical_form());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_invariant_under_reordering(i in 0usize..266, seed in any::<u64>()) {
        let sys = census()[i].clone();
        let r = sys.rank();
        let mut perm: Vec<usize> = (0..r).collect();
        let mut s = seed;
        for k in (1..r).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let sigma = perm.iter().map(|&j| sys.sigma[j].clone()).collect();
        let mut rows: Vec<Vec<i64>> = sys.a_rows.iter().map(|row| perm.iter().map(|&j| row[j]).collect()).collect();
        let shift = (seed as usize) % rows.len().max(1);
        rows.rotate_left(shift);
        let moved = SphericalSystem::new(sys.rs.clone(), sigma, sys.sp, rows);
        prop_assert!(moved.is_valid());
        prop_assert_eq!(moved.canonical_form(), sys.canonical_form());
        prop_assert_eq!(moved.dimension().unwrap(), sys.dimension().unwrap());
    }
}
