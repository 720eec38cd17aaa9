//! Fixture systems shared by the integration tests. Simple roots are given
//! by 1-based labels, spherical roots by coefficient vectors.

#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use spherical::{root_system, Family, RootSystem, RootVector, SimpleSet, SphericalSystem};

pub fn rs(family: Family, rank: usize) -> Arc<RootSystem> {
    Arc::new(root_system(family, rank).expect("legal rank"))
}

pub fn f4() -> Arc<RootSystem> {
    static F4: OnceLock<Arc<RootSystem>> = OnceLock::new();
    F4.get_or_init(|| rs(Family::F, 4)).clone()
}

pub fn labels(l: &[usize]) -> SimpleSet {
    SimpleSet::from_indices(l.iter().map(|i| i - 1))
}

pub fn system(
    rs: &Arc<RootSystem>,
    sigma: &[&[i64]],
    sp: &[usize],
    rows: &[&[i64]],
) -> SphericalSystem {
    SphericalSystem::new(
        rs.clone(),
        sigma.iter().map(|s| s.to_vec()).collect(),
        labels(sp),
        rows.iter().map(|r| r.to_vec()).collect(),
    )
}

/// B4, all spherical roots doubled.
pub fn b4_doubled() -> SphericalSystem {
    system(
        &rs(Family::B, 4),
        &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 2]],
        &[4],
        &[],
    )
}

/// A4 with `Sigma = {a1, a2, a4}` and shared colors.
pub fn a4_shared() -> SphericalSystem {
    system(
        &rs(Family::A, 4),
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
        &[],
        &[&[1, -1, 1], &[1, 0, -1], &[0, 1, -1], &[-1, 1, 1]],
    )
}

/// F4 with `Sigma = {a1, a2+a3, a3+a4}`.
pub fn f4_three_roots() -> SphericalSystem {
    system(
        &f4(),
        &[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]],
        &[],
        &[&[1, 0, 0], &[1, -1, 0]],
    )
}

/// The F4 system of rank 2 with `Sigma = {a1+a4, a2+a3}`.
pub fn rank_two() -> SphericalSystem {
    system(&f4(), &[&[1, 0, 0, 1], &[0, 1, 1, 0]], &[], &[])
}

/// The strict cuspidal F4 system of rank 1 and dimension 16.
pub fn rank_one() -> SphericalSystem {
    system(&f4(), &[&[1, 2, 3, 2]], &[1, 2, 3], &[])
}

/// The defect-2 F4 system lying over the rank-one system.
pub fn s12() -> SphericalSystem {
    system(
        &f4(),
        &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        &[],
        &[
            &[0, 0, 1, -1],
            &[-2, 0, 1, 0],
            &[0, 0, -1, 1],
            &[0, -1, 0, 1],
        ],
    )
}

/// The A3 system with `Sigma = S` and five colors.
pub fn sl4() -> SphericalSystem {
    system(
        &rs(Family::A, 3),
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[],
        &[
            &[1, -1, 1],
            &[1, 0, -1],
            &[0, 1, 0],
            &[-1, 1, -1],
            &[-1, 0, 1],
        ],
    )
}

/// The B3 system with `Sigma = S` and four colors.
pub fn b3() -> SphericalSystem {
    system(
        &rs(Family::B, 3),
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[],
        &[&[1, 1, -1], &[1, -2, 1], &[-2, 1, 0], &[-1, 0, 1]],
    )
}

/// Full pairing with columns in the given order of spherical roots, rows
/// sorted.
pub fn table(sys: &SphericalSystem, order: &[RootVector]) -> Vec<Vec<i64>> {
    let cs = sys.colors().expect("valid fixture");
    let cols: Vec<usize> = order
        .iter()
        .map(|v| {
            sys.sigma
                .iter()
                .position(|s| s == v)
                .expect("root in Sigma")
        })
        .collect();
    let mut rows: Vec<Vec<i64>> = cs
        .colors
        .iter()
        .map(|c| cols.iter().map(|&j| c.row[j]).collect())
        .collect();
    rows.sort();
    rows
}

/// `A` rows with columns in the given order, sorted.
pub fn a_table(sys: &SphericalSystem, order: &[RootVector]) -> Vec<Vec<i64>> {
    let cols: Vec<usize> = order
        .iter()
        .map(|v| {
            sys.sigma
                .iter()
                .position(|s| s == v)
                .expect("root in Sigma")
        })
        .collect();
    let mut rows: Vec<Vec<i64>> = sys
        .a_rows
        .iter()
        .map(|r| cols.iter().map(|&j| r[j]).collect())
        .collect();
    rows.sort();
    rows
}

pub fn sorted(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    v.sort();
    v
}

pub fn vecs(v: &[&[i64]]) -> Vec<RootVector> {
    v.iter().map(|x| x.to_vec()).collect()
}

/// Index of the color with the given row (columns in the system's order).
pub fn color_with_row(sys: &SphericalSystem, row: &[i64]) -> usize {
    let cs = sys.colors().expect("valid fixture");
    cs.colors
        .iter()
        .position(|c| c.row == row)
        .expect("color present")
}
