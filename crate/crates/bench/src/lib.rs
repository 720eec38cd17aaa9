//! Inputs shared by the benchmarks under `benches/`.

use std::sync::Arc;

use spherical::{root_system, Family, RootSystem, SimpleSet, SphericalSystem};

pub fn f4() -> Arc<RootSystem> {
    Arc::new(root_system(Family::F, 4).expect("F4 exists"))
}

/// The F4 system with `Sigma = S` whose quotients pass through a projective color.
pub fn f4_full_rank(rs: &Arc<RootSystem>) -> SphericalSystem {
    let rows = [
        [1, 0, 0, 0],
        [1, -1, 0, 0],
        [0, 0, 1, 0],
        [0, -2, 1, -1],
        [0, 1, -1, 1],
        [-1, 1, 0, -1],
        [0, -1, 0, 1],
    ];
    SphericalSystem::new(
        rs.clone(),
        (0..4)
            .map(|i| (0..4).map(|j| i64::from(i == j)).collect())
            .collect(),
        SimpleSet::EMPTY,
        rows.iter().map(|r| r.to_vec()).collect(),
    )
}

/// The A3 system with `Sigma = S` and five colors.
pub fn sl4() -> SphericalSystem {
    let rs = Arc::new(root_system(Family::A, 3).expect("A3 exists"));
    let rows = [[1, -1, 1], [1, 0, -1], [0, 1, 0], [-1, 1, -1], [-1, 0, 1]];
    SphericalSystem::new(
        rs,
        (0..3)
            .map(|i| (0..3).map(|j| i64::from(i == j)).collect())
            .collect(),
        SimpleSet::EMPTY,
        rows.iter().map(|r| r.to_vec()).collect(),
    )
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_valid() {
        let rs = super::f4();
        assert!(super::f4_full_rank(&rs).is_valid());
        assert!(super::sl4().is_valid());
    }
}
