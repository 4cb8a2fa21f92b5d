//! Shared fixtures for the benchmarks: a few standard models at the
//! sizes the engine actually runs at, built deterministically so runs
//! are comparable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use jembed_core::classify::VarietyModel;
use jembed_core::geometry::builders::{
    cone, linear_reembed, plane_through, rational_normal_curve, veronese,
};
use jembed_core::geometry::PolyMap;

/// Quadratic embedding of the plane plus one of its tangent planes.
pub fn veronese_tangent_pair() -> VarietyModel {
    let y = veronese("Y");
    let b = plane_through(
        "B",
        &[
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
        ],
    )
    .unwrap();
    VarietyModel::new(vec![y, b]).unwrap()
}

/// Cone in P^5 over a twisted cubic spanning the first 3-flat, apex at
/// the last coordinate point.
pub fn quartic_cone() -> PolyMap {
    let base = rational_normal_curve("C", 3).unwrap();
    let rows = vec![
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
    ];
    let base = linear_reembed(&base, &rows).unwrap();
    cone("K", &[0, 0, 0, 0, 0, 1], &base).unwrap()
}

/// Dense integer matrix for rank benchmarks, entries in [-9, 9].
pub fn dense_rows(rows: usize, cols: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(veronese_tangent_pair().components().len(), 2);
        assert_eq!(quartic_cone().ambient_dim(), 5);
        assert_eq!(dense_rows(4, 6, 1).len(), 4);
    }
}
