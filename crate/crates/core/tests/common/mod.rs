#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::engine::{boundary_region_on_grid, RankRangeQuery, SpectralGrid};
use rankrange::geometry::{hausdorff_distance, ConvexRegion};
use rankrange::{ComplexMatrix, Settings, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(n: usize, seed: u64) -> ComplexMatrix {
    ComplexMatrix::random_gaussian(n, n, &mut rng(seed))
}

/// `U diag(λ) U*` with seeded eigenvalues in the unit square scaled by `radius`.
pub fn random_normal(n: usize, radius: f64, seed: u64) -> (ComplexMatrix, Vec<C64>) {
    use rand::Rng;
    let mut r = rng(seed);
    let eig: Vec<C64> = (0..n).map(|_| C64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)) * radius).collect();
    let u = ComplexMatrix::random_unitary(n, &mut r);
    let a = &(&u * &ComplexMatrix::from_diag(&eig)) * &u.adjoint();
    (a, eig)
}

/// Outer region without the witness search.
pub fn outer_region(a: &ComplexMatrix, k: usize, m: usize, refine: bool) -> ConvexRegion {
    let q = RankRangeQuery::new(a.clone(), k).unwrap().with_grid(m).unwrap().with_refine(refine);
    let grid = SpectralGrid::new(a, m).unwrap();
    boundary_region_on_grid(&q, &grid, &Settings::default(), false).unwrap().region
}

/// Hausdorff distance, zero when both are empty, infinite when only one is.
pub fn region_gap(a: &ConvexRegion, b: &ConvexRegion) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => 0.0,
        (false, false) => hausdorff_distance(a, b).unwrap(),
        _ => f64::INFINITY,
    }
}

/// Whether every vertex of `inner` lies in `outer` up to `tol`.
pub fn vertices_inside(inner: &ConvexRegion, outer: &ConvexRegion, tol: f64) -> bool {
    inner.is_empty() || inner.vertices().iter().all(|&v| outer.contains(v, tol))
}

pub fn same_vertex_set(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| (p - q).norm() <= tol))
}
