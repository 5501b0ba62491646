use crate::error::{Error, Result};
use crate::linalg::{dot, hermitian_eig, hermitian_part_at, subspace_intersection, ComplexMatrix, Subspace, C64};

/// A point of the numerical range satisfying three support constraints,
/// together with the unit vector producing it.
#[derive(Debug, Clone, PartialEq)]
pub struct HellyWitness {
    /// `v*Av`.
    pub mu: C64,
    pub vector: Vec<C64>,
    pub angles: [f64; 3],
    /// `λ_k(A(t_j)) − 2 Re(e^{it_j} μ)` for each angle.
    pub slacks: [f64; 3],
    /// Dimension of the intersected eigenspaces.
    pub dimension: usize,
}

/// Whether every `n×n` matrix is guaranteed a nonempty rank-`k` range,
/// i.e. `3(k − 1) < n`.
pub fn below_threshold(n: usize, k: usize) -> bool {
    3 * (k - 1) < n
}

/// Intersects, for each angle, the span of the eigenvectors of `A(t)` for
/// its `n − k + 1` smallest eigenvalues and returns `μ = v*Av` for a unit
/// vector `v` in the intersection.
pub fn helly_witness(a: &ComplexMatrix, k: usize, angles: [f64; 3], tol: f64) -> Result<HellyWitness> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows(), a.cols())));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    if !below_threshold(n, k) {
        return Err(Error::ThresholdViolated { n, k });
    }
    let [t1, t2, t3] = angles;
    if !(0.0 <= t1 && t1 < t2 && t2 < t3 && t3 < std::f64::consts::TAU) {
        return Err(Error::InvalidArgument("angles must satisfy 0 ≤ t1 < t2 < t3 < 2π".into()));
    }
    let mut spaces = Vec::with_capacity(3);
    let mut supports = [0.0; 3];
    for (j, &t) in angles.iter().enumerate() {
        let eig = hermitian_eig(&hermitian_part_at(a, t)?, 1e-14)?;
        supports[j] = eig.values[k - 1];
        spaces.push(Subspace::from_orthonormal(eig.eigenvectors(k - 1..n))?);
    }
    let meet = subspace_intersection(&spaces, tol)?;
    let expected = n + 3 - 3 * k;
    if meet.dim() < expected || meet.dim() == 0 {
        return Err(Error::EmptyIntersection { found: meet.dim(), expected });
    }
    let vector = meet.basis().column(0);
    let mu = dot(&vector, &a.matvec(&vector));
    let mut slacks = [0.0; 3];
    for j in 0..3 {
        slacks[j] = supports[j] - 2.0 * (C64::from_polar(1.0, angles[j]) * mu).re;
    }
    Ok(HellyWitness { mu, vector, angles, slacks, dimension: meet.dim() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::TAU;

    #[test]
    fn identity_gives_one() {
        let w = helly_witness(&ComplexMatrix::identity(4), 1, [0.0, 1.0, 2.0], 1e-8).unwrap();
        assert!((w.mu - c(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(w.dimension, 4);
    }

    #[test]
    fn seven_by_seven_rank_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let a = ComplexMatrix::random_gaussian(7, 7, &mut rng);
            let w = helly_witness(&a, 2, [0.0, 2.0, 4.0], 1e-8).unwrap();
            assert!(w.dimension >= 4);
            assert!(w.slacks.iter().all(|&s| s >= -1e-8), "{:?}", w.slacks);
        }
    }

    #[test]
    fn four_by_four_rank_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..10 {
            let a = ComplexMatrix::random_gaussian(4, 4, &mut rng);
            let t = [0.0, TAU / 3.0, 2.0 * TAU / 3.0];
            let w = helly_witness(&a, 2, t, 1e-8).unwrap();
            assert!(w.dimension >= 1);
            assert!(w.slacks.iter().all(|&s| s >= -1e-8));
            let _ = rng.gen::<u8>();
        }
    }

    #[test]
    fn threshold_and_angle_checks() {
        let a = ComplexMatrix::identity(3);
        assert_eq!(helly_witness(&a, 2, [0.0, 1.0, 2.0], 1e-8), Err(Error::ThresholdViolated { n: 3, k: 2 }));
        assert!(matches!(helly_witness(&a, 1, [1.0, 0.5, 2.0], 1e-8), Err(Error::InvalidArgument(_))));
    }
}
