//! Matrices with empty rank-k numerical range:
//! `I_{k−1} ⊕ wI_{k−1} ⊕ w²I_{k−1}` with `w = e^{2πi/3}`, its leading
//! principal submatrices, and non-normal perturbations of them.

use std::f64::consts::TAU;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::engine::{is_provably_empty, RankRangeQuery};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// Size, rank and optional perturbation of a counterexample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexampleSpec {
    pub n: usize,
    pub k: usize,
    /// Size `ε ≥ 0` of the strictly upper triangular perturbation.
    pub perturbation: f64,
    pub seed: u64,
}

impl CounterexampleSpec {
    /// Unperturbed spec; requires `3k ≥ n + 3`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        if 3 * k < n + 3 {
            return Err(Error::ThresholdViolated { n, k });
        }
        Ok(CounterexampleSpec { n, k, perturbation: 0.0, seed: 0 })
    }

    pub fn with_perturbation(mut self, epsilon: f64, seed: u64) -> Result<Self> {
        if !(epsilon >= 0.0) || !epsilon.is_finite() {
            return Err(Error::InvalidArgument(format!("perturbation {epsilon} must be finite and nonnegative")));
        }
        self.perturbation = epsilon;
        self.seed = seed;
        Ok(self)
    }
}

/// Primitive cube root of unity.
pub fn cube_root_of_unity() -> C64 {
    C64::from_polar(1.0, TAU / 3.0)
}

/// The unperturbed matrix: the full direct sum when `3k = n + 3`, its
/// leading `n×n` block when `3k > n + 3`.
pub fn build_counterexample(spec: &CounterexampleSpec) -> Result<ComplexMatrix> {
    let CounterexampleSpec { n, k, .. } = *spec;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if 3 * k < n + 3 {
        return Err(Error::ThresholdViolated { n, k });
    }
    let w = cube_root_of_unity();
    let block = k - 1;
    let diag: Vec<C64> = (0..3 * block).map(|i| w.powu((i / block) as u32)).take(n).collect();
    Ok(ComplexMatrix::from_diag(&diag))
}

/// The matrix described by `spec`, perturbed when `spec.perturbation > 0`.
pub fn build_perturbed(spec: &CounterexampleSpec) -> Result<ComplexMatrix> {
    let a = build_counterexample(spec)?;
    if spec.perturbation == 0.0 {
        return Ok(a);
    }
    perturb_nonnormal(&a, spec.k, spec.perturbation, spec.seed)
}

/// Seeded strictly upper triangular complex Gaussian matrix scaled to unit
/// largest entry (zero for `n = 1`).
pub fn perturbation_direction(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            m[(i, j)] = C64::new(re, im);
        }
    }
    let scale = m.max_abs();
    if scale > 0.0 {
        m.scale_real(1.0 / scale)
    } else {
        m
    }
}

/// `A + εN` for the seeded direction `N`, checked to keep `Λ_k` provably
/// empty. On failure, bisection reports the largest tested `ε` that still
/// preserves emptiness.
pub fn perturb_nonnormal(a: &ComplexMatrix, k: usize, epsilon: f64, seed: u64) -> Result<ComplexMatrix> {
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(Error::InvalidArgument(format!("perturbation {epsilon} must be finite and nonnegative")));
    }
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows(), a.cols())));
    }
    if epsilon == 0.0 {
        return Ok(a.clone());
    }
    let dir = perturbation_direction(a.rows(), seed);
    let at = |eps: f64| a + &dir.scale_real(eps);
    let empty_at = |eps: f64| -> Result<bool> { is_provably_empty(&RankRangeQuery::new(at(eps), k)?) };
    if empty_at(epsilon)? {
        return Ok(at(epsilon));
    }
    let (mut lo, mut hi) = (0.0, epsilon);
    if !empty_at(0.0)? {
        return Err(Error::EmptinessLost { largest_preserving: 0.0 });
    }
    for _ in 0..20 {
        let mid = 0.5 * (lo + hi);
        if empty_at(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::EmptinessLost { largest_preserving: lo })
}
