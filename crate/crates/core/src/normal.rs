//! Exact rank-k numerical range of a normal matrix from its spectrum.
//!
//! For normal `A` with eigenvalues `λ_1, …, λ_n`, the range is the
//! intersection of `conv{λ_j : j ∈ S}` over all index sets `S` of size
//! `n − k + 1`.

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, intersect_halfplanes_with, ConvexRegion, HalfPlane};
use crate::linalg::{hermitian_eig, ComplexMatrix, C64};

/// Eigenvalues of a normal matrix, with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalSpectrum {
    eigenvalues: Vec<C64>,
}

impl NormalSpectrum {
    pub fn new(eigenvalues: Vec<C64>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::InvalidArgument("spectrum must contain at least one eigenvalue".into()));
        }
        if eigenvalues.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(NormalSpectrum { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[C64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest eigenvalue modulus.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `C(n, r)` without overflow for the sizes of interest.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Calls `f` on every `r`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let mut i = r;
        while i > 0 && idx[i - 1] == n - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact `Λ_k` of a normal matrix with the given spectrum.
pub fn normal_exact_region(spec: &NormalSpectrum, k: usize) -> Result<ConvexRegion> {
    normal_exact_region_with(spec, k, 1_000_000, crate::geometry::DEFAULT_COLLAPSE)
}

/// [`normal_exact_region`] with an explicit subset limit and collapse tolerance.
pub fn normal_exact_region_with(
    spec: &NormalSpectrum,
    k: usize,
    limit: u128,
    collapse_tol: f64,
) -> Result<ConvexRegion> {
    let n = spec.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    let r = n - k + 1;
    let subsets = binomial(n, r);
    if subsets > limit {
        return Err(Error::CombinatorialLimit { subsets, limit });
    }
    let mut planes: Vec<HalfPlane> = Vec::new();
    let mut points = Vec::with_capacity(r);
    for_each_subset(n, r, |s| {
        points.clear();
        points.extend(s.iter().map(|&j| spec.eigenvalues[j]));
        planes.extend(convex_hull(&points, collapse_tol).to_halfplanes());
    });
    intersect_halfplanes_with(&planes, collapse_tol)
}

/// Whether `‖AA* − A*A‖ ≤ tol·‖A‖²` in the max-entry norm.
pub fn is_normal(a: &ComplexMatrix, tol: f64) -> bool {
    if !a.is_square() {
        return false;
    }
    let ah = a.adjoint();
    let comm = &(a * &ah) - &(&ah * a);
    let scale = a.max_abs();
    comm.max_abs() <= tol * scale * scale
}

/// Spectrum of a normal matrix, read off the common eigenvectors of its
/// Hermitian and skew-Hermitian parts.
pub fn normal_spectrum(a: &ComplexMatrix, tol: f64) -> Result<NormalSpectrum> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows(), a.cols())));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    if !is_normal(a, tol) {
        let ah = a.adjoint();
        let commutator = (&(a * &ah) - &(&ah * a)).max_abs();
        return Err(Error::NotNormal { commutator });
    }
    // a generic real combination separates the joint eigenspaces
    let phi = std::f64::consts::SQRT_2 - 0.5 * std::f64::consts::E.recip();
    let h = a.hermitian_part();
    let g = a.skew_hermitian_part().scale(C64::new(0.0, -1.0));
    let combo = (&h + &g.scale_real(phi)).hermitian_part();
    let eig = hermitian_eig(&combo, 1e-14)?;
    let eigenvalues = (0..a.rows())
        .map(|j| {
            let v = eig.vectors.column(j);
            let av = a.matvec(&v);
            crate::linalg::dot(&v, &av)
        })
        .collect();
    NormalSpectrum::new(eigenvalues)
}
