//! Rank-k numerical range from its half-plane description
//! `Λ_k(A) = {μ : 2 Re(e^{it}μ) ≤ λ_k(e^{it}A + e^{−it}A*) for all t}`.
//!
//! Sampling finitely many angles gives an outer approximation of the region.
//! Emptiness and `Outside` verdicts are exact because each sampled
//! constraint holds on all of `Λ_k`; nonemptiness is certified only by an
//! explicit isometry witness.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{chebyshev_center, intersect_halfplanes_with, ChebyshevResult, ConvexRegion, HalfPlane};
use crate::linalg::{hermitian_eigenvalues, hermitian_part_at, ComplexMatrix, C64};
use crate::settings::Settings;
use crate::witness::{synthesize_isometry_with, Isometry, SynthesisOptions};

/// Matrix, rank and discretization of one computation.
#[derive(Debug, Clone, PartialEq)]
pub struct RankRangeQuery {
    matrix: ComplexMatrix,
    k: usize,
    grid_size: usize,
    tolerance: f64,
    refine: bool,
}

impl RankRangeQuery {
    /// Query with the default grid (720 angles) and tolerance (`1e−9`).
    pub fn new(matrix: ComplexMatrix, k: usize) -> Result<Self> {
        Self::from_settings(matrix, k, &Settings::default())
    }

    pub fn from_settings(matrix: ComplexMatrix, k: usize, settings: &Settings) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", matrix.rows(), matrix.cols())));
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = matrix.rows();
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
        }
        RankRangeQuery { matrix, k, grid_size: 720, tolerance: settings.geometric_tol, refine: settings.refine }
            .with_grid(settings.grid_size)
    }

    pub fn with_grid(mut self, grid_size: usize) -> Result<Self> {
        if grid_size < 8 {
            return Err(Error::InvalidArgument(format!("grid size {grid_size} is below the minimum of 8")));
        }
        self.grid_size = grid_size;
        Ok(self)
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    /// Enables or disables the adaptive refinement pass.
    pub fn with_refine(mut self, refine: bool) -> Self {
        self.refine = refine;
        self
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn refine(&self) -> bool {
        self.refine
    }
}

/// `λ_k(e^{it}A + e^{−it}A*)`.
pub fn support_value(a: &ComplexMatrix, k: usize, t: f64) -> Result<f64> {
    let n = a.rows();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    Ok(hermitian_eigenvalues(&hermitian_part_at(a, t)?, 1e-14)?[k - 1])
}

/// Eigenvalues of `A(t_j)` on the uniform grid `t_j = 2πj/m`, shared by
/// every rank `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralGrid {
    angles: Vec<f64>,
    /// Descending eigenvalues per angle.
    values: Vec<Vec<f64>>,
}

/// Angle `j` of an `m`-point uniform grid.
pub fn grid_angle(j: usize, m: usize) -> f64 {
    TAU * j as f64 / m as f64
}

impl SpectralGrid {
    pub fn new(a: &ComplexMatrix, m: usize) -> Result<Self> {
        let angles: Vec<f64> = (0..m).map(|j| grid_angle(j, m)).collect();
        let values = angles
            .par_iter()
            .map(|&t| hermitian_eigenvalues(&hermitian_part_at(a, t)?, 1e-14))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectralGrid { angles, values })
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// `λ_k(A(t_j))` for every grid angle.
    pub fn support(&self, k: usize) -> Vec<f64> {
        self.values.iter().map(|v| v[k - 1]).collect()
    }

    pub fn halfplanes(&self, k: usize) -> Vec<HalfPlane> {
        self.angles.iter().zip(&self.values).map(|(&t, v)| HalfPlane::new(t, v[k - 1])).collect()
    }

    /// Grid index and value of the smallest slack `λ_k(A(t_j)) − 2 Re(e^{it_j}μ)`;
    /// ties within `1e−12` go to the lowest angle.
    pub fn min_slack(&self, k: usize, mu: C64) -> (usize, f64) {
        let slacks: Vec<f64> = self.angles.iter().zip(&self.values).map(|(&t, v)| slack(v[k - 1], t, mu)).collect();
        let min = slacks.iter().cloned().fold(f64::INFINITY, f64::min);
        let idx = slacks.iter().position(|&s| s <= min + 1e-12).unwrap_or(0);
        (idx, slacks[idx])
    }
}

#[inline]
fn slack(support: f64, t: f64, mu: C64) -> f64 {
    support - 2.0 * (C64::from_polar(1.0, t) * mu).re
}

/// Verdict of [`membership`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Membership {
    /// Every sampled constraint holds with slack above the tolerance.
    Inside,
    /// The smallest sampled slack lies within the tolerance of zero.
    Boundary,
    /// A violated constraint: `μ ∉ Λ_k(A)`.
    Outside { angle: f64, slack: f64 },
}

impl Membership {
    pub fn name(&self) -> &'static str {
        match self {
            Membership::Inside => "Inside",
            Membership::Boundary => "Boundary",
            Membership::Outside { .. } => "Outside",
        }
    }
}

/// Tests `μ` against the sampled half-planes.
pub fn membership(q: &RankRangeQuery, mu: C64) -> Result<Membership> {
    let grid = SpectralGrid::new(&q.matrix, q.grid_size)?;
    Ok(membership_on_grid(&grid, q.k, mu, q.tolerance))
}

pub fn membership_on_grid(grid: &SpectralGrid, k: usize, mu: C64, tol: f64) -> Membership {
    let (idx, s) = grid.min_slack(k, mu);
    if s < -tol {
        Membership::Outside { angle: grid.angles[idx], slack: s }
    } else if s <= tol {
        Membership::Boundary
    } else {
        Membership::Inside
    }
}

/// What accompanies a computed region.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// At most three angles whose half-planes alone have empty intersection.
    EmptyCertificate { angles: Vec<f64> },
    /// A verified point of `Λ_k(A)`.
    NonEmptyWitness { mu: C64, isometry: Isometry },
    /// Nonempty outer region without a verified witness.
    Approximate,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::EmptyCertificate { .. } => "EmptyCertificate",
            Certificate::NonEmptyWitness { .. } => "NonEmptyWitness",
            Certificate::Approximate => "Approximate",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankRangeResult {
    /// Outer approximation of `Λ_k(A)`.
    pub region: ConvexRegion,
    pub certificate: Certificate,
    /// The sampled constraints, refinement angles last.
    pub planes: Vec<HalfPlane>,
    pub chebyshev: ChebyshevResult,
}

/// Golden-section minimization of `f` on `[lo, hi]`.
fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Half-planes at the slack minimizers near the active angles of `cheb`.
fn refinement_planes(a: &ComplexMatrix, k: usize, planes: &[HalfPlane], cheb: &ChebyshevResult, m: usize) -> Vec<HalfPlane> {
    let h = TAU / m as f64;
    let center = cheb.center;
    let f = |t: f64| {
        support_value(a, k, t).map(|s| slack(s, t, center)).unwrap_or(f64::INFINITY)
    };
    let mut out = Vec::new();
    for &idx in &cheb.active_constraints {
        let t0 = planes[idx].angle();
        let (t, _) = golden_min(f, t0 - h, t0 + h, 40);
        if (t - t0).abs() < 1e-8 {
            continue;
        }
        if let Ok(s) = support_value(a, k, t) {
            out.push(HalfPlane::new(t, s));
        }
    }
    out
}

/// Outer approximation of `Λ_k(A)` with an emptiness certificate or a
/// witness at the Chebyshev center.
pub fn boundary_region(q: &RankRangeQuery) -> Result<RankRangeResult> {
    boundary_region_with(q, &Settings::default())
}

pub fn boundary_region_with(q: &RankRangeQuery, settings: &Settings) -> Result<RankRangeResult> {
    let grid = SpectralGrid::new(&q.matrix, q.grid_size)?;
    boundary_region_on_grid(q, &grid, settings, true)
}

/// [`boundary_region_with`] reusing precomputed grid eigenvalues; the
/// witness search runs only when `synthesize` is set.
pub fn boundary_region_on_grid(
    q: &RankRangeQuery,
    grid: &SpectralGrid,
    settings: &Settings,
    synthesize: bool,
) -> Result<RankRangeResult> {
    let k = q.k;
    let mut planes = grid.halfplanes(k);
    let mut cheb = chebyshev_center(&planes)?;
    if q.refine {
        let extra = refinement_planes(&q.matrix, k, &planes, &cheb, grid.len());
        if !extra.is_empty() {
            planes.extend(extra);
            cheb = chebyshev_center(&planes)?;
        }
    }
    let tol = q.tolerance;
    let mut region = intersect_halfplanes_with(&planes, settings.collapse_tol)?;
    if cheb.radius < -tol {
        let angles = cheb.active_constraints.iter().map(|&i| planes[i].angle()).collect();
        return Ok(RankRangeResult {
            region: ConvexRegion::Empty,
            certificate: Certificate::EmptyCertificate { angles },
            planes,
            chebyshev: cheb,
        });
    }
    if region.is_empty() {
        // infeasible only within tolerance: degenerate single point
        region = ConvexRegion::Point(cheb.center);
    }
    let certificate = if synthesize {
        let mu = cheb.center;
        let scale = q.matrix.max_abs().max(1.0);
        let thin = matches!(region, ConvexRegion::Point(_) | ConvexRegion::Segment(..)) || cheb.radius < 1e-6 * scale;
        let wtol = if thin { settings.boundary_witness_tol } else { settings.witness_tol };
        let opts = SynthesisOptions::from_settings(settings).with_tol(wtol);
        match synthesize_isometry_with(&q.matrix, k, mu, &opts) {
            Ok(isometry) => Certificate::NonEmptyWitness { mu, isometry },
            Err(Error::SynthesisFailed { .. }) => Certificate::Approximate,
            Err(e) => return Err(e),
        }
    } else {
        Certificate::Approximate
    };
    Ok(RankRangeResult { region, certificate, planes, chebyshev: cheb })
}

/// Sound three-way emptiness verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Emptiness {
    ProvablyEmpty { angles: Vec<f64> },
    ProvablyNonEmpty { mu: C64, isometry: Isometry },
    /// Nonempty outer region but no verified witness.
    Undecided { region: ConvexRegion },
}

impl Emptiness {
    pub fn name(&self) -> &'static str {
        match self {
            Emptiness::ProvablyEmpty { .. } => "ProvablyEmpty",
            Emptiness::ProvablyNonEmpty { .. } => "ProvablyNonEmpty",
            Emptiness::Undecided { .. } => "Undecided",
        }
    }
}

impl From<RankRangeResult> for Emptiness {
    fn from(r: RankRangeResult) -> Self {
        match r.certificate {
            Certificate::EmptyCertificate { angles } => Emptiness::ProvablyEmpty { angles },
            Certificate::NonEmptyWitness { mu, isometry } => Emptiness::ProvablyNonEmpty { mu, isometry },
            Certificate::Approximate => Emptiness::Undecided { region: r.region },
        }
    }
}

pub fn emptiness_check(q: &RankRangeQuery) -> Result<Emptiness> {
    emptiness_check_with(q, &Settings::default())
}

pub fn emptiness_check_with(q: &RankRangeQuery, settings: &Settings) -> Result<Emptiness> {
    Ok(boundary_region_with(q, settings)?.into())
}

/// Whether the region is provably empty, without attempting a witness.
pub fn is_provably_empty(q: &RankRangeQuery) -> Result<bool> {
    let grid = SpectralGrid::new(&q.matrix, q.grid_size)?;
    let r = boundary_region_on_grid(q, &grid, &Settings::default(), false)?;
    Ok(matches!(r.certificate, Certificate::EmptyCertificate { .. }))
}

/// A priori verdict from `n` and `k` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    /// `3(k − 1) < n`: every `n×n` matrix has nonempty `Λ_k`.
    GuaranteedNonEmpty,
    PossiblyEmpty,
}

pub fn nonemptiness_threshold(n: usize, k: usize) -> Result<Threshold> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    Ok(if crate::witness::below_threshold(n, k) { Threshold::GuaranteedNonEmpty } else { Threshold::PossiblyEmpty })
}
