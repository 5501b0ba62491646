//! Numerical tolerances shared by every module.

/// Environment variable overriding [`Settings::geometric_tol`].
pub const TOLERANCE_ENV: &str = "RANKRANGE_TOL";

/// One record holding every tolerance and iteration budget.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    /// Relative asymmetry accepted by the Hermitian eigensolver.
    pub hermitian_tol: f64,
    /// Projection residual cutoff for subspace intersections.
    pub subspace_tol: f64,
    /// Slack used for membership and emptiness decisions.
    pub geometric_tol: f64,
    /// Diameter/width below which a region collapses to a point or segment.
    pub collapse_tol: f64,
    /// Compression residual accepted for isometry witnesses.
    pub witness_tol: f64,
    /// Relaxed witness residual for targets on the region boundary.
    pub boundary_witness_tol: f64,
    /// Entrywise tolerance on `X*X = I`.
    pub isometry_tol: f64,
    /// Relative commutator norm accepted by the normality test.
    pub normal_tol: f64,
    /// Residual accepted by the Riccati solver.
    pub riccati_tol: f64,
    /// Number of uniformly spaced angles sampled on `[0, 2π)`.
    pub grid_size: usize,
    /// Whether the engine runs one adaptive refinement pass.
    pub refine: bool,
    /// Random starts used by isometry synthesis (the eigenspace start is extra).
    pub synthesis_starts: usize,
    /// Iteration cap per synthesis start.
    pub synthesis_max_iter: usize,
    /// Seed for synthesis starts.
    pub seed: u64,
    /// Upper bound on subsets enumerated by the normal-matrix oracle.
    pub combinatorial_limit: u128,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            hermitian_tol: 1e-10,
            subspace_tol: 1e-8,
            geometric_tol: 1e-9,
            collapse_tol: 1e-9,
            witness_tol: 1e-8,
            boundary_witness_tol: 1e-6,
            isometry_tol: 1e-10,
            normal_tol: 1e-10,
            riccati_tol: 1e-8,
            grid_size: 720,
            refine: true,
            synthesis_starts: 20,
            synthesis_max_iter: 5000,
            seed: 0x5eed,
            combinatorial_limit: 1_000_000,
        }
    }
}

impl Settings {
    /// Defaults with `RANKRANGE_TOL` applied when it parses as a positive float.
    pub fn from_env() -> Self {
        let mut s = Settings::default();
        if let Some(tol) = std::env::var(TOLERANCE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
        {
            s.geometric_tol = tol;
        }
        s
    }

    pub fn with_grid(mut self, grid_size: usize) -> Self {
        self.grid_size = grid_size;
        self
    }

    pub fn with_refine(mut self, refine: bool) -> Self {
        self.refine = refine;
        self
    }
}
