//! The Riccati equation `HPH − H(M* − I/2) − (M − I/2)H − I = 0` and its
//! unexpanded form `I + MH + HM* − HPH = H`.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, hermitian_eigenvalues, inverse, solve, ComplexMatrix, C64};

/// Coefficients `M` (arbitrary) and `P` (Hermitian positive definite).
#[derive(Debug, Clone, PartialEq)]
pub struct RiccatiProblem {
    m: ComplexMatrix,
    p: ComplexMatrix,
}

impl RiccatiProblem {
    pub fn new(m: ComplexMatrix, p: ComplexMatrix) -> Result<Self> {
        if !m.is_square() || !p.is_square() || m.rows() != p.rows() {
            return Err(Error::DimensionMismatch("M and P must be square of equal size".into()));
        }
        if !m.is_finite() || !p.is_finite() {
            return Err(Error::NonFinite);
        }
        let asymmetry = p.hermitian_defect();
        if asymmetry > 1e-12 * p.max_abs().max(1.0) {
            return Err(Error::NotHermitian { asymmetry });
        }
        let p = p.hermitian_part();
        let min_eig = *hermitian_eigenvalues(&p, 1e-14)?.last().unwrap();
        if !(min_eig > 0.0) {
            return Err(Error::InvalidArgument(format!("P is not positive definite (smallest eigenvalue {min_eig:.3e})")));
        }
        Ok(RiccatiProblem { m, p })
    }

    pub fn m(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn p(&self) -> &ComplexMatrix {
        &self.p
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    /// `M − I/2`.
    fn shifted(&self) -> ComplexMatrix {
        self.m.shift(C64::new(-0.5, 0.0))
    }
}

/// `HPH − H(M* − I/2) − (M − I/2)H − I`.
pub fn riccati_residual(h: &ComplexMatrix, prob: &RiccatiProblem) -> ComplexMatrix {
    let b = prob.shifted();
    let hph = &(h * &prob.p) * h;
    let hb = h * &b.adjoint();
    let bh = &b * h;
    (&(&hph - &hb) - &bh).shift(C64::new(-1.0, 0.0))
}

/// `H − (I + MH + HM* − HPH)`, right side minus left side of the
/// unexpanded equation; it agrees entrywise with [`riccati_residual`].
pub fn unexpanded_residual(h: &ComplexMatrix, prob: &RiccatiProblem) -> ComplexMatrix {
    let k = prob.dim();
    let mh = &prob.m * h;
    let hm = h * &prob.m.adjoint();
    let hph = &(h * &prob.p) * h;
    let lhs = &(&(&ComplexMatrix::identity(k) + &mh) + &hm) - &hph;
    h - &lhs
}

/// Whether `H` satisfies `I + MH + HM* − HPH = H` within `1e−8` entrywise.
pub fn riccati_equivalence_check(h: &ComplexMatrix, prob: &RiccatiProblem) -> bool {
    h.rows() == prob.dim() && h.is_square() && unexpanded_residual(h, prob).max_abs() <= 1e-8
}

/// Solves `C E + E C* = R` through the `k²×k²` Kronecker system.
fn lyapunov_solve(cm: &ComplexMatrix, r: &ComplexMatrix) -> Result<ComplexMatrix> {
    let k = cm.rows();
    let size = k * k;
    // unknown e[i*k + j] = E_ij
    let mut op = ComplexMatrix::zeros(size, size);
    for i in 0..k {
        for j in 0..k {
            let row = i * k + j;
            for l in 0..k {
                // (C E)_ij = Σ_l C_il E_lj
                op[(row, l * k + j)] += cm[(i, l)];
                // (E C*)_ij = Σ_l E_il conj(C_jl)
                op[(row, i * k + l)] += cm[(j, l)].conj();
            }
        }
    }
    let rhs = ComplexMatrix::from_fn(size, 1, |idx, _| r[(idx / k, idx % k)]);
    let e = solve(&op, &rhs)?;
    Ok(ComplexMatrix::from_fn(k, k, |i, j| e[(i * k + j, 0)]))
}

/// Newton iteration from `h0`; returns the final iterate and its residual.
fn newton(prob: &RiccatiProblem, h0: ComplexMatrix, tol: f64, max_iter: usize) -> (ComplexMatrix, f64) {
    let b = prob.shifted();
    let mut h = h0;
    let mut res = riccati_residual(&h, prob);
    let mut norm = res.max_abs();
    let mut polish = 0;
    for _ in 0..max_iter {
        if norm <= tol {
            // a few extra steps reach rounding level at quadratic speed
            polish += 1;
            if polish > 3 || norm == 0.0 {
                break;
            }
        }
        let cm = &(&h * &prob.p) - &b;
        let Ok(step) = lyapunov_solve(&cm, &res.scale_real(-1.0)) else { break };
        let next = (&h + &step.hermitian_part()).hermitian_part();
        let next_res = riccati_residual(&next, prob);
        let next_norm = next_res.max_abs();
        if !next_norm.is_finite() || (norm <= tol && next_norm >= norm) {
            break;
        }
        h = next;
        res = next_res;
        norm = next_norm;
    }
    (h, norm)
}

/// Hermitian solution of the Riccati equation.
///
/// Runs Newton's method from `H = I`; if that stalls, restarts from the
/// stabilizing guess `αP⁻¹`, whose iterates converge monotonically to the
/// stabilizing solution.
pub fn riccati_solve(prob: &RiccatiProblem) -> Result<ComplexMatrix> {
    riccati_solve_with(prob, 1e-8, 100)
}

pub fn riccati_solve_with(prob: &RiccatiProblem, tol: f64, max_iter: usize) -> Result<ComplexMatrix> {
    let k = prob.dim();
    // solve to a tighter internal target so the reported residual has margin
    let target = 1e-3 * tol;
    let (h, norm) = newton(prob, ComplexMatrix::identity(k), target, max_iter);
    if norm <= tol {
        return Ok(h);
    }
    let alpha = prob.shifted().frobenius_norm() + 1.0;
    let h0 = inverse(&prob.p)?.scale_real(alpha).hermitian_part();
    let (h2, norm2) = newton(prob, h0, target, max_iter);
    if norm2 <= tol {
        return Ok(h2);
    }
    Err(Error::NoConvergence { residual: norm.min(norm2) })
}

/// Both roots of the scalar equation `p h² − 2 Re(m − 1/2) h − 1 = 0`.
pub fn scalar_roots(m: C64, p: f64) -> (f64, f64) {
    let b = m.re - 0.5;
    let disc = (b * b + p).sqrt();
    // numerically stable pair
    let q = b + b.signum() * disc;
    let r1 = q / p;
    let r2 = -1.0 / q;
    if r1 >= r2 {
        (r1, r2)
    } else {
        (r2, r1)
    }
}

/// Hermitian square root of a positive semidefinite matrix.
pub(crate) fn hermitian_sqrt(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(&a.hermitian_part(), 1e-14)?;
    let n = a.rows();
    let roots: Vec<f64> = eig.values.iter().map(|v| v.max(0.0).sqrt()).collect();
    let v = &eig.vectors;
    Ok(ComplexMatrix::from_fn(n, n, |i, j| (0..n).map(|l| v[(i, l)] * roots[l] * v[(j, l)].conj()).sum()).hermitian_part())
}
