//! Numerical search for an isometry `X` with `X*AX = λI_k`.
//!
//! Each start runs a damped Gauss-Newton (Levenberg-Marquardt) iteration on
//! the stacked real system `X*BX = 0`, `X*X − I = 0` with `B = (A − λI)/s`,
//! taking minimum-norm steps and re-orthonormalizing after every accepted
//! step.

use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::isometry::{compression_residual, Isometry};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, orthonormalize_columns, ComplexMatrix, C64};

/// Budget and acceptance threshold for [`synthesize_isometry_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisOptions {
    /// Accepted `max |X*AX − λI|`.
    pub tol: f64,
    /// Random starts tried after the eigenspace start.
    pub starts: usize,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        SynthesisOptions { tol: 1e-8, starts: 20, max_iter: 5000, seed: 0x5eed }
    }
}

impl SynthesisOptions {
    pub fn from_settings(s: &crate::Settings) -> Self {
        SynthesisOptions { tol: s.witness_tol, starts: s.synthesis_starts, max_iter: s.synthesis_max_iter, seed: s.seed }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

/// `f(X) = ‖X*AX − λI‖²_F`.
pub fn objective(a: &ComplexMatrix, x: &ComplexMatrix, lambda: C64) -> f64 {
    let r = a.compress(x).shift(-lambda);
    r.frobenius_norm().powi(2)
}

/// Euclidean gradient `2(AXR* + A*XR)` of [`objective`] with respect to the
/// real inner product `Re tr(G*·dX)`.
pub fn euclidean_gradient(a: &ComplexMatrix, x: &ComplexMatrix, lambda: C64) -> ComplexMatrix {
    let r = a.compress(x).shift(-lambda);
    let ax = a * x;
    let ahx = &a.adjoint() * x;
    (&(&ax * &r.adjoint()) + &(&ahx * &r)).scale_real(2.0)
}

/// Projection of the Euclidean gradient onto the tangent space at `X`:
/// `G − X·sym(X*G)`.
pub fn riemannian_gradient(a: &ComplexMatrix, x: &ComplexMatrix, lambda: C64) -> ComplexMatrix {
    let g = euclidean_gradient(a, x, lambda);
    let xg = x.adjoint_mul(&g).hermitian_part();
    &g - &(x * &xg)
}

/// Real residual vector: `X*BX` (all entries, real and imaginary parts)
/// followed by the independent entries of `X*X − I`.
fn residual(b: &ComplexMatrix, x: &ComplexMatrix) -> Vec<f64> {
    let k = x.cols();
    let c = b.compress(x);
    let g = x.adjoint_mul(x);
    let mut r = Vec::with_capacity(3 * k * k);
    for i in 0..k {
        for j in 0..k {
            r.push(c[(i, j)].re);
            r.push(c[(i, j)].im);
        }
    }
    for i in 0..k {
        r.push(g[(i, i)].re - 1.0);
        for j in i + 1..k {
            r.push(g[(i, j)].re);
            r.push(g[(i, j)].im);
        }
    }
    r
}

/// Jacobian of [`residual`], stored row-major with `2nk` columns ordered as
/// `(Re X_pq, Im X_pq)` for `p` in rows, `q` in columns.
fn jacobian(b: &ComplexMatrix, x: &ComplexMatrix) -> (Vec<f64>, usize, usize) {
    let (n, k) = (x.rows(), x.cols());
    let rows = 3 * k * k;
    let cols = 2 * n * k;
    let mut jac = vec![0.0; rows * cols];
    let bx = b * x;
    // X*B as k×n: (X*B)_{jp} = Σ_l conj(X_lj) B_lp
    let xb = x.adjoint_mul(b);
    for p in 0..n {
        for q in 0..k {
            for (part, s) in [(0, C64::new(1.0, 0.0)), (1, C64::new(0.0, 1.0))] {
                let col = 2 * (p * k + q) + part;
                // d(X*BX) = dX* B X + X* B dX with dX = s e_p e_qᵀ
                for i in 0..k {
                    for j in 0..k {
                        let mut d = C64::new(0.0, 0.0);
                        if j == q {
                            d += xb[(i, p)] * s;
                        }
                        if i == q {
                            d += s.conj() * bx[(p, j)];
                        }
                        let row = 2 * (i * k + j);
                        jac[row * cols + col] = d.re;
                        jac[(row + 1) * cols + col] = d.im;
                    }
                }
                // d(X*X) = dX* X + X* dX
                let mut row = 2 * k * k;
                for i in 0..k {
                    for j in i..k {
                        let mut d = C64::new(0.0, 0.0);
                        if j == q {
                            d += x[(p, i)].conj() * s;
                        }
                        if i == q {
                            d += s.conj() * x[(p, j)];
                        }
                        if i == j {
                            jac[row * cols + col] = d.re;
                            row += 1;
                        } else {
                            jac[row * cols + col] = d.re;
                            jac[(row + 1) * cols + col] = d.im;
                            row += 2;
                        }
                    }
                }
            }
        }
    }
    (jac, rows, cols)
}

/// Solves the symmetric positive definite system `S y = r` in place by Cholesky.
fn cholesky_solve(s: &mut [f64], n: usize, r: &mut [f64]) -> bool {
    for j in 0..n {
        let mut d = s[j * n + j];
        for l in 0..j {
            d -= s[j * n + l] * s[j * n + l];
        }
        if !(d > 0.0) {
            return false;
        }
        let d = d.sqrt();
        s[j * n + j] = d;
        for i in j + 1..n {
            let mut v = s[i * n + j];
            for l in 0..j {
                v -= s[i * n + l] * s[j * n + l];
            }
            s[i * n + j] = v / d;
        }
    }
    for i in 0..n {
        let mut v = r[i];
        for l in 0..i {
            v -= s[i * n + l] * r[l];
        }
        r[i] = v / s[i * n + i];
    }
    for i in (0..n).rev() {
        let mut v = r[i];
        for l in i + 1..n {
            v -= s[l * n + i] * r[l];
        }
        r[i] = v / s[i * n + i];
    }
    true
}

/// Damped minimum-norm step `Δ` for `J Δ ≈ −r`.
fn lm_step(jac: &[f64], rows: usize, cols: usize, r: &[f64], mu: f64) -> Option<Vec<f64>> {
    if rows <= cols {
        // Δ = Jᵀ (JJᵀ + μI)⁻¹ (−r)
        let mut s = vec![0.0; rows * rows];
        for i in 0..rows {
            let ri = &jac[i * cols..(i + 1) * cols];
            for j in 0..=i {
                let rj = &jac[j * cols..(j + 1) * cols];
                let v: f64 = ri.iter().zip(rj).map(|(a, b)| a * b).sum();
                s[i * rows + j] = v;
                s[j * rows + i] = v;
            }
            s[i * rows + i] += mu;
        }
        let mut y: Vec<f64> = r.iter().map(|v| -v).collect();
        if !cholesky_solve(&mut s, rows, &mut y) {
            return None;
        }
        let mut delta = vec![0.0; cols];
        for i in 0..rows {
            let yi = y[i];
            for (d, jv) in delta.iter_mut().zip(&jac[i * cols..(i + 1) * cols]) {
                *d += jv * yi;
            }
        }
        Some(delta)
    } else {
        // Δ = (JᵀJ + μI)⁻¹ Jᵀ(−r)
        let mut s = vec![0.0; cols * cols];
        let mut g = vec![0.0; cols];
        for i in 0..rows {
            let row = &jac[i * cols..(i + 1) * cols];
            for a in 0..cols {
                g[a] -= row[a] * r[i];
                for b in 0..=a {
                    s[a * cols + b] += row[a] * row[b];
                }
            }
        }
        for a in 0..cols {
            for b in 0..a {
                s[b * cols + a] = s[a * cols + b];
            }
            s[a * cols + a] += mu;
        }
        if !cholesky_solve(&mut s, cols, &mut g) {
            return None;
        }
        Some(g)
    }
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// One start; returns the final isometry and its compression residual in the
/// scale of `b`.
fn run_start(b: &ComplexMatrix, x0: ComplexMatrix, target: f64, max_iter: usize) -> (ComplexMatrix, f64) {
    let (n, k) = (x0.rows(), x0.cols());
    let mut x = orthonormalize_columns(&x0);
    let mut r = residual(b, &x);
    let mut rn = norm2(&r);
    let mut nu = 1e-2;
    let mut best_iter = 0;
    let score = |x: &ComplexMatrix| b.compress(x).max_abs();
    let mut current = score(&x);
    for it in 0..max_iter {
        if current <= target {
            break;
        }
        let (jac, rows, cols) = jacobian(b, &x);
        let mut accepted = false;
        for _ in 0..40 {
            let mu = nu * rn;
            let Some(delta) = lm_step(&jac, rows, cols, &r, mu) else {
                nu *= 10.0;
                continue;
            };
            let trial = ComplexMatrix::from_fn(n, k, |p, q| {
                let idx = 2 * (p * k + q);
                x[(p, q)] + C64::new(delta[idx], delta[idx + 1])
            });
            let trial = orthonormalize_columns(&trial);
            let tr = residual(b, &trial);
            let tn = norm2(&tr);
            if tn < rn {
                x = trial;
                r = tr;
                rn = tn;
                nu = (nu / 3.0).max(1e-12);
                accepted = true;
                break;
            }
            nu *= 4.0;
            if nu > 1e12 {
                break;
            }
        }
        if !accepted {
            break;
        }
        let s = score(&x);
        if s < 0.5 * current {
            best_iter = it;
        }
        current = s;
        // no halving of the residual for a long stretch: local minimum
        if it - best_iter > 200 {
            break;
        }
    }
    (x, current)
}

/// Eigenvectors of `B*B` for its `k` smallest eigenvalues, lowest first.
fn eigenspace_start(b: &ComplexMatrix, k: usize) -> Result<ComplexMatrix> {
    let bb = b.adjoint_mul(b).hermitian_part();
    let eig = hermitian_eig(&bb, 1e-14)?;
    let n = b.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.values[i].partial_cmp(&eig.values[j]).unwrap());
    let cols: Vec<Vec<C64>> = order[..k].iter().map(|&j| eig.vectors.column(j)).collect();
    Ok(ComplexMatrix::from_columns(n, &cols))
}

/// Searches for `X` with `X*AX = λI_k` (residual ≤ `1e−8`).
pub fn synthesize_isometry(a: &ComplexMatrix, k: usize, lambda: C64) -> Result<Isometry> {
    synthesize_isometry_with(a, k, lambda, &SynthesisOptions::default())
}

/// [`synthesize_isometry`] with an explicit budget. Start `0` is the
/// eigenspace start; starts `1..=opts.starts` are seeded random isometries.
/// The verified witness from the lowest-indexed successful start is returned.
pub fn synthesize_isometry_with(a: &ComplexMatrix, k: usize, lambda: C64, opts: &SynthesisOptions) -> Result<Isometry> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows(), a.cols())));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    if !a.is_finite() || !lambda.is_finite() {
        return Err(Error::NonFinite);
    }
    let scale = a.shift(-lambda).max_abs().max(1.0);
    let b = a.shift(-lambda).scale_real(1.0 / scale);
    // converge past the acceptance threshold so verification has margin
    let target = (1e-3 * opts.tol / scale).max(1e-15);
    let best = Mutex::new(f64::INFINITY);
    let found = (0..=opts.starts).into_par_iter().find_map_first(|start| {
        let x0 = if start == 0 {
            eigenspace_start(&b, k).ok()?
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(start as u64));
            ComplexMatrix::random_gaussian(n, k, &mut rng)
        };
        let (x, _) = run_start(&b, x0, target, opts.max_iter);
        let res = compression_residual(a, &x, lambda).ok()?;
        {
            let mut guard = best.lock().unwrap();
            if res < *guard {
                *guard = res;
            }
        }
        if res <= opts.tol {
            Isometry::new(x).ok()
        } else {
            None
        }
    });
    found.ok_or_else(|| Error::SynthesisFailed { best_residual: *best.lock().unwrap() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::witness::verify_compression;
    use std::f64::consts::TAU;

    #[test]
    fn jacobian_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let (n, k) = (5, 2);
        let b = ComplexMatrix::random_gaussian(n, n, &mut rng);
        let x = orthonormalize_columns(&ComplexMatrix::random_gaussian(n, k, &mut rng));
        let (jac, rows, cols) = jacobian(&b, &x);
        let h = 1e-6;
        for col in 0..cols {
            let (p, q, part) = (col / 2 / k, (col / 2) % k, col % 2);
            let bump = if part == 0 { c(h, 0.0) } else { c(0.0, h) };
            let mut xp = x.clone();
            xp[(p, q)] += bump;
            let mut xm = x.clone();
            xm[(p, q)] -= bump;
            let rp = residual(&b, &xp);
            let rm = residual(&b, &xm);
            for row in 0..rows {
                let fd = (rp[row] - rm[row]) / (2.0 * h);
                assert!((fd - jac[row * cols + col]).abs() < 1e-7, "row {row} col {col}");
            }
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let (n, k) = (6, 2);
        let a = ComplexMatrix::random_gaussian(n, n, &mut rng);
        let lambda = c(0.2, -0.1);
        for _ in 0..5 {
            let x = orthonormalize_columns(&ComplexMatrix::random_gaussian(n, k, &mut rng));
            let raw = ComplexMatrix::random_gaussian(n, k, &mut rng);
            // tangent direction at x
            let xd = x.adjoint_mul(&raw).hermitian_part();
            let d = &raw - &(&x * &xd);
            let grad = riemannian_gradient(&a, &x, lambda);
            let analytic: f64 = grad.data().iter().zip(d.data()).map(|(g, v)| (g.conj() * v).re).sum();
            let h = 1e-5;
            let retract = |s: f64| orthonormalize_columns(&(&x + &d.scale_real(s)));
            let fd = (objective(&a, &retract(h), lambda) - objective(&a, &retract(-h), lambda)) / (2.0 * h);
            assert!((fd - analytic).abs() <= 1e-4 * analytic.abs().max(1e-8), "{fd} vs {analytic}");
        }
    }

    #[test]
    fn zero_matrix_uses_standard_columns() {
        let x = synthesize_isometry(&ComplexMatrix::zeros(4, 4), 2, c(0.0, 0.0)).unwrap();
        assert!(x.matrix().max_abs_diff(&ComplexMatrix::identity(4).columns(0..2)) == 0.0);
    }

    #[test]
    fn repeated_eigenvalue_recovered() {
        let mu = c(1.5, 0.5);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let u = ComplexMatrix::random_unitary(5, &mut rng);
        let d = ComplexMatrix::from_diag(&[mu, c(-1.0, 0.0), mu, c(0.0, 2.0), mu]);
        let a = &(&u * &d) * &u.adjoint();
        let x = synthesize_isometry(&a, 3, mu).unwrap();
        assert!(verify_compression(&a, &x, mu, 1e-8).unwrap());
    }

    #[test]
    fn fourth_roots_rank_two_at_origin() {
        let a = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]);
        let x = synthesize_isometry(&a, 2, c(0.0, 0.0)).unwrap();
        assert!(verify_compression(&a, &x, c(0.0, 0.0), 1e-8).unwrap());
    }

    #[test]
    fn cube_roots_fail() {
        let w = C64::from_polar(1.0, TAU / 3.0);
        let a = ComplexMatrix::from_diag(&[c(1.0, 0.0), w, w * w]);
        let opts = SynthesisOptions { starts: 4, max_iter: 500, ..Default::default() };
        for lambda in [c(0.0, 0.0), c(-0.5, 0.0), c(0.2, 0.3)] {
            match synthesize_isometry_with(&a, 2, lambda, &opts) {
                Err(Error::SynthesisFailed { best_residual }) => assert!(best_residual > 1e-3),
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}
