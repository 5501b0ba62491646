//! Cyclic complex Jacobi eigensolver for Hermitian matrices.

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching orthonormal eigenvectors
/// (column `j` of `vectors` belongs to `values[j]`).
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Eigenvectors for `values[range]` as the columns of a matrix.
    pub fn eigenvectors(&self, range: std::ops::Range<usize>) -> ComplexMatrix {
        self.vectors.columns(range)
    }
}

fn check_hermitian(h: &ComplexMatrix, rel_tol: f64) -> Result<()> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch("eigenproblem needs a square matrix".into()));
    }
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let asym = h.hermitian_defect();
    if asym > rel_tol * h.max_abs() {
        return Err(Error::NotHermitian { asymmetry: asym });
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// The input may deviate from exact Hermitian symmetry by `rel_tol·‖H‖`;
/// it is symmetrized before rotating.
pub fn hermitian_eig(h: &ComplexMatrix, rel_tol: f64) -> Result<HermitianEig> {
    check_hermitian(h, rel_tol)?;
    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    jacobi(&mut a, Some(&mut v));
    let (values, order) = sorted_diagonal(&a);
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEig { values, vectors })
}

/// Eigenvalues only, descending; skips eigenvector accumulation.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, rel_tol: f64) -> Result<Vec<f64>> {
    check_hermitian(h, rel_tol)?;
    let mut a = h.hermitian_part();
    jacobi(&mut a, None);
    Ok(sorted_diagonal(&a).0)
}

fn sorted_diagonal(a: &ComplexMatrix) -> (Vec<f64>, Vec<usize>) {
    let n = a.rows();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep their original index order
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(std::cmp::Ordering::Equal));
    (order.iter().map(|&i| diag[i]).collect(), order)
}

fn off_diagonal_sq(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

/// Diagonalizes `a` in place by unitary rotations `a <- G* a G`, accumulating
/// `v <- v G` when requested.
fn jacobi(a: &mut ComplexMatrix, mut v: Option<&mut ComplexMatrix>) {
    let n = a.rows();
    if n < 2 {
        return;
    }
    let total = a.frobenius_norm();
    if total == 0.0 {
        return;
    }
    let stop = (f64::EPSILON * total).powi(2);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(a) <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b == 0.0 {
                    continue;
                }
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                // skip rotations that cannot change the diagonal in floating point
                if b < f64::EPSILON * 1e-3 * (alpha.abs() + gamma.abs()) {
                    a[(p, q)] = C64::new(0.0, 0.0);
                    a[(q, p)] = C64::new(0.0, 0.0);
                    continue;
                }
                let u = apq / b;
                let theta = (gamma - alpha) / (2.0 * b);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                // G = [[c, s], [-s·ū, c·ū]] on coordinates (p, q)
                let su = u * sn;
                let cu = u.conj() * cs;
                let su_bar = u.conj() * sn;
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * cs - aiq * su_bar;
                    a[(i, q)] = aip * sn + aiq * cu;
                }
                let cu_bar = u * cs;
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj * cs - aqj * su;
                    a[(q, j)] = apj * sn + aqj * cu_bar;
                }
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                a[(p, p)] = C64::new(alpha - t * b, 0.0);
                a[(q, q)] = C64::new(gamma + t * b, 0.0);
                if let Some(v) = v.as_deref_mut() {
                    for i in 0..n {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = vip * cs - viq * su_bar;
                        v[(i, q)] = vip * sn + viq * cu;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_decomposition(h: &ComplexMatrix, e: &HermitianEig) {
        let n = h.rows();
        let scale = h.max_abs().max(1.0);
        for j in 0..n {
            let vj = e.vectors.column(j);
            let hv = h.matvec(&vj);
            let res: f64 = hv
                .iter()
                .zip(&vj)
                .map(|(a, b)| (a - b * e.values[j]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-10 * scale, "residual {res}");
        }
        let g = e.vectors.adjoint_mul(&e.vectors);
        assert!(g.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn diagonal_input_is_exact() {
        let h = ComplexMatrix::from_real_diag(&[2.0, -1.0, -1.0]);
        let e = hermitian_eig(&h, 1e-10).unwrap();
        assert_eq!(e.values, vec![2.0, -1.0, -1.0]);
        check_decomposition(&h, &e);
    }

    #[test]
    fn identity_gives_ones() {
        let e = hermitian_eig(&ComplexMatrix::identity(4), 1e-10).unwrap();
        assert_eq!(e.values, vec![1.0; 4]);
        assert_eq!(e.vectors, ComplexMatrix::identity(4));
    }

    #[test]
    fn random_hermitian_decomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 2, 3, 7, 12, 30] {
            let h = ComplexMatrix::random_hermitian(n, &mut rng);
            let e = hermitian_eig(&h, 1e-10).unwrap();
            check_decomposition(&h, &e);
            let vals = hermitian_eigenvalues(&h, 1e-10).unwrap();
            for (a, b) in vals.iter().zip(&e.values) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0
        let h = ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(1.0, 0.0)]).unwrap();
        let e = hermitian_eig(&h, 1e-10).unwrap();
        assert!((e.values[0] - 2.0).abs() < 1e-15 && e.values[1].abs() < 1e-15);
        check_decomposition(&h, &e);
    }

    #[test]
    fn repeated_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let u = ComplexMatrix::random_unitary(5, &mut rng);
        let d = ComplexMatrix::from_real_diag(&[3.0, 3.0, 3.0, -1.0, -1.0]);
        let h = (&(&u * &d) * &u.adjoint()).hermitian_part();
        let e = hermitian_eig(&h, 1e-10).unwrap();
        check_decomposition(&h, &e);
        for (got, want) in e.values.iter().zip([3.0, 3.0, 3.0, -1.0, -1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(hermitian_eig(&a, 1e-10), Err(Error::NotHermitian { .. })));
        assert!(matches!(
            hermitian_eig(&ComplexMatrix::zeros(2, 3), 1e-10),
            Err(Error::DimensionMismatch(_))
        ));
    }

    /// Independent oracle: characteristic polynomial by Faddeev-LeVerrier,
    /// roots by Durand-Kerner iteration, polished with Newton steps.
    fn charpoly_roots(h: &ComplexMatrix) -> Vec<f64> {
        let n = h.rows();
        // coefficients of det(xI - H) = x^n + c[1] x^{n-1} + ... + c[n]
        let mut coef = vec![C64::new(1.0, 0.0); n + 1];
        let mut m = ComplexMatrix::zeros(n, n);
        for k in 1..=n {
            let mk = &(h * &m) + &ComplexMatrix::identity(n).scale(coef[k - 1]);
            let hm = h * &mk;
            coef[k] = -hm.trace() / (k as f64);
            m = mk;
        }
        let eval = |x: C64| coef.iter().fold(C64::new(0.0, 0.0), |acc, a| acc * x + a);
        let deriv = |x: C64| {
            coef[..n]
                .iter()
                .enumerate()
                .fold(C64::new(0.0, 0.0), |acc, (i, a)| acc * x + a * ((n - i) as f64))
        };
        let mut roots: Vec<C64> = (0..n).map(|i| C64::new(0.4, 0.9).powu(i as u32)).collect();
        for _ in 0..500 {
            for i in 0..n {
                let mut denom = C64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval(roots[i]) / denom;
                roots[i] -= step;
            }
        }
        let mut out: Vec<f64> = roots
            .into_iter()
            .map(|mut z| {
                for _ in 0..5 {
                    let d = deriv(z);
                    if d.norm() > 0.0 {
                        z -= eval(z) / d;
                    }
                }
                z.re
            })
            .collect();
        out.sort_by(|a, b| b.partial_cmp(a).unwrap());
        out
    }

    #[test]
    fn matches_characteristic_polynomial_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..5 {
            let h = ComplexMatrix::random_hermitian(5, &mut rng);
            let oracle = charpoly_roots(&h);
            let got = hermitian_eig(&h, 1e-10).unwrap().values;
            for (a, b) in got.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-8, "{got:?} vs {oracle:?}");
            }
        }
    }

    #[test]
    fn unitary_invariance_of_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..20 {
            let h = ComplexMatrix::random_hermitian(6, &mut rng);
            let u = ComplexMatrix::random_unitary(6, &mut rng);
            let g = (&u.adjoint() * &(&h * &u)).hermitian_part();
            let a = hermitian_eigenvalues(&h, 1e-10).unwrap();
            let b = hermitian_eigenvalues(&g, 1e-10).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9);
            }
        }
    }
}
