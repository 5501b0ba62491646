//! Dense complex linear algebra: matrices, Hermitian eigendecomposition,
//! orthonormal subspaces.

mod eig;
mod matrix;
mod subspace;

pub use eig::{hermitian_eig, hermitian_eigenvalues, HermitianEig};
pub use matrix::{c, hermitian_part_at, ComplexMatrix, C64};
pub use subspace::{subspace_intersection, Subspace};

use crate::error::{Error, Result};

/// Orthonormalizes the columns (modified Gram-Schmidt, two passes).
///
/// Columns that become numerically dependent are replaced by a vector
/// orthogonal to all previous ones, so the output always has orthonormal
/// columns of the same shape.
pub fn orthonormalize_columns(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let mut v = a.column(j);
        let scale = norm(&v);
        for _ in 0..2 {
            for q in &cols {
                let p = dot(q, &v);
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= p * qi;
                }
            }
        }
        let mut nv = norm(&v);
        if nv <= 1e-12 * scale.max(1e-300) || nv == 0.0 {
            // dependent column: fall back to the first coordinate direction
            // with the largest component outside the current span
            let mut best = (0.0, vec![C64::new(0.0, 0.0); n]);
            for e in 0..n {
                let mut w = vec![C64::new(0.0, 0.0); n];
                w[e] = C64::new(1.0, 0.0);
                for _ in 0..2 {
                    for q in &cols {
                        let p = dot(q, &w);
                        for (wi, qi) in w.iter_mut().zip(q) {
                            *wi -= p * qi;
                        }
                    }
                }
                let nw = norm(&w);
                if nw > best.0 {
                    best = (nw, w);
                }
            }
            v = best.1;
            nv = best.0;
        }
        for vi in v.iter_mut() {
            *vi /= nv;
        }
        cols.push(v);
    }
    ComplexMatrix::from_columns(n, &cols)
}

/// `u* v`.
pub fn dot(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Solves `A X = B` by LU with partial pivoting.
pub fn solve(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.rows();
    if !a.is_square() || b.rows() != n {
        return Err(Error::DimensionMismatch("solve needs square A and matching B".into()));
    }
    let m = b.cols();
    let mut lu = a.clone();
    let mut x = b.clone();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    for col in 0..n {
        let (piv, pmax) = (col..n)
            .map(|r| (r, lu[(r, col)].norm()))
            .fold((col, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
        if pmax <= 1e-14 * scale {
            return Err(Error::Singular);
        }
        if piv != col {
            for j in 0..n {
                let t = lu[(col, j)];
                lu[(col, j)] = lu[(piv, j)];
                lu[(piv, j)] = t;
            }
            for j in 0..m {
                let t = x[(col, j)];
                x[(col, j)] = x[(piv, j)];
                x[(piv, j)] = t;
            }
        }
        let d = lu[(col, col)];
        for r in col + 1..n {
            let f = lu[(r, col)] / d;
            if f.re == 0.0 && f.im == 0.0 {
                continue;
            }
            for j in col..n {
                let v = lu[(col, j)];
                lu[(r, j)] -= f * v;
            }
            for j in 0..m {
                let v = x[(col, j)];
                x[(r, j)] -= f * v;
            }
        }
    }
    for col in (0..n).rev() {
        let d = lu[(col, col)];
        for j in 0..m {
            let mut s = x[(col, j)];
            for l in col + 1..n {
                s -= lu[(col, l)] * x[(l, j)];
            }
            x[(col, j)] = s / d;
        }
    }
    Ok(x)
}

pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    solve(a, &ComplexMatrix::identity(a.rows()))
}
