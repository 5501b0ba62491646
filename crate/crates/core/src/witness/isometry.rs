use crate::error::{Error, Result};
use crate::linalg::{orthonormalize_columns, ComplexMatrix, C64};

/// Entrywise tolerance on `X*X = I_k`.
pub const ISOMETRY_TOL: f64 = 1e-10;

/// An `n×k` matrix with orthonormal columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    matrix: ComplexMatrix,
}

impl Isometry {
    /// Wraps `x`, checking `X*X = I` within [`ISOMETRY_TOL`].
    pub fn new(x: ComplexMatrix) -> Result<Self> {
        if x.cols() == 0 || x.cols() > x.rows() {
            return Err(Error::DimensionMismatch(format!("{}x{} cannot be an isometry", x.rows(), x.cols())));
        }
        let defect = isometry_defect(&x);
        if defect > ISOMETRY_TOL {
            return Err(Error::InvalidArgument(format!("columns are not orthonormal (defect {defect:.3e})")));
        }
        Ok(Isometry { matrix: x })
    }

    /// Orthonormalizes the columns of `x` first.
    pub fn orthonormalized(x: &ComplexMatrix) -> Result<Self> {
        Isometry::new(orthonormalize_columns(x))
    }

    /// First `k` standard basis columns of `C^n`.
    pub fn standard(n: usize, k: usize) -> Result<Self> {
        Isometry::new(ComplexMatrix::identity(n).columns(0..k))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn k(&self) -> usize {
        self.matrix.cols()
    }

    /// `U X`, the witness for `U A U*` when `self` witnesses `A`.
    pub fn left_multiply(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.cols() != self.n() || !u.is_square() {
            return Err(Error::DimensionMismatch("unitary does not match isometry rows".into()));
        }
        Ok(Isometry { matrix: u * &self.matrix })
    }
}

/// `max |(X*X − I)_{ij}|`.
pub fn isometry_defect(x: &ComplexMatrix) -> f64 {
    x.adjoint_mul(x).max_abs_diff(&ComplexMatrix::identity(x.cols()))
}

/// `max |(X*AX − λI)_{ij}|`.
pub fn compression_residual(a: &ComplexMatrix, x: &ComplexMatrix, lambda: C64) -> Result<f64> {
    if !a.is_square() || a.rows() != x.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix cannot be compressed by a {}x{} isometry",
            a.rows(),
            a.cols(),
            x.rows(),
            x.cols()
        )));
    }
    Ok(a.compress(x).shift(-lambda).max_abs())
}

/// Whether `X*AX = λI_k` within `tol` entrywise and `X` is an isometry.
pub fn verify_compression(a: &ComplexMatrix, x: &Isometry, lambda: C64, tol: f64) -> Result<bool> {
    let residual = compression_residual(a, x.matrix(), lambda)?;
    Ok(residual <= tol && isometry_defect(x.matrix()) <= ISOMETRY_TOL)
}
