//! Isometry witnesses `X*AX = λI_k`: verification, numerical synthesis,
//! the Riccati route for the block form `[[I, X], [Y, −I]]`, and the
//! eigenspace triple intersection.

mod helly;
mod isometry;
mod riccati;
mod synthesis;

pub use helly::{below_threshold, helly_witness, HellyWitness};
pub use isometry::{compression_residual, isometry_defect, verify_compression, Isometry, ISOMETRY_TOL};
pub use riccati::{
    riccati_equivalence_check, riccati_residual, riccati_solve, riccati_solve_with, scalar_roots, unexpanded_residual,
    RiccatiProblem,
};
pub use synthesis::{
    euclidean_gradient, objective, riemannian_gradient, synthesize_isometry, synthesize_isometry_with, SynthesisOptions,
};

use crate::error::{Error, Result};
use crate::linalg::{inverse, ComplexMatrix, C64};

/// The `2k×2k` block matrix `[[I, X], [Y, −I]]`.
pub fn block_matrix(xblk: &ComplexMatrix, yblk: &ComplexMatrix) -> Result<ComplexMatrix> {
    let k = xblk.rows();
    if !xblk.is_square() || !yblk.is_square() || yblk.rows() != k {
        return Err(Error::DimensionMismatch("blocks must be square of equal size".into()));
    }
    let id = ComplexMatrix::identity(k);
    let top = id.hstack(xblk);
    let bottom = yblk.hstack(&id.scale_real(-1.0));
    Ok(top.vstack(&bottom))
}

/// Isometry `W` with `W*AW = 0` for `A = [[I, X], [Y, −I]]`, spanning the
/// graph `{(u, Ku)}` of a `k×k` matrix `K`.
///
/// With `F = (X + Y*)/2` and `E = (X − Y*)/(2i)`, the choice `K = iE⁻¹H`
/// compresses `A` to zero exactly when `H` solves the Riccati equation with
/// `M = I/2 + iFE⁻¹` and `P = (EE*)⁻¹`. When `E = 0` the closed form
/// `K = F* + (I + FF*)^{1/2}` is used.
pub fn canonical_zero_witness(xblk: &ComplexMatrix, yblk: &ComplexMatrix) -> Result<Isometry> {
    let a = block_matrix(xblk, yblk)?;
    let k = xblk.rows();
    let ys = yblk.adjoint();
    let f = (xblk + &ys).scale_real(0.5);
    let e = (xblk - &ys).scale(C64::new(0.0, -0.5));
    let scale = xblk.max_abs().max(yblk.max_abs()).max(1.0);
    let kmat = if e.max_abs() <= 1e-14 * scale {
        let root = riccati::hermitian_sqrt(&(&ComplexMatrix::identity(k) + &(&f * &f.adjoint())))?;
        &f.adjoint() + &root
    } else {
        let e_inv = inverse(&e)?;
        let m = (&f * &e_inv).scale(C64::new(0.0, 1.0)).shift(C64::new(0.5, 0.0));
        let p = inverse(&(&e * &e.adjoint()))?.hermitian_part();
        let prob = RiccatiProblem::new(m, p)?;
        let h = riccati_solve_with(&prob, 1e-12, 200).or_else(|_| riccati_solve(&prob))?;
        (&e_inv * &h).scale(C64::new(0.0, 1.0))
    };
    let graph = ComplexMatrix::identity(k).vstack(&kmat);
    let w = Isometry::orthonormalized(&graph)?;
    let residual = compression_residual(&a, w.matrix(), C64::new(0.0, 0.0))?;
    if residual > 1e-8 {
        return Err(Error::NoConvergence { residual });
    }
    Ok(w)
}
