use super::eig::hermitian_eig;
use super::matrix::{ComplexMatrix, C64};
use super::orthonormalize_columns;
use crate::error::{Error, Result};

/// Subspace of `C^n` represented by an orthonormal basis (possibly empty).
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ComplexMatrix,
}

impl Subspace {
    /// Spans the columns of `basis`, orthonormalizing them.
    pub fn from_spanning(basis: &ComplexMatrix) -> Self {
        Subspace { ambient_dim: basis.rows(), basis: orthonormalize_columns(basis) }
    }

    /// Wraps a basis that already has orthonormal columns.
    pub fn from_orthonormal(basis: ComplexMatrix) -> Result<Self> {
        let g = basis.adjoint_mul(&basis);
        if g.max_abs_diff(&ComplexMatrix::identity(basis.cols())) > 1e-12 {
            return Err(Error::InvalidArgument("basis columns are not orthonormal".into()));
        }
        Ok(Subspace { ambient_dim: basis.rows(), basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: ComplexMatrix::zeros(ambient_dim, 0) }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: ComplexMatrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[C64]) -> Vec<C64> {
        let coeffs: Vec<C64> = (0..self.dim())
            .map(|j| (0..self.ambient_dim).map(|i| self.basis[(i, j)].conj() * v[i]).sum())
            .collect();
        (0..self.ambient_dim)
            .map(|i| (0..self.dim()).map(|j| self.basis[(i, j)] * coeffs[j]).sum())
            .collect()
    }

    /// `‖(I - P)v‖`.
    pub fn residual(&self, v: &[C64]) -> f64 {
        let p = self.project(v);
        v.iter().zip(&p).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Numerical intersection of subspaces of a common ambient space.
///
/// Builds `S = Σ_j (I − P_j)`, whose null space is the intersection, and
/// keeps the eigenvectors of `S` with eigenvalue at most `tol` whose
/// projection residual onto every input is at most `tol`.
pub fn subspace_intersection(subspaces: &[Subspace], tol: f64) -> Result<Subspace> {
    let Some(first) = subspaces.first() else {
        return Err(Error::InvalidArgument("no subspaces to intersect".into()));
    };
    let n = first.ambient_dim;
    if subspaces.iter().any(|s| s.ambient_dim != n) {
        return Err(Error::DimensionMismatch("subspaces live in different ambient spaces".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("intersection tolerance must be positive".into()));
    }
    if subspaces.len() == 1 {
        return Ok(first.clone());
    }
    let m = subspaces.len() as f64;
    let mut s = ComplexMatrix::identity(n).scale_real(m);
    for sub in subspaces {
        let b = &sub.basis;
        let proj = b * &b.adjoint();
        s = &s - &proj;
    }
    let eig = hermitian_eig(&s.hermitian_part(), 1e-8)?;
    let mut kept = Vec::new();
    for j in (0..n).rev() {
        if eig.values[j] > tol {
            break;
        }
        let v = eig.vectors.column(j);
        if subspaces.iter().all(|sub| sub.residual(&v) <= tol) {
            kept.push(v);
        }
    }
    kept.reverse();
    Ok(Subspace { ambient_dim: n, basis: ComplexMatrix::from_columns(n, &kept) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        let cols: Vec<Vec<C64>> = idx
            .iter()
            .map(|&i| {
                let mut v = vec![c(0.0, 0.0); n];
                v[i] = c(1.0, 0.0);
                v
            })
            .collect();
        Subspace::from_orthonormal(ComplexMatrix::from_columns(n, &cols)).unwrap()
    }

    #[test]
    fn identical_subspaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let v = Subspace::from_spanning(&ComplexMatrix::random_gaussian(5, 3, &mut rng));
        let w = subspace_intersection(&[v.clone(), v.clone()], 1e-8).unwrap();
        assert_eq!(w.dim(), 3);
        for j in 0..3 {
            assert!(v.residual(&w.basis().column(j)) < 1e-12);
        }
    }

    #[test]
    fn coordinate_planes_meet_in_axis() {
        let w = subspace_intersection(&[coord(3, &[0, 1]), coord(3, &[1, 2])], 1e-8).unwrap();
        assert_eq!(w.dim(), 1);
        let b = w.basis().column(0);
        assert!((b[1].norm() - 1.0).abs() < 1e-12);
        assert!(b[0].norm() < 1e-12 && b[2].norm() < 1e-12);
    }

    #[test]
    fn generic_triple_dimension_bound() {
        let (n, k) = (7, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let subs: Vec<Subspace> = (0..3)
                .map(|_| Subspace::from_spanning(&ComplexMatrix::random_gaussian(n, n - k + 1, &mut rng)))
                .collect();
            let w = subspace_intersection(&subs, 1e-8).unwrap();
            assert!(w.dim() >= n - 3 * k + 3);
            for j in 0..w.dim() {
                for s in &subs {
                    assert!(s.residual(&w.basis().column(j)) <= 1e-8);
                }
            }
        }
    }

    #[test]
    fn transversal_subspaces_meet_trivially() {
        let w = subspace_intersection(&[coord(4, &[0, 1]), coord(4, &[2, 3])], 1e-8).unwrap();
        assert_eq!(w.dim(), 0);
    }

    #[test]
    fn ambient_mismatch() {
        let r = subspace_intersection(&[coord(3, &[0]), coord(4, &[0])], 1e-8);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }
}
