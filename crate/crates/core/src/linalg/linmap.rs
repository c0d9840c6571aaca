use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A linear map `Q^domain → Q^codomain` with its matrix in the standard
/// bases (`codomain_dim × domain_dim`).
#[derive(Clone, Debug)]
pub struct LinearMap {
    domain_dim: usize,
    codomain_dim: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap {
            domain_dim: matrix.cols(),
            codomain_dim: matrix.rows(),
            matrix,
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        super::elim::rank_of_srows(self.matrix.cols(), self.matrix.row_iter())
    }

    /// Full solution space of `f(v) = 0` as a canonical subspace of the
    /// domain.
    pub fn kernel(&self) -> Subspace {
        Subspace::kernel_of(&self.matrix)
    }

    /// Column span as a canonical subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::column_span(&self.matrix)
    }

    pub fn cokernel_dim(&self) -> usize {
        self.codomain_dim - self.rank()
    }

    /// The map in the coordinates of `dom`'s basis: columns are the images
    /// of the basis vectors of `dom`.
    pub fn restrict(&self, dom: &Subspace) -> Result<LinearMap> {
        if dom.ambient_dim() != self.domain_dim {
            return Err(Error::DimensionMismatch {
                context: "restrict: subspace ambient vs map domain".into(),
                expected: self.domain_dim,
                got: dom.ambient_dim(),
            });
        }
        Ok(LinearMap::new(self.matrix.mul(&dom.basis().transpose())))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sc, srow_from_dense, Matrix};
    use super::*;

    #[test]
    fn zero_and_identity_kernels() {
        let zero = LinearMap::new(Matrix::zero(3, 3));
        assert_eq!(zero.kernel().dim(), 3);
        assert_eq!(zero.image().dim(), 0);
        let id = LinearMap::new(Matrix::identity(4));
        assert_eq!(id.kernel().dim(), 0);
        assert_eq!(id.image().dim(), 4);
    }

    #[test]
    fn restriction_to_kernel_is_zero() {
        let m = Matrix::from_dense_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let f = LinearMap::new(m);
        let ker = f.kernel();
        let g = f.restrict(&ker).unwrap();
        assert!(g.matrix().is_zero());
        assert_eq!(f.kernel().dim() + f.rank(), f.domain_dim());
    }

    #[test]
    fn restrict_identity_is_injective() {
        let id = LinearMap::new(Matrix::identity(5));
        let dom = Subspace::from_rows(
            5,
            vec![
                srow_from_dense(&[sc(1), sc(2), sc(0), sc(0), sc(0)]),
                srow_from_dense(&[sc(0), sc(0), sc(3), sc(0), sc(1)]),
            ],
        );
        let f = id.restrict(&dom).unwrap();
        assert_eq!(f.kernel().dim(), 0);
        assert_eq!(f.rank(), 2);
    }
}
