//! Rota-Baxter operators on a Lie algebra `n`.

use num_traits::{One, Zero};

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::postlie::product::PAProduct;
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

/// Linear map `R` with `R(e_j) = sum_i R[i][j] e_i` and weight `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBOperator {
    matrix: Matrix,
    weight: Scalar,
}

impl RBOperator {
    pub fn new(matrix: Matrix, weight: Scalar) -> Self {
        Self { matrix, weight }
    }

    pub fn weight_one(matrix: Matrix) -> Self {
        Self::new(matrix, scalar::one())
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// `-(R + lambda id)`, again Rota-Baxter of the same weight when `R` is.
    pub fn complement(&self) -> RBOperator {
        let n = self.matrix.rows();
        RBOperator::new(
            self.matrix
                .add(&Matrix::identity(n).scale(&self.weight))
                .neg(),
            self.weight.clone(),
        )
    }
}

fn check_square(r: &RBOperator, n: &LieAlgebra) -> Result<()> {
    let m = r.matrix();
    if m.rows() != n.dim() || m.cols() != n.dim() {
        return Err(Error::DimensionMismatch {
            expected: n.dim(),
            found: m.rows().max(m.cols()),
        });
    }
    Ok(())
}

/// Checks `{Rx,Ry} = R({Rx,y} + {x,Ry} + lambda {x,y})` on all basis pairs.
pub fn verify_rb(r: &RBOperator, n: &LieAlgebra) -> Result<bool> {
    check_square(r, n)?;
    let d = n.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| r.matrix.column(j)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = n.bracket(&cols[i], &cols[j])?;
            let mut inner = n.bracket(&cols[i], &crate::linalg::unit_vector(d, j))?;
            let b = n.bracket(&crate::linalg::unit_vector(d, i), &cols[j])?;
            for ((x, y), z) in inner.iter_mut().zip(&b).zip(n.bracket_basis(i, j)) {
                *x += y + &r.weight * z;
            }
            if r.matrix.mul_vec(&inner) != lhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require_verified_weight_one(r: &RBOperator, n: &LieAlgebra) -> Result<()> {
    check_square(r, n)?;
    if !r.weight.is_one() {
        return Err(Error::WeightNotOne(scalar::format(&r.weight)));
    }
    if !verify_rb(r, n)? {
        return Err(Error::UnverifiedOperator);
    }
    Ok(())
}

/// The product `x . y = {R(x), y}` of a verified weight-one operator.
pub fn pa_from_rb(r: &RBOperator, n: &LieAlgebra) -> Result<PAProduct> {
    require_verified_weight_one(r, n)?;
    let d = n.dim();
    let mut t = Tensor3::zeros(d);
    for i in 0..d {
        let ri = r.matrix.column(i);
        for j in 0..d {
            let v = n.bracket(&ri, &crate::linalg::unit_vector(d, j))?;
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    t.set(i, j, k, c);
                }
            }
        }
    }
    Ok(PAProduct::new(t))
}

/// `(ker R, ker(R + id))` of a verified weight-one operator.
pub fn rb_kernels(r: &RBOperator, n: &LieAlgebra) -> Result<(Subspace, Subspace)> {
    require_verified_weight_one(r, n)?;
    let d = n.dim();
    let kernel = |m: &Matrix| Subspace::from_matrix(&Matrix::from_rows(d, m.nullspace()));
    Ok((
        kernel(&r.matrix),
        kernel(&r.matrix.add(&Matrix::identity(d))),
    ))
}

/// `R = -(projection onto n2 along n1)` for complementary subalgebras.
pub fn rb_from_decomposition(n: &LieAlgebra, n1: &Subspace, n2: &Subspace) -> Result<RBOperator> {
    let d = n.dim();
    if !n.is_subalgebra(n1)? || !n.is_subalgebra(n2)? {
        return Err(Error::NotSubalgebra);
    }
    if n1.dim() + n2.dim() != d || !n1.intersection(n2)?.is_zero() {
        return Err(Error::NotComplementary);
    }
    // columns of b: basis of n1 then basis of n2
    let b = n1.basis().vstack(n2.basis()).transpose();
    let b_inv = b.inverse().ok_or(Error::NotComplementary)?;
    let p = Matrix::diagonal(
        &(0..d)
            .map(|i| {
                if i < n1.dim() {
                    scalar::zero()
                } else {
                    scalar::one()
                }
            })
            .collect::<Vec<_>>(),
    );
    Ok(RBOperator::weight_one(b.mul(&p).mul(&b_inv).neg()))
}
