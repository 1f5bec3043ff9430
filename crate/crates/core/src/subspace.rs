//! Subspaces in canonical reduced row-echelon form.
//!
//! Two subspaces are equal exactly when their basis matrices are equal, so
//! `PartialEq` is subspace equality.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<V: AsRef<[Scalar]>>(
        ambient: usize,
        vectors: impl IntoIterator<Item = V>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            linalg::check_len(v, ambient)?;
            rows.push(v.to_vec());
        }
        Ok(Self::from_matrix(&Matrix::from_rows(ambient, rows)))
    }

    /// Span of standard basis vectors `e_i` for the given 0-based indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let rows: Vec<Vec<Scalar>> = indices
            .iter()
            .map(|&i| linalg::unit_vector(ambient, i))
            .collect();
        Self::from_matrix(&Matrix::from_rows(ambient, rows))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Self {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis matrix, one basis vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None`
    /// when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r -= c * b;
                }
            }
        }
        linalg::is_zero_vec(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Annihilator `{w : <w, v> = 0 for all v}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let rows = self.basis.nullspace();
        Self::from_matrix(&Matrix::from_rows(self.ambient, rows))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let constraints = self.annihilator().sum(&other.annihilator())?;
        Ok(constraints.annihilator())
    }

    /// Standard basis indices that complete the canonical basis to a basis
    /// of the ambient space (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            })
        }
    }
}
