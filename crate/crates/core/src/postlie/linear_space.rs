//! The affine space of products satisfying the two linear post-Lie axioms.
//!
//! The derivation axiom says every `L(e_i)` lies in `Der(n)`, so products
//! are parametrized by `L(e_i) = sum_s t[i][s] D_s` over a basis `D_s` of
//! `Der(n)`. The commutator axiom is then a linear system in the `t`.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::postlie::product::PAProduct;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// `particular + span(basis)` inside the `n^3` product coordinates, with
/// coordinate `(i * n + j) * n + k` holding `a[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineProductSpace {
    n: usize,
    particular: Vec<Scalar>,
    basis: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PALinearSpace {
    /// The linear axioms are inconsistent.
    Empty,
    Affine(AffineProductSpace),
}

impl PALinearSpace {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            PALinearSpace::Empty => None,
            PALinearSpace::Affine(a) => Some(a.dimension()),
        }
    }

    pub fn as_affine(&self) -> Option<&AffineProductSpace> {
        match self {
            PALinearSpace::Empty => None,
            PALinearSpace::Affine(a) => Some(a),
        }
    }
}

impl AffineProductSpace {
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn particular(&self) -> &[Scalar] {
        &self.particular
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// `particular + sum_r params[r] basis[r]` as a product.
    pub fn product_at(&self, params: &[Scalar]) -> Result<PAProduct> {
        if params.len() != self.basis.len() {
            return Err(Error::DimensionMismatch {
                expected: self.basis.len(),
                found: params.len(),
            });
        }
        let mut v = self.particular.clone();
        for (p, b) in params.iter().zip(&self.basis) {
            if p.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += p * y;
                }
            }
        }
        Ok(product_from_coords(self.n, &v))
    }

    pub fn contains(&self, p: &PAProduct) -> bool {
        if p.dim() != self.n {
            return false;
        }
        let diff: Vec<Scalar> = p
            .tensor()
            .entries()
            .iter()
            .zip(&self.particular)
            .map(|(a, b)| a - b)
            .collect();
        if self.basis.is_empty() {
            return diff.iter().all(Zero::is_zero);
        }
        let m = Matrix::from_rows(diff.len(), self.basis.clone()).transpose();
        m.solve_affine(&diff).is_some()
    }
}

pub(crate) fn product_from_coords(n: usize, v: &[Scalar]) -> PAProduct {
    let entries = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c.clone()));
    PAProduct::new(Tensor3::from_entries(n, entries))
}

/// Solves the commutator and derivation axioms for the product tensor.
pub fn pa_linear_space(g: &LieAlgebra, n_alg: &LieAlgebra) -> Result<PALinearSpace> {
    let n = n_alg.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    let ders = n_alg.derivations();
    let d = ders.len();
    let var = |i: usize, s: usize| i * d + s;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // a[i][j][k] - a[j][i][k] = [e_i,e_j]_k - {e_i,e_j}_k
                let mut row = vec![Scalar::zero(); n * d];
                for (s, ds) in ders.iter().enumerate() {
                    row[var(i, s)] += &ds[(k, j)];
                    row[var(j, s)] -= &ds[(k, i)];
                }
                let b = g.brackets().get(i, j, k) - n_alg.brackets().get(i, j, k);
                if row.iter().any(|x| !x.is_zero()) || !b.is_zero() {
                    rows.push(row);
                    rhs.push(b);
                }
            }
        }
    }
    let system = Matrix::from_rows(n * d, rows);
    let Some(sol) = system.solve_affine(&rhs) else {
        return Ok(PALinearSpace::Empty);
    };
    let to_product = |t: &[Scalar]| {
        let mut v = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for (s, ds) in ders.iter().enumerate() {
                let c = &t[var(i, s)];
                if c.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for k in 0..n {
                        if !ds[(k, j)].is_zero() {
                            v[(i * n + j) * n + k] += c * &ds[(k, j)];
                        }
                    }
                }
            }
        }
        v
    };
    Ok(PALinearSpace::Affine(AffineProductSpace {
        n,
        particular: to_product(&sol.particular),
        basis: sol.homogeneous.iter().map(|h| to_product(h)).collect(),
    }))
}
