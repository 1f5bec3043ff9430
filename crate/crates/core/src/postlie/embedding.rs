//! Double embeddings `g -> n + n` for semisimple `n`.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Linear map `x -> (j1 x, j2 x)` from `g` into `n + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleEmbedding {
    pub j1: Matrix,
    pub j2: Matrix,
}

impl DoubleEmbedding {
    pub fn new(j1: Matrix, j2: Matrix) -> Self {
        Self { j1, j2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub homomorphism: bool,
    pub injective: bool,
    pub difference_bijective: bool,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.homomorphism && self.injective && self.difference_bijective
    }
}

fn is_homomorphism(j: &Matrix, g: &LieAlgebra, n: &LieAlgebra) -> bool {
    let d = g.dim();
    let cols: Vec<Vec<_>> = (0..d).map(|i| j.column(i)).collect();
    (0..d).all(|a| {
        (a + 1..d).all(|b| {
            j.mul_vec(g.bracket_basis(a, b)) == n.bracket(&cols[a], &cols[b]).expect("dim")
        })
    })
}

pub fn embedding_report(
    phi: &DoubleEmbedding,
    g: &LieAlgebra,
    n: &LieAlgebra,
) -> Result<EmbeddingReport> {
    let d = n.dim();
    if g.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: g.dim(),
        });
    }
    for m in [&phi.j1, &phi.j2] {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: m.rows().max(m.cols()),
            });
        }
    }
    if !n.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let homomorphism = is_homomorphism(&phi.j1, g, n) && is_homomorphism(&phi.j2, g, n);
    let injective = phi.j1.vstack(&phi.j2).rank() == d;
    let difference_bijective = !phi.j1.sub(&phi.j2).determinant().is_zero();
    Ok(EmbeddingReport {
        homomorphism,
        injective,
        difference_bijective,
    })
}

/// Whether `phi` is an injective homomorphism with `j1 - j2` bijective.
pub fn verify_double_embedding(
    phi: &DoubleEmbedding,
    g: &LieAlgebra,
    n: &LieAlgebra,
) -> Result<bool> {
    Ok(embedding_report(phi, g, n)?.holds())
}
