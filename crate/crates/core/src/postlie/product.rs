//! Post-Lie products and their verification.

use num_traits::Zero;

use crate::algebra::{jacobi_residual, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix};
use crate::scalar::{self, Scalar};
use crate::tensor::Tensor3;

/// A bilinear product `x . y = sum_{i,j} x_i y_j a[i][j][.]` on `K^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAProduct {
    tensor: Tensor3,
}

impl PAProduct {
    pub fn new(tensor: Tensor3) -> Self {
        Self { tensor }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Tensor3::zeros(n))
    }

    /// Product from 1-based `(i, j, k, c)` meaning `e_i . e_j` has `c` at `e_k`.
    pub fn from_table(n: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut t = Tensor3::zeros(n);
        for &(i, j, k, c) in entries {
            if i == 0 || j == 0 || k == 0 || i.max(j).max(k) > n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j).max(k),
                });
            }
            t.set(i - 1, j - 1, k - 1, scalar::int(c));
        }
        Ok(Self::new(t))
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    pub fn into_tensor(self) -> Tensor3 {
        self.tensor
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.tensor.apply(x, y)
    }

    /// Product on `K^{n1+n2}` acting by `p` on the first block, by `q` on the
    /// second, and with zero mixed products.
    pub fn direct_sum(&self, other: &PAProduct) -> PAProduct {
        let (a, b) = (self.dim(), other.dim());
        let shifted = other
            .tensor
            .nonzero_entries()
            .map(|(i, j, k, c)| (i + a, j + a, k + a, c.clone()));
        let own = self
            .tensor
            .nonzero_entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()));
        PAProduct::new(Tensor3::from_entries(
            a + b,
            own.chain(shifted).collect::<Vec<_>>(),
        ))
    }

    /// Left multiplication `L(e_i)`; column `j` is `e_i . e_j`.
    pub fn left(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.tensor.get(i, j, k).clone())
    }

    /// `L(x)` for a coordinate vector `x`.
    pub fn left_vector(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.left(i).scale(xi));
            }
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// `x.y - y.x = [x,y] - {x,y}`
    Commutator,
    /// `[x,y].z = x.(y.z) - y.(x.z)`
    Representation,
    /// `x.{y,z} = {x.y,z} + {y,x.z}`
    Derivation,
}

impl Axiom {
    pub fn number(self) -> u8 {
        match self {
            Axiom::Commutator => 1,
            Axiom::Representation => 2,
            Axiom::Derivation => 3,
        }
    }
}

/// First basis triple (1-based) at which an axiom fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let args: Vec<String> = self.indices.iter().map(|i| format!("e{i}")).collect();
        write!(
            f,
            "axiom {} fails at ({})",
            self.axiom.number(),
            args.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAReport {
    pub axiom1: bool,
    pub axiom2: bool,
    pub axiom3: bool,
    /// `L([x,y]) = [L(x), L(y)]`, checked on left-multiplication matrices.
    pub l_is_rep: bool,
    /// Every `L(e_i)` is a derivation of `n`.
    pub l_in_der: bool,
    pub first_failure: Option<AxiomFailure>,
}

impl PAReport {
    pub fn all_axioms(&self) -> bool {
        self.axiom1 && self.axiom2 && self.axiom3
    }

    pub fn holds(&self) -> bool {
        self.all_axioms() && self.l_is_rep && self.l_in_der
    }
}

fn check_dims(p: &PAProduct, g: &LieAlgebra, n: &LieAlgebra) -> Result<()> {
    for d in [g.dim(), n.dim()] {
        if d != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: d,
            });
        }
    }
    Ok(())
}

/// Checks the three post-Lie axioms on all basis pairs and triples.
pub fn verify_pa(p: &PAProduct, g: &LieAlgebra, n: &LieAlgebra) -> Result<PAReport> {
    check_dims(p, g, n)?;
    let d = p.dim();
    let e = |i: usize| unit_vector(d, i);
    let mul = |x: &[Scalar], y: &[Scalar]| p.apply(x, y).expect("dim");
    let mut first_failure = None;
    let mut fail = |axiom: Axiom, idx: &[usize]| {
        if first_failure.is_none() {
            first_failure = Some(AxiomFailure {
                axiom,
                indices: idx.iter().map(|i| i + 1).collect(),
            });
        }
        false
    };

    let mut axiom1 = true;
    'a1: for i in 0..d {
        for j in i + 1..d {
            let ok = (0..d).all(|k| {
                p.tensor.get(i, j, k) - p.tensor.get(j, i, k)
                    == g.brackets().get(i, j, k) - n.brackets().get(i, j, k)
            });
            if !ok {
                axiom1 = fail(Axiom::Commutator, &[i, j]);
                break 'a1;
            }
        }
    }

    let mut axiom2 = true;
    'a2: for i in 0..d {
        for j in 0..d {
            let gij = g.bracket_basis(i, j).to_vec();
            for k in 0..d {
                let lhs = mul(&gij, &e(k));
                let a = mul(&e(i), &mul(&e(j), &e(k)));
                let b = mul(&e(j), &mul(&e(i), &e(k)));
                if lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .any(|(l, (x, y))| *l != x - y)
                {
                    axiom2 = fail(Axiom::Representation, &[i, j, k]);
                    break 'a2;
                }
            }
        }
    }

    let mut axiom3 = true;
    'a3: for i in 0..d {
        for j in 0..d {
            for k in j + 1..d {
                let lhs = mul(&e(i), n.bracket_basis(j, k));
                let a = n.bracket(&mul(&e(i), &e(j)), &e(k)).expect("dim");
                let b = n.bracket(&e(j), &mul(&e(i), &e(k))).expect("dim");
                if lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .any(|(l, (x, y))| *l != x + y)
                {
                    axiom3 = fail(Axiom::Derivation, &[i, j, k]);
                    break 'a3;
                }
            }
        }
    }

    let ls: Vec<Matrix> = (0..d).map(|i| p.left(i)).collect();
    let l_is_rep = (0..d).all(|i| {
        (i + 1..d).all(|j| p.left_vector(g.bracket_basis(i, j)) == ls[i].commutator(&ls[j]))
    });
    let l_in_der = ls.iter().all(|l| n.is_derivation(l));

    Ok(PAReport {
        axiom1,
        axiom2,
        axiom3,
        l_is_rep,
        l_in_der,
        first_failure,
    })
}

/// Bracket `[x,y] = x.y - y.x + {x,y}` defined by a product on `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedBracket {
    pub tensor: Tensor3,
    pub jacobi_ok: bool,
    pub algebra: Option<LieAlgebra>,
}

pub fn induced_bracket(p: &PAProduct, n: &LieAlgebra) -> Result<InducedBracket> {
    let d = p.dim();
    if n.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: n.dim(),
        });
    }
    let mut upper = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                let v = p.tensor.get(i, j, k) - p.tensor.get(j, i, k) + n.brackets().get(i, j, k);
                if !v.is_zero() {
                    upper.push((i, j, k, v));
                }
            }
        }
    }
    let tensor = Tensor3::antisymmetric_from_upper(d, upper)?;
    let jacobi_ok = jacobi_residual(&tensor).is_zero();
    let algebra = if jacobi_ok {
        Some(LieAlgebra::new(tensor.clone())?)
    } else {
        None
    };
    Ok(InducedBracket {
        tensor,
        jacobi_ok,
        algebra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl2;

    #[test]
    fn zero_product_on_equal_brackets() {
        let g = sl2();
        let r = verify_pa(&PAProduct::zero(3), &g, &g).unwrap();
        assert!(r.holds());
        assert_eq!(r.first_failure, None);
        let ind = induced_bracket(&PAProduct::zero(3), &g).unwrap();
        assert!(ind.jacobi_ok);
        assert!(ind.algebra.unwrap().same_brackets(&g));
    }

    #[test]
    fn zero_product_fails_axiom_one_on_different_brackets() {
        let r = verify_pa(&PAProduct::zero(3), &LieAlgebra::abelian(3), &sl2()).unwrap();
        assert!(!r.axiom1);
        assert_eq!(
            r.first_failure.unwrap(),
            AxiomFailure {
                axiom: Axiom::Commutator,
                indices: vec![1, 2]
            }
        );
        // L = 0 is still a representation by derivations.
        assert!(r.axiom2 && r.axiom3 && r.l_is_rep && r.l_in_der);
    }

    #[test]
    fn left_multiplication_columns() {
        let p = PAProduct::from_table(2, &[(1, 2, 1, 3)]).unwrap();
        assert_eq!(p.left(0), Matrix::from_i64(&[&[0, 3], &[0, 0]]));
        assert!(p.left(1).is_zero());
        assert!(PAProduct::from_table(2, &[(1, 3, 1, 1)]).is_err());
    }
}
