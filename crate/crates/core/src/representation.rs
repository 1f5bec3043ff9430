//! Finite-dimensional representations, the irreducible `sl_2`-modules
//! `V(n)`, and extension of generator actions to free-nilpotent algebras.

use num_traits::Zero;

use crate::algebra::{self, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// A homomorphism `rho: s -> gl(m)`, stored as the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    source: LieAlgebra,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Checks `rho([e_i, e_j]) = [rho(e_i), rho(e_j)]` on all basis pairs.
    pub fn new(source: LieAlgebra, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: matrices.len(),
            });
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.rows().max(m.cols()),
            });
        }
        let rep = Self {
            source,
            dim,
            matrices,
        };
        for i in 0..rep.source.dim() {
            for j in i + 1..rep.source.dim() {
                let lhs = rep.image(rep.source.bracket_basis(i, j));
                if lhs != rep.matrices[i].commutator(&rep.matrices[j]) {
                    return Err(Error::NotHomomorphism { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(rep)
    }

    /// The zero representation of `source` on `K^dim`.
    pub fn trivial(source: LieAlgebra, dim: usize) -> Self {
        let matrices = vec![Matrix::zeros(dim, dim); source.dim()];
        Self {
            source,
            dim,
            matrices,
        }
    }

    /// The adjoint representation.
    pub fn adjoint(g: &LieAlgebra) -> Self {
        let matrices = (0..g.dim()).map(|i| g.ad(i)).collect();
        Self {
            source: g.clone(),
            dim: g.dim(),
            matrices,
        }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `rho(x)` for a coordinate vector `x` of the source.
    pub fn image(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (xi, r) in x.iter().zip(&self.matrices) {
            if !xi.is_zero() {
                m = m.add(&r.scale(xi));
            }
        }
        m
    }

    /// Direct sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.source.same_brackets(&other.source) {
            return Err(Error::Format(
                "direct sum of representations of different algebras".into(),
            ));
        }
        let (a, b) = (self.dim, other.dim);
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(x, y)| {
                Matrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x[(i, j)].clone(),
                    (false, false) => y[(i - a, j - a)].clone(),
                    _ => Scalar::zero(),
                })
            })
            .collect();
        Ok(Representation {
            source: self.source.clone(),
            dim: a + b,
            matrices,
        })
    }

    /// Vectors killed by every `rho(e_i)`.
    pub fn fixed_subspace(&self) -> Subspace {
        if self.matrices.is_empty() {
            return Subspace::full(self.dim);
        }
        let stacked = self
            .matrices
            .iter()
            .skip(1)
            .fold(self.matrices[0].clone(), |acc, m| acc.vstack(m));
        Subspace::from_matrix(&Matrix::from_rows(self.dim, stacked.nullspace()))
    }

    pub fn is_invariant(&self, w: &Subspace) -> bool {
        self.matrices
            .iter()
            .all(|m| w.basis_vectors().all(|v| w.contains(&m.mul_vec(v))))
    }

    /// The induced action on `V / w`, in coordinates of the standard basis
    /// vectors complementing the canonical basis of `w`.
    pub fn quotient(&self, w: &Subspace) -> Result<Representation> {
        if !self.is_invariant(w) {
            return Err(Error::Format("quotient by a non-invariant subspace".into()));
        }
        let comp = w.complement_indices();
        let m = comp.len();
        let matrices = self
            .matrices
            .iter()
            .map(|r| {
                let mut q = Matrix::zeros(m, m);
                for (b, &cb) in comp.iter().enumerate() {
                    let img = algebra::reduce_modulo(&r.column(cb), w);
                    for (a, &ca) in comp.iter().enumerate() {
                        q[(a, b)] = img[ca].clone();
                    }
                }
                q
            })
            .collect();
        Ok(Representation {
            source: self.source.clone(),
            dim: m,
            matrices,
        })
    }

    /// Irreducible over the algebraic closure (Burnside: the generated
    /// associative algebra is all of `End(V)`).
    pub fn is_absolutely_irreducible(&self) -> bool {
        is_absolutely_irreducible(&self.matrices, self.dim)
    }
}

/// Dimension of the unital associative algebra generated by `gens` inside
/// `End(K^m)`.
pub fn generated_algebra_dim(gens: &[Matrix], m: usize) -> usize {
    let mut echelon = Subspace::zero(m * m);
    let mut queue = vec![Matrix::identity(m)];
    while let Some(w) = queue.pop() {
        let next = echelon
            .sum(&Subspace::from_matrix(&Matrix::from_rows(
                m * m,
                vec![w.entries().to_vec()],
            )))
            .expect("ambient");
        if next.dim() == echelon.dim() {
            continue;
        }
        echelon = next;
        for g in gens {
            queue.push(g.mul(&w));
        }
        if echelon.dim() == m * m {
            break;
        }
    }
    echelon.dim()
}

pub fn is_absolutely_irreducible(gens: &[Matrix], m: usize) -> bool {
    m > 0 && generated_algebra_dim(gens, m) == m * m
}

/// The irreducible `sl_2`-module `V(n)` in the standard basis of `sl_2`.
///
/// Weight basis `v_0, ..., v_{n-1}` with descending weights `n-1-2k`:
/// `e3 v_k = (n-1-2k) v_k`, `e2 v_k = v_{k+1}`, `e1 v_k = k(n-k) v_{k-1}`.
pub fn sl2_module(n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidModuleDimension(n));
    }
    let mut raise = Matrix::zeros(n, n);
    let mut lower = Matrix::zeros(n, n);
    let mut cartan = Matrix::zeros(n, n);
    for k in 0..n {
        cartan[(k, k)] = scalar::int(n as i64 - 1 - 2 * k as i64);
        if k + 1 < n {
            lower[(k + 1, k)] = scalar::int(1);
        }
        if k > 0 {
            raise[(k - 1, k)] = scalar::int((k * (n - k)) as i64);
        }
    }
    Representation::new(algebra::sl2(), n, vec![raise, lower, cartan])
}

/// Free-nilpotent algebras with a fixed basis: generators first, then one
/// basis vector per defining bracket of earlier basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeNilpotentPreset {
    /// Two generators, class 3: `[e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5`.
    F23,
    /// Three generators, class 2: `[e1,e2]=e4, [e1,e3]=e5, [e2,e3]=e6`.
    F32,
}

impl FreeNilpotentPreset {
    pub fn generators(self) -> usize {
        match self {
            Self::F23 => 2,
            Self::F32 => 3,
        }
    }

    /// Defining brackets `(a, b, c)` meaning `[e_a, e_b] = e_c`, 1-based.
    pub fn defining_brackets(self) -> &'static [(usize, usize, usize)] {
        match self {
            Self::F23 => &[(1, 2, 3), (1, 3, 4), (2, 3, 5)],
            Self::F32 => &[(1, 2, 4), (1, 3, 5), (2, 3, 6)],
        }
    }

    pub fn algebra(self) -> LieAlgebra {
        let entries: Vec<(usize, usize, usize, i64)> = self
            .defining_brackets()
            .iter()
            .map(|&(a, b, c)| (a, b, c, 1))
            .collect();
        let n = self.generators() + entries.len();
        let name = match self {
            Self::F23 => "f23",
            Self::F32 => "f32",
        };
        LieAlgebra::from_table(n, &entries)
            .expect("free-nilpotent table")
            .with_name(name)
    }
}

/// Extends an action on the generator space of a free-nilpotent algebra to
/// an action by derivations on the whole algebra, using
/// `D[e_a, e_b] = [D e_a, e_b] + [e_a, D e_b]` along the defining brackets.
pub fn free_nilpotent_extension(
    gen_action: &Representation,
    preset: FreeNilpotentPreset,
) -> Result<Representation> {
    let k = preset.generators();
    if gen_action.dim() != k {
        return Err(Error::PresetMismatch(format!(
            "preset has {k} generators but the action is on a {}-dimensional space",
            gen_action.dim()
        )));
    }
    let f = preset.algebra();
    let n = f.dim();
    let mut matrices = Vec::with_capacity(gen_action.matrices().len());
    for (idx, g) in gen_action.matrices().iter().enumerate() {
        let mut d = Matrix::zeros(n, n);
        for r in 0..k {
            for c in 0..k {
                d[(r, c)] = g[(r, c)].clone();
            }
        }
        for &(a, b, c) in preset.defining_brackets() {
            let (a, b, c) = (a - 1, b - 1, c - 1);
            let da = d.column(a);
            let db = d.column(b);
            let ea = crate::linalg::unit_vector(n, a);
            let eb = crate::linalg::unit_vector(n, b);
            let x = f.bracket(&da, &eb)?;
            let y = f.bracket(&ea, &db)?;
            for (r, (p, q)) in x.iter().zip(&y).enumerate() {
                d[(r, c)] = p + q;
            }
        }
        if !f.is_derivation(&d) {
            return Err(Error::NotDerivation { index: idx + 1 });
        }
        matrices.push(d);
    }
    Representation::new(gen_action.source().clone(), n, matrices)
}

/// Dimension of the trivial part of `r / [r, r]` under an action of `s` on
/// `r` by derivations: vectors of the abelianization fixed by all of `s`.
pub fn abelianization_fixed_dim(action: &Representation, r: &LieAlgebra) -> Result<usize> {
    if action.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: action.dim(),
        });
    }
    let q = action.quotient(&r.derived_algebra())?;
    Ok(q.fixed_subspace().dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn v2_matches_the_standard_natural_action() {
        let v2 = sl2_module(2).unwrap();
        assert_eq!(v2.matrices()[0], Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(v2.matrices()[1], Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert_eq!(v2.matrices()[2], Matrix::from_i64(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn v1_is_trivial_and_zero_is_rejected() {
        let v1 = sl2_module(1).unwrap();
        assert!(v1.matrices().iter().all(Matrix::is_zero));
        assert_eq!(sl2_module(0).unwrap_err(), Error::InvalidModuleDimension(0));
    }

    #[test]
    fn v3_weights_and_irreducibility() {
        let v3 = sl2_module(3).unwrap();
        let h = &v3.matrices()[2];
        assert_eq!(
            (0..3).map(|i| h[(i, i)].clone()).collect::<Vec<_>>(),
            vec![int(2), int(0), int(-2)]
        );
        assert!(v3.is_absolutely_irreducible());
        // closure of the weight-zero vector under the action is everything
        let mut span = Subspace::coordinate(3, &[1]);
        loop {
            let images: Vec<Vec<Scalar>> = v3
                .matrices()
                .iter()
                .flat_map(|m| {
                    span.basis_vectors()
                        .map(|v| m.mul_vec(v))
                        .collect::<Vec<_>>()
                })
                .collect();
            let next = span.sum(&Subspace::span(3, images).unwrap()).unwrap();
            if next == span {
                break;
            }
            span = next;
        }
        assert!(span.is_full());
    }

    #[test]
    fn reducible_sum_is_not_irreducible() {
        let v = sl2_module(2)
            .unwrap()
            .direct_sum(&sl2_module(1).unwrap())
            .unwrap();
        assert!(!v.is_absolutely_irreducible());
        assert_eq!(v.fixed_subspace().dim(), 1);
    }

    #[test]
    fn f23_extension_cartan_diagonal() {
        let ext =
            free_nilpotent_extension(&sl2_module(2).unwrap(), FreeNilpotentPreset::F23).unwrap();
        let h = &ext.matrices()[2];
        let diag: Vec<Scalar> = (0..5).map(|i| h[(i, i)].clone()).collect();
        assert_eq!(diag, vec![int(1), int(-1), int(0), int(1), int(-1)]);
    }

    #[test]
    fn trivial_generator_action_extends_to_zero() {
        let triv = Representation::trivial(algebra::sl2(), 2);
        let ext = free_nilpotent_extension(&triv, FreeNilpotentPreset::F23).unwrap();
        assert!(ext.matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn f32_extension_lands_in_derivations() {
        let ext =
            free_nilpotent_extension(&sl2_module(3).unwrap(), FreeNilpotentPreset::F32).unwrap();
        let f = FreeNilpotentPreset::F32.algebra();
        assert!(ext.matrices().iter().all(|d| f.is_derivation(d)));
    }

    #[test]
    fn preset_mismatch_is_reported() {
        let err = free_nilpotent_extension(&sl2_module(3).unwrap(), FreeNilpotentPreset::F23)
            .unwrap_err();
        assert!(matches!(err, Error::PresetMismatch(_)));
    }

    #[test]
    fn homomorphism_check_rejects_bad_matrices() {
        let bad = vec![
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[1, 0]]),
            Matrix::identity(2),
        ];
        assert!(matches!(
            Representation::new(algebra::sl2(), 2, bad),
            Err(Error::NotHomomorphism { .. })
        ));
    }
}
