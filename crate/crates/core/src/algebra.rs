//! Lie algebras given by structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

/// Optional descriptive data attached to an algebra. None of it is used to
/// decide structural predicates; it records the named subspaces of a known
/// construction so they can be checked against computed invariants.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Metadata {
    pub name: Option<String>,
    pub levi: Option<Subspace>,
    pub radical: Option<Subspace>,
    pub nilradical: Option<Subspace>,
    /// Module decomposition of the radical, e.g. `V(2)+n3`.
    pub modules: Option<String>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Metadata::default()
    }
}

/// A Lie algebra `(V, [,])` with `V = K^n` and the bracket stored as an
/// antisymmetric structure-constant tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    brackets: Tensor3,
    labels: Vec<String>,
    metadata: Metadata,
}

/// Cyclic Jacobi sums `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
/// for every basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiResidual {
    n: usize,
    data: Vec<Scalar>,
}

impl JacobiResidual {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = ((i * self.n + j) * self.n + k) * self.n;
        &self.data[o..o + self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First basis triple (0-based) with a nonzero residual.
    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let idx = self.data.iter().position(|v| !v.is_zero())?;
        let t = idx / n;
        Some((t / (n * n), (t / n) % n, t % n))
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(brackets: Tensor3) -> Result<Self> {
        let brackets = brackets.into_antisymmetric()?;
        let g = Self {
            labels: default_labels(brackets.dim()),
            brackets,
            metadata: Metadata::default(),
        };
        if let Some((i, j, k)) = g.jacobi_residual().first_violation() {
            return Err(Error::JacobiViolation {
                i: i + 1,
                j: j + 1,
                k: k + 1,
            });
        }
        Ok(g)
    }

    /// Builds an algebra from 1-based entries `[e_i, e_j] += c e_k` with
    /// `i < j`, as brackets are usually written down.
    pub fn from_table(n: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut t = Tensor3::zeros(n);
        for &(i, j, k, c) in entries {
            if i == 0 || j == 0 || k == 0 || i.max(j).max(k) > n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j).max(k),
                });
            }
            let (i, j, k) = (i - 1, j - 1, k - 1);
            let v = t.get(i, j, k) + scalar::int(c);
            t.set(i, j, k, v.clone());
            t.set(j, i, k, -v);
        }
        Self::new(t)
    }

    pub fn abelian(n: usize) -> Self {
        Self::new(Tensor3::zeros(n)).expect("zero bracket is a Lie bracket")
    }

    /// The Lie algebra spanned by the given matrices under the commutator.
    /// The matrices must be linearly independent and span a subalgebra.
    pub fn from_matrix_basis(mats: &[Matrix]) -> Result<Self> {
        let n = mats.len();
        let flat = |m: &Matrix| m.entries().to_vec();
        let width = mats.first().map_or(0, |m| m.entries().len());
        let basis = Matrix::from_rows(width, mats.iter().map(flat).collect()).transpose();
        if basis.rank() != n {
            return Err(Error::Format("matrix basis is linearly dependent".into()));
        }
        let mut t = Tensor3::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let c = mats[i].commutator(&mats[j]);
                let sol = basis
                    .solve_affine(c.entries())
                    .ok_or(Error::NotSubalgebra)?;
                for (k, v) in sol.particular.into_iter().enumerate() {
                    t.set(j, i, k, -v.clone());
                    t.set(i, j, k, v);
                }
            }
        }
        Self::new(t)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_metadata(mut self, metadata: Metadata) -> Self {
        self.metadata = metadata;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.metadata.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.brackets.dim()
    }

    pub fn brackets(&self) -> &Tensor3 {
        &self.brackets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn metadata(&self) -> &Metadata {
        &self.metadata
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.name.as_deref()
    }

    /// True when the two brackets agree as tensors (labels and metadata
    /// are ignored).
    pub fn same_brackets(&self, other: &LieAlgebra) -> bool {
        self.brackets == other.brackets
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.brackets.apply(x, y)
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.brackets.slot(i, j)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_zero()
    }

    /// Matrix of `ad(e_i)`; column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.brackets.get(i, j, k).clone())
    }

    pub fn ad_vector(&self, x: &[Scalar]) -> Result<Matrix> {
        linalg::check_len(x, self.dim())?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.ad(i).scale(xi));
            }
        }
        Ok(m)
    }

    pub fn jacobi_residual(&self) -> JacobiResidual {
        jacobi_residual(&self.brackets)
    }

    /// `[A, B]`, the span of all brackets of basis vectors of `a` and `b`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut rows = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                rows.push(self.bracket(x, y)?);
            }
        }
        Ok(Subspace::from_matrix(&Matrix::from_rows(self.dim(), rows)))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_subspaces(s, s)?))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_subspaces(&Subspace::full(self.dim()), s)?))
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        let full = Subspace::full(self.dim());
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_subspaces(&full, &cur)?)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// The subalgebra `s` as a Lie algebra in the coordinates of its
    /// canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        let basis: Vec<Vec<Scalar>> = s.basis_vectors().map(<[Scalar]>::to_vec).collect();
        let m = basis.len();
        let mut t = Tensor3::zeros(m);
        for a in 0..m {
            for b in a + 1..m {
                let v = self.bracket(&basis[a], &basis[b])?;
                let coords = s.coordinates(&v).ok_or(Error::NotSubalgebra)?;
                for (k, c) in coords.into_iter().enumerate() {
                    t.set(b, a, k, -c.clone());
                    t.set(a, b, k, c);
                }
            }
        }
        LieAlgebra::new(t)
    }

    /// Quotient by the ideal `ideal`, in coordinates of the standard basis
    /// vectors complementing its canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotSubalgebra);
        }
        let comp = ideal.complement_indices();
        let m = comp.len();
        let n = self.dim();
        let mut t = Tensor3::zeros(m);
        for a in 0..m {
            for b in a + 1..m {
                let v = self.bracket_basis(comp[a], comp[b]).to_vec();
                let reduced = reduce_modulo(&v, ideal);
                debug_assert_eq!(reduced.len(), n);
                for (k, &c) in comp.iter().enumerate() {
                    let val = reduced[c].clone();
                    t.set(b, a, k, -val.clone());
                    t.set(a, b, k, val);
                }
            }
        }
        LieAlgebra::new(t)
    }
}

/// Jacobi residual of an arbitrary (not necessarily Lie) bracket tensor.
pub fn jacobi_residual(t: &Tensor3) -> JacobiResidual {
    let n = t.dim();
    let mut data = Vec::with_capacity(n * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = vec![Scalar::zero(); n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    // [[e_a, e_b], e_c] = sum_p c[a][b][p] [e_p, e_c]
                    for (p, cp) in t.slot(a, b).iter().enumerate() {
                        if cp.is_zero() {
                            continue;
                        }
                        for (s, v) in acc.iter_mut().zip(t.slot(p, c)) {
                            if !v.is_zero() {
                                *s += cp * v;
                            }
                        }
                    }
                }
                data.extend(acc);
            }
        }
    }
    JacobiResidual { n, data }
}

/// Reduces `v` modulo `s` so that it vanishes on the pivot columns of `s`.
pub(crate) fn reduce_modulo(v: &[Scalar], s: &Subspace) -> Vec<Scalar> {
    let mut r = v.to_vec();
    for (row, &p) in s.basis_vectors().zip(s.pivots()) {
        let c = r[p].clone();
        if c.is_zero() {
            continue;
        }
        for (x, b) in r.iter_mut().zip(row) {
            if !b.is_zero() {
                *x -= &c * b;
            }
        }
    }
    r
}

/// The standard basis of `sl_2`: `[e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(1, 2, 3, 1), (1, 3, 1, -2), (2, 3, 2, 2)])
        .expect("sl2 table is a Lie algebra")
        .with_name("sl2")
}

/// `sl_3` in the basis `E12, E13, E23, E21, E31, E32, E11-E22, E22-E33`.
pub fn sl3() -> LieAlgebra {
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(3, 3);
        m[(i, j)] = Scalar::one();
        m
    };
    let mats = vec![
        unit(0, 1),
        unit(0, 2),
        unit(1, 2),
        unit(1, 0),
        unit(2, 0),
        unit(2, 1),
        unit(0, 0).sub(&unit(1, 1)),
        unit(1, 1).sub(&unit(2, 2)),
    ];
    LieAlgebra::from_matrix_basis(&mats)
        .expect("sl3 basis")
        .with_name("sl3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        linalg::unit_vector(n, i)
    }

    #[test]
    fn sl2_brackets_follow_the_standard_table() {
        let g = sl2();
        assert_eq!(g.bracket(&e(3, 0), &e(3, 1)).unwrap(), e(3, 2));
        assert_eq!(
            g.bracket(&e(3, 2), &e(3, 0)).unwrap(),
            vec![int(2), int(0), int(0)]
        );
    }

    #[test]
    fn bracket_is_antisymmetric_on_arbitrary_vectors() {
        let g = sl2();
        let x = vec![int(1), int(-2), int(3)];
        let y = vec![int(0), int(5), int(-1)];
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        assert!(xy.iter().zip(&yx).all(|(a, b)| *a == -b.clone()));
        assert!(linalg::is_zero_vec(&g.bracket(&x, &x).unwrap()));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(sl2().bracket(&e(2, 0), &e(3, 0)).is_err());
    }

    #[test]
    fn non_lie_table_has_nonzero_residual() {
        // [e1,e2]=e1, [e1,e3]=e1, [e2,e3]=e3.
        // Cyclic sum for (e1,e2,e3): [e1,e3] + [e3,e1] + [[e3,e1],e2] = [-e1, e2] = -e1.
        let t = Tensor3::antisymmetric_from_upper(
            3,
            [(0, 1, 0, int(1)), (0, 2, 0, int(1)), (1, 2, 2, int(1))],
        )
        .unwrap();
        let r = jacobi_residual(&t);
        assert_eq!(r.get(0, 1, 2), &[int(-1), int(0), int(0)][..]);
        assert_eq!(r.first_violation(), Some((0, 1, 2)));
        let err = LieAlgebra::new(t).unwrap_err();
        assert_eq!(err, Error::JacobiViolation { i: 1, j: 2, k: 3 });
    }

    #[test]
    fn sl3_is_eight_dimensional_lie_algebra() {
        let g = sl3();
        assert_eq!(g.dim(), 8);
        assert!(g.jacobi_residual().is_zero());
    }

    #[test]
    fn quotient_by_center_of_heisenberg_is_abelian() {
        let n3 = LieAlgebra::from_table(3, &[(1, 2, 3, 1)]).unwrap();
        let z = Subspace::coordinate(3, &[2]);
        let q = n3.quotient(&z).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
    }
}
