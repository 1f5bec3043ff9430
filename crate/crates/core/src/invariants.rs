//! Structural invariants: series, center, Killing form, radical,
//! derivations and the class predicates built on them.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::representation;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Runs `next` from `start` until the term is zero or repeats. The stopping
/// term is included, so a perfect algebra yields `[g, g]` and an abelian
/// one `[g, 0]`.
fn series(start: Subspace, mut next: impl FnMut(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut out = vec![start];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_zero() {
            return out;
        }
        let t = next(last);
        let done = t == *last;
        out.push(t);
        if done {
            return out;
        }
    }
}

impl LieAlgebra {
    /// `D^0 = g`, `D^{i+1} = [D^i, D^i]`.
    pub fn derived_series(&self) -> Vec<Subspace> {
        series(Subspace::full(self.dim()), |d| {
            self.bracket_subspaces(d, d).expect("same ambient")
        })
    }

    /// `C^1 = g`, `C^{i+1} = [g, C^i]`.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        series(full.clone(), |c| {
            self.bracket_subspaces(&full, c).expect("same ambient")
        })
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_subspaces(&full, &full).expect("same ambient")
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff sum_i x_i c[i][j][k] = 0 for all j, k.
        let m = Matrix::from_fn(n * n, n, |row, i| {
            self.brackets().get(i, row / n, row % n).clone()
        });
        Subspace::from_matrix(&Matrix::from_rows(n, m.nullspace()))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().is_full()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Length `c` of the lower central series with `C^{c+1} = 0`.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let lcs = self.lower_central_series();
        if lcs.last().is_some_and(Subspace::is_zero) {
            Ok(lcs.len() - 1)
        } else {
            Err(Error::NotNilpotent)
        }
    }

    /// `kappa(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = ads[i].mul(&ads[j]).trace();
                k[(j, i)] = v.clone();
                k[(i, j)] = v;
            }
        }
        k
    }

    pub fn killing_rank(&self) -> usize {
        self.killing_form().rank()
    }

    /// Cartan's criterion in characteristic zero.
    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().determinant().is_zero()
    }

    /// Killing-orthogonal complement of `[g, g]`.
    pub fn solvable_radical(&self) -> Subspace {
        let k = self.killing_form();
        let d = self.derived_algebra();
        if d.is_zero() {
            return Subspace::full(self.dim());
        }
        // rows: kappa(b, .) for b in a basis of [g, g]
        let constraints = d.basis().mul(&k);
        Subspace::from_matrix(&Matrix::from_rows(self.dim(), constraints.nullspace()))
    }

    /// Basis of `Der(g)`; a derivation `D` acts by `D e_j = sum_m D[m][j] e_m`.
    pub fn derivations(&self) -> Vec<Matrix> {
        let n = self.dim();
        let c = self.brackets();
        let var = |row: usize, col: usize| row * n + col;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut eq = vec![Scalar::zero(); n * n];
                    // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], component k
                    for m in 0..n {
                        let cij = c.get(i, j, m);
                        if !cij.is_zero() {
                            eq[var(k, m)] += cij;
                        }
                        let cmj = c.get(m, j, k);
                        if !cmj.is_zero() {
                            eq[var(m, i)] -= cmj;
                        }
                        let cim = c.get(i, m, k);
                        if !cim.is_zero() {
                            eq[var(m, j)] -= cim;
                        }
                    }
                    if eq.iter().any(|v| !v.is_zero()) {
                        rows.push(eq);
                    }
                }
            }
        }
        let system = Matrix::from_rows(n * n, rows);
        system
            .nullspace()
            .into_iter()
            .map(|v| Matrix::from_rows(n, v.chunks(n).map(<[Scalar]>::to_vec).collect()))
            .collect()
    }

    /// Whether `d` is a derivation of this algebra.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| d.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.bracket_basis(i, j));
                let a = self
                    .bracket(&cols[i], &crate::linalg::unit_vector(n, j))
                    .expect("dim");
                let b = self
                    .bracket(&crate::linalg::unit_vector(n, i), &cols[j])
                    .expect("dim");
                if lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .any(|(l, (x, y))| *l != x + y)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Trivial center and every derivation inner.
    pub fn is_complete(&self) -> bool {
        self.center().is_zero() && self.derivations().len() == self.dim()
    }

    /// `g = Z(g) + [g, g]` as a direct sum with `[g, g]` semisimple.
    pub fn is_reductive(&self) -> bool {
        let z = self.center();
        let d = self.derived_algebra();
        if !z.intersection(&d).expect("same ambient").is_zero() || z.dim() + d.dim() != self.dim() {
            return false;
        }
        self.restrict(&d).is_ok_and(|s| s.is_semisimple())
    }

    /// Simple over the algebraic closure: semisimple with absolutely
    /// irreducible adjoint representation.
    pub fn is_simple(&self) -> bool {
        if self.dim() == 0 || self.is_abelian() || !self.is_semisimple() {
            return false;
        }
        let ads: Vec<Matrix> = (0..self.dim()).map(|i| self.ad(i)).collect();
        representation::is_absolutely_irreducible(&ads, self.dim())
    }

    /// Dimension of the centroid `{T : T ad(x) = ad(x) T for all x}`. For a
    /// semisimple algebra this is the number of simple ideals over the
    /// algebraic closure.
    pub fn centroid_dim(&self) -> usize {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(i)).collect();
        commutant_dim(&ads, n)
    }

    /// Nilpotent, with `[g, [g, g]] = 0`.
    pub fn is_two_step_nilpotent(&self) -> bool {
        self.nilpotency_class().is_ok_and(|c| c <= 2)
    }
}

/// Dimension of the space of matrices commuting with all of `mats`.
pub(crate) fn commutant_dim(mats: &[Matrix], n: usize) -> usize {
    let mut rows = Vec::new();
    for a in mats {
        // (T A - A T)[r][c] = sum_m T[r][m] A[m][c] - A[r][m] T[m][c]
        for r in 0..n {
            for c in 0..n {
                let mut eq = vec![Scalar::zero(); n * n];
                for m in 0..n {
                    if !a[(m, c)].is_zero() {
                        eq[r * n + m] += &a[(m, c)];
                    }
                    if !a[(r, m)].is_zero() {
                        eq[m * n + c] -= &a[(r, m)];
                    }
                }
                if eq.iter().any(|v| !v.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    n * n - Matrix::from_rows(n * n, rows).rank()
}
