//! Dense exact matrices and Gaussian elimination over the rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form, leading coefficients 1, zero rows dropped.
    /// Returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            if !inv.is_one() {
                for j in c..cols {
                    let v = &self[(r, j)] * &inv;
                    self[(r, j)] = v;
                }
            }
            let pivot_row: Vec<Scalar> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let v = &self[(i, c + off)] - &f * pv;
                        self[(i, c + off)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`. Each basis vector has a 1 in
    /// exactly one free column and 0 in the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(&r, &pivots)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                let f = &m[(i, c)] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `Ax = b`. Returns `None` when inconsistent.
    pub fn solve_affine(&self, b: &[Scalar]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows);
        let cols = self.cols;
        let aug = Matrix::from_fn(self.rows, cols + 1, |i, j| {
            if j < cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&cols) {
            return None;
        }
        let mut particular = vec![Scalar::zero(); cols];
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r[(row, cols)].clone();
        }
        let coeffs = Matrix::from_fn(r.rows, cols, |i, j| r[(i, j)].clone());
        let homogeneous = nullspace_from_rref(&coeffs, &pivots);
        Some(AffineSolution {
            particular,
            homogeneous,
        })
    }
}

/// Solution set `particular + span(homogeneous)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub homogeneous: Vec<Vec<Scalar>>,
}

fn nullspace_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let cols = r.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Checks a vector length against an expected dimension.
pub fn check_len(v: &[Scalar], n: usize) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        })
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(
            r,
            Matrix::from_rows(
                3,
                vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(1)]]
            )
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn determinant_and_inverse_agree() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv[(0, 0)], ratio(11, 18));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn affine_solve_detects_inconsistency() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(m.solve_affine(&[int(1), int(3)]).is_none());
        let sol = m.solve_affine(&[int(1), int(2)]).unwrap();
        assert_eq!(sol.particular, vec![int(1), int(0)]);
        assert_eq!(sol.homogeneous, vec![vec![int(-1), int(1)]]);
    }
}
