//! Dense three-index coefficient tensors `c[i][j][k]`.
//!
//! A tensor encodes a bilinear product on an `n`-dimensional space by
//! `e_i * e_j = sum_k c[i][j][k] e_k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
    antisymmetric: bool,
}

impl PartialEq for Tensor3 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data
    }
}

impl Eq for Tensor3 {}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Scalar::zero(); n * n * n],
            antisymmetric: false,
        }
    }

    /// Tensor with the given 0-based entries; later entries overwrite earlier.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Self {
        let mut t = Self::zeros(n);
        for (i, j, k, v) in entries {
            t.set(i, j, k, v);
        }
        t
    }

    /// Builds an antisymmetric tensor from entries for `i < j`; the `(j, i)`
    /// entries are filled in by negation. Entries with `i == j` must be zero.
    pub fn antisymmetric_from_upper(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut t = Self::zeros(n);
        for (i, j, k, v) in entries {
            if i.max(j).max(k) >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j).max(k) + 1,
                });
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    });
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -v) };
            t.set(a, b, k, v.clone());
            t.set(b, a, k, -v);
        }
        t.antisymmetric = true;
        Ok(t)
    }

    /// Marks the tensor antisymmetric after checking it.
    pub fn into_antisymmetric(mut self) -> Result<Self> {
        self.check_antisymmetric()?;
        self.antisymmetric = true;
        Ok(self)
    }

    pub fn check_antisymmetric(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let ok = if i == j {
                        self.get(i, i, k).is_zero()
                    } else {
                        *self.get(i, j, k) == -self.get(j, i, k).clone()
                    };
                    if !ok {
                        return Err(Error::NotAntisymmetric {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetric
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.n + j) * self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j) + k;
        self.data[o] = v;
        self.antisymmetric = false;
    }

    /// Coefficient vector of `e_i * e_j`.
    pub fn slot(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.n]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    /// Evaluates the bilinear product on coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        linalg::check_len(x, self.n)?;
        linalg::check_len(y, self.n)?;
        let mut out = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.slot(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn map_entries(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(&mut f).collect(),
            antisymmetric: false,
        }
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.n, other.n);
        Tensor3 {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            antisymmetric: false,
        }
    }
}
