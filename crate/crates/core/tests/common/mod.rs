//! Test oracles written independently of the library's solvers.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use postlie::{LieAlgebra, Scalar};

/// Center dimensions of the buildable perfect rows, as tabulated.
pub const TABLE_CENTERS: [(&str, usize); 20] = [
    ("L5_1", 0),
    ("L6_4", 0),
    ("L6_2", 1),
    ("L7_6", 0),
    ("L7_7", 0),
    ("sl2_L5_1", 0),
    ("L8_21", 0),
    ("L8_22", 0),
    ("L8_13_0", 1),
    ("L8_15", 0),
    ("sl2_L6_1", 0),
    ("sl2_L6_2", 1),
    ("L9_59", 0),
    ("L9_60", 0),
    ("L9_61", 0),
    ("L9_63", 0),
    ("L9_58", 1),
    ("L9_37", 2),
    ("L9_62", 0),
    ("L9_41", 2),
];

/// Rank by plain Gaussian elimination on a copy of the rows.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for k in c..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rows `[A | b]` of the two linear post-Lie axioms on the `n^3` unknowns
/// `a[i][j][k]` at position `(i*n + j)*n + k`.
pub fn linear_system(g: &LieAlgebra, n: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let d = g.dim();
    let u = d * d * d;
    let var = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
    let gb = |i, j, k| g.brackets().get(i, j, k).clone();
    let nb = |i, j, k| n.brackets().get(i, j, k).clone();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                let mut row = vec![Scalar::zero(); u + 1];
                row[var(i, j, k)] += Scalar::from_integer(1.into());
                row[var(j, i, k)] -= Scalar::from_integer(1.into());
                row[u] = gb(i, j, k) - nb(i, j, k);
                rows.push(row);
            }
        }
    }
    // x.{y,z} - {x.y,z} - {y,x.z} = 0 at x=e_i, y=e_j, z=e_l, component m.
    for i in 0..d {
        for j in 0..d {
            for l in j + 1..d {
                for m in 0..d {
                    let mut row = vec![Scalar::zero(); u + 1];
                    for k in 0..d {
                        row[var(i, k, m)] += nb(j, l, k);
                        row[var(i, j, k)] -= nb(k, l, m);
                        row[var(i, l, k)] -= nb(j, k, m);
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows
}

/// `Some(dimension)` of the solution space, or `None` when inconsistent.
pub fn solution_dimension(g: &LieAlgebra, n: &LieAlgebra) -> Option<usize> {
    let aug = linear_system(g, n);
    let u = g.dim().pow(3);
    let coeffs: Vec<Vec<Scalar>> = aug.iter().map(|r| r[..u].to_vec()).collect();
    let ra = rank(&coeffs);
    (rank(&aug) == ra).then_some(u - ra)
}
