//! Direct sums and semidirect products.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::representation::Representation;
use crate::tensor::Tensor3;

/// `g1 + g2` with the basis of `g1` first.
pub fn direct_sum(g1: &LieAlgebra, g2: &LieAlgebra) -> LieAlgebra {
    let (a, b) = (g1.dim(), g2.dim());
    let mut t = Tensor3::zeros(a + b);
    for (i, j, k, v) in g1.brackets().nonzero_entries() {
        t.set(i, j, k, v.clone());
    }
    for (i, j, k, v) in g2.brackets().nonzero_entries() {
        t.set(a + i, a + j, a + k, v.clone());
    }
    LieAlgebra::new(t).expect("direct sum of Lie algebras is a Lie algebra")
}

/// `s x| r` for an action `rho` of `s` on `r` by derivations. The basis of
/// `s` comes first, then the basis of `r`; `[x, v] = rho(x) v` for `x` in
/// `s` and `v` in `r`.
pub fn semidirect_product(
    s: &LieAlgebra,
    rho: &Representation,
    r: &LieAlgebra,
) -> Result<LieAlgebra> {
    if !rho.source().same_brackets(s) {
        return Err(Error::Format(
            "representation is not defined on the acting algebra".into(),
        ));
    }
    if rho.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: rho.dim(),
        });
    }
    for (idx, m) in rho.matrices().iter().enumerate() {
        if !r.is_derivation(m) {
            return Err(Error::NotDerivation { index: idx + 1 });
        }
    }
    let (a, b) = (s.dim(), r.dim());
    let mut t = Tensor3::zeros(a + b);
    for (i, j, k, v) in s.brackets().nonzero_entries() {
        t.set(i, j, k, v.clone());
    }
    for (i, j, k, v) in r.brackets().nonzero_entries() {
        t.set(a + i, a + j, a + k, v.clone());
    }
    for (x, m) in rho.matrices().iter().enumerate() {
        for col in 0..b {
            for row in 0..b {
                let v = &m[(row, col)];
                if !v.is_zero() {
                    t.set(x, a + col, a + row, v.clone());
                    t.set(a + col, x, a + row, -v.clone());
                }
            }
        }
    }
    LieAlgebra::new(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl2;
    use crate::representation::{sl2_module, Representation};

    #[test]
    fn zero_action_gives_direct_sum() {
        let r = LieAlgebra::from_table(3, &[(1, 2, 3, 1)]).unwrap();
        let triv = Representation::trivial(sl2(), 3);
        let sd = semidirect_product(&sl2(), &triv, &r).unwrap();
        assert!(sd.same_brackets(&direct_sum(&sl2(), &r)));
    }

    #[test]
    fn non_derivation_action_is_rejected() {
        // e3 acts on n3 as diag(2, 0, -2), which breaks [e1, e2] = e3.
        let n3 = LieAlgebra::from_table(3, &[(1, 2, 3, 1)]).unwrap();
        let v3 = sl2_module(3).unwrap();
        assert!(matches!(
            semidirect_product(&sl2(), &v3, &n3),
            Err(Error::NotDerivation { .. })
        ));
    }
}
