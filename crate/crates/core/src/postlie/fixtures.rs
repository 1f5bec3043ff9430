//! Known post-Lie structures with `n` or `g` equal to `sl2 x| V(2)`.
//!
//! `sl2 x| V(2)` has `[e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2, [e1,e5]=e4,
//! [e2,e4]=e5, [e3,e4]=e4, [e3,e5]=-e5` (catalog id `L5_1`).

use crate::algebra::LieAlgebra;
use crate::catalog;
use crate::linalg::Matrix;
use crate::postlie::product::PAProduct;
use crate::postlie::rota_baxter::RBOperator;
use crate::scalar::int;

/// A pair `(g, n)` with a product claimed to be post-Lie.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub g: LieAlgebra,
    pub n: LieAlgebra,
    pub product: PAProduct,
    pub operator: Option<RBOperator>,
}

fn build(id: &str) -> LieAlgebra {
    catalog::build(id).expect("catalog entry")
}

/// `g = sl2 x| V(2)` on `n = sl2 + C^2`.
pub fn perfect_on_reductive() -> Fixture {
    Fixture {
        id: "perfect-on-reductive",
        description: "g = sl2 x| V(2), n = sl2 + C^2",
        g: build("L5_1"),
        n: build("sl2_c2"),
        product: PAProduct::from_table(
            5,
            &[(1, 5, 4, 1), (2, 4, 5, 1), (3, 4, 4, 1), (3, 5, 5, -1)],
        )
        .expect("table"),
        operator: None,
    }
}

/// Brackets `[e1,e5]=e4, [e2,e3]=-2e2`, isomorphic to `n3 + r2`.
pub fn split_solvable() -> LieAlgebra {
    LieAlgebra::from_table(5, &[(1, 5, 4, 1), (2, 3, 2, -2)]).expect("Lie")
}

/// `g = n3 + r2` (in the basis of [`split_solvable`]) on `n = sl2 x| V(2)`.
pub fn solvable_on_perfect() -> Fixture {
    Fixture {
        id: "solvable-on-perfect",
        description: "g = n3 + r2, n = sl2 x| V(2)",
        g: split_solvable(),
        n: build("L5_1"),
        product: PAProduct::from_table(
            5,
            &[
                (2, 1, 3, 1),
                (3, 1, 1, -2),
                (3, 4, 4, -1),
                (2, 3, 2, -2),
                (3, 2, 2, 2),
                (3, 5, 5, 1),
                (2, 4, 5, -1),
            ],
        )
        .expect("table"),
        operator: Some(RBOperator::weight_one(Matrix::diagonal(&[
            int(0),
            int(-1),
            int(-1),
            int(0),
            int(0),
        ]))),
    }
}

/// `g = sl2 + C^2` on `n = sl2 x| V(2)`.
pub fn reductive_on_perfect() -> Fixture {
    Fixture {
        id: "reductive-on-perfect",
        description: "g = sl2 + C^2, n = sl2 x| V(2)",
        g: build("sl2_c2"),
        n: build("L5_1"),
        product: PAProduct::from_table(
            5,
            &[(4, 2, 5, 1), (5, 1, 4, 1), (4, 3, 4, 1), (5, 3, 5, -1)],
        )
        .expect("table"),
        operator: Some(RBOperator::weight_one(Matrix::diagonal(&[
            int(0),
            int(0),
            int(0),
            int(-1),
            int(-1),
        ]))),
    }
}

/// `g = sl2 + r2` with `[e4,e5]=e4` on `n = sl2 x| V(2)`.
pub fn complete_on_perfect() -> Fixture {
    Fixture {
        id: "complete-on-perfect",
        description: "g = sl2 + r2, n = sl2 x| V(2)",
        g: build("sl2_r2"),
        n: build("L5_1"),
        product: PAProduct::from_table(
            5,
            &[
                (4, 2, 5, 1),
                (5, 1, 4, 1),
                (5, 4, 4, -1),
                (4, 3, 4, 1),
                (5, 3, 5, -1),
                (5, 5, 5, -1),
            ],
        )
        .expect("table"),
        operator: None,
    }
}

pub fn all() -> Vec<Fixture> {
    vec![
        perfect_on_reductive(),
        solvable_on_perfect(),
        reductive_on_perfect(),
        complete_on_perfect(),
    ]
}
