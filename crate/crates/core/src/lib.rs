//! Exact structure-constant computations for post-Lie algebra structures.
//!
//! The crate works over the rationals throughout. Lie algebras are stored as
//! antisymmetric structure-constant tensors on `K^n`; post-Lie products,
//! Rota-Baxter operators and double embeddings are stored as coefficient
//! tensors and matrices on the same space, and every predicate is decided by
//! exact linear algebra.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod data;
pub mod error;
pub mod interchange;
pub mod invariants;
pub mod linalg;
pub mod postlie;
pub mod representation;
pub mod scalar;
pub mod subspace;
pub mod tensor;

pub use algebra::{LieAlgebra, Metadata};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use representation::Representation;
pub use scalar::Scalar;
pub use subspace::Subspace;
pub use tensor::Tensor3;
