use thiserror::Error;

/// Errors raised by the algebra, catalog and post-Lie layers.
///
/// Basis indices in messages are 1-based, matching `e1, ..., en`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bracket is not antisymmetric at [e{i}, e{j}] (component e{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for (e{i}, e{j}, e{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("action is not a Lie homomorphism on the pair (e{i}, e{j})")]
    NotHomomorphism { i: usize, j: usize },
    #[error("action of e{index} is not a derivation of the target algebra")]
    NotDerivation { index: usize },
    #[error("module dimension must be at least 1, got {0}")]
    InvalidModuleDimension(usize),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
    #[error("catalog entry `{0}` needs structure constants from an external classification file")]
    ExternalConstantsRequired(String),
    #[error("catalog entry `{id}` does not match its recorded invariants: {detail}")]
    CatalogMismatch { id: String, detail: String },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("operator does not satisfy the Rota-Baxter identity of the requested weight")]
    UnverifiedOperator,
    #[error("weight must be 1 for this construction, got {0}")]
    WeightNotOne(String),
    #[error("criterion requires a semisimple target algebra")]
    NotSemisimple,
    #[error("generator action does not match preset: {0}")]
    PresetMismatch(String),
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
