//! Post-Lie structures on pairs `(g, n)` of Lie algebras on one space.

pub mod certificate;
pub mod embedding;
pub mod fixtures;
pub mod linear_space;
pub mod product;
pub mod rota_baxter;
pub mod rules;
pub mod search;
pub mod table;

pub use certificate::{Certificate, Strategy, Verdict, Witness, WitnessMatch};
pub use embedding::{embedding_report, verify_double_embedding, DoubleEmbedding, EmbeddingReport};
pub use linear_space::{pa_linear_space, AffineProductSpace, PALinearSpace};
pub use product::{
    induced_bracket, verify_pa, Axiom, AxiomFailure, InducedBracket, PAProduct, PAReport,
};
pub use rota_baxter::{pa_from_rb, rb_from_decomposition, rb_kernels, verify_rb, RBOperator};
pub use rules::{nonexistence_certificate, Profile, Rule, RULES};
pub use search::{pa_search, SearchOptions};
pub use table::{
    existence_table, AlgebraClass, Cell, CellStatus, ExistenceTable, ExpectedMark, RuleScope,
};
