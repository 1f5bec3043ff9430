//! Outcomes of existence searches and non-existence rules.

use crate::algebra::LieAlgebra;
use crate::error::Result;
use crate::postlie::product::{verify_pa, PAProduct};
use crate::postlie::rota_baxter::RBOperator;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Coordinate decompositions `n = n1 + n2` into subalgebras.
    Decomposition,
    /// Bounded integer search on the quadratic axiom.
    Grid,
    /// A registered example.
    Registered,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Decomposition => "decomposition",
            Strategy::Grid => "grid",
            Strategy::Registered => "registered",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMatch {
    /// The product is a post-Lie structure on exactly the requested pair.
    Exact,
    /// The product is a post-Lie structure on `(g', n)` where `g'` has the
    /// fingerprint of the requested `g`; isomorphism is not certified.
    Fingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub product: PAProduct,
    /// The algebra the product is verified against.
    pub g: LieAlgebra,
    pub n: LieAlgebra,
    pub strategy: Strategy,
    pub matching: WitnessMatch,
    pub operator: Option<RBOperator>,
    pub decomposition: Option<(Subspace, Subspace)>,
}

impl Witness {
    pub fn reverify(&self) -> Result<bool> {
        Ok(verify_pa(&self.product, &self.g, &self.n)?.holds())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ExistsWitness(Box<Witness>),
    NotExists { rule: String, citation: String },
    Unknown { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::ExistsWitness(_) => "exists",
            Verdict::NotExists { .. } => "not-exists",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

impl Certificate {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::ExistsWitness(w) => Some(w),
            _ => None,
        }
    }

    pub fn rule(&self) -> Option<&str> {
        match &self.verdict {
            Verdict::NotExists { rule, .. } => Some(rule),
            _ => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.verdict, Verdict::Unknown { .. })
    }
}
