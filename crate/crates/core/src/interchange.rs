//! JSON interchange documents for algebras, products, operators and
//! double embeddings.
//!
//! Indices are 1-based and coefficients are rational strings (`"p"` or
//! `"p/q"`). Unknown fields are rejected.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{default_labels, LieAlgebra, Metadata};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Algebra,
    Product,
    Operator,
    Embedding,
}

impl DocumentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DocumentKind::Algebra => "algebra",
            DocumentKind::Product => "product",
            DocumentKind::Operator => "operator",
            DocumentKind::Embedding => "embedding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetadataBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modules: Option<String>,
    /// Named subspaces (`levi`, `radical`, `nilradical`) as lists of
    /// spanning vectors.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterchangeDocument {
    pub kind: DocumentKind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<MetadataBlock>,
}

const SUBSPACE_NAMES: [&str; 3] = ["levi", "nilradical", "radical"];

pub fn parse_document(text: &str) -> Result<InterchangeDocument> {
    serde_json::from_str(text).map_err(|e| {
        Error::Format(format!(
            "line {}, column {}: {}",
            e.line(),
            e.column(),
            strip_position(&e)
        ))
    })
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(p) => s[..p].to_string(),
        None => s,
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(doc: &InterchangeDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn field_err(field: String, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("{field}: {msg}"))
}

fn expect_kind(doc: &InterchangeDocument, kind: DocumentKind) -> Result<()> {
    if doc.kind != kind {
        return Err(field_err(
            "kind".into(),
            format!(
                "expected \"{}\", found \"{}\"",
                kind.as_str(),
                doc.kind.as_str()
            ),
        ));
    }
    Ok(())
}

fn index(field: String, v: usize, bound: usize) -> Result<usize> {
    if v == 0 || v > bound {
        return Err(field_err(
            field,
            format!("index {v} out of range 1..={bound}"),
        ));
    }
    Ok(v - 1)
}

fn coeff(field: String, text: &str) -> Result<Scalar> {
    scalar::parse(text).map_err(|e| field_err(field, e))
}

type Triple = (usize, usize, Option<usize>, Scalar);

/// Checks the common fields and yields 0-based `(i, j, k, c)` entries.
fn triples(doc: &InterchangeDocument, i_bound: usize, need_k: bool) -> Result<Vec<Triple>> {
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.dim {
            return Err(field_err(
                "labels".into(),
                format!("expected {} labels, found {}", doc.dim, labels.len()),
            ));
        }
    }
    let n = doc.dim;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(doc.entries.len());
    for (pos, e) in doc.entries.iter().enumerate() {
        let f = |name: &str| format!("entries[{pos}].{name}");
        let i = index(f("i"), e.i, i_bound)?;
        let j = index(f("j"), e.j, n)?;
        let k = match (e.k, need_k) {
            (Some(k), true) => Some(index(f("k"), k, n)?),
            (None, true) => return Err(field_err(f("k"), "missing")),
            (Some(_), false) => return Err(field_err(f("k"), "not allowed for this kind")),
            (None, false) => None,
        };
        if !seen.insert((i, j, k)) {
            return Err(field_err(format!("entries[{pos}]"), "duplicate entry"));
        }
        out.push((i, j, k, coeff(f("coeff"), &e.coeff)?));
    }
    Ok(out)
}

fn entry(i: usize, j: usize, k: Option<usize>, c: &Scalar) -> Entry {
    Entry {
        i: i + 1,
        j: j + 1,
        k: k.map(|k| k + 1),
        coeff: scalar::format(c),
    }
}

fn tensor_entries(t: &Tensor3, upper_only: bool) -> Vec<Entry> {
    t.nonzero_entries()
        .filter(|(i, j, _, _)| !upper_only || i < j)
        .map(|(i, j, k, c)| entry(i, j, Some(k), c))
        .collect()
}

fn matrix_entries(m: &Matrix) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.push(entry(i, j, None, &m[(i, j)]));
            }
        }
    }
    out
}

pub fn algebra_to_document(g: &LieAlgebra) -> InterchangeDocument {
    let md = g.metadata();
    let metadata = (!md.is_empty()).then(|| {
        let mut subspaces = BTreeMap::new();
        for (name, s) in [
            ("levi", &md.levi),
            ("nilradical", &md.nilradical),
            ("radical", &md.radical),
        ] {
            if let Some(s) = s {
                let rows = s
                    .basis_vectors()
                    .map(|v| v.iter().map(scalar::format).collect())
                    .collect();
                subspaces.insert(name.to_string(), rows);
            }
        }
        MetadataBlock {
            name: md.name.clone(),
            modules: md.modules.clone(),
            subspaces,
        }
    });
    InterchangeDocument {
        kind: DocumentKind::Algebra,
        dim: g.dim(),
        labels: Some(g.labels().to_vec()),
        weight: None,
        entries: tensor_entries(g.brackets(), true),
        metadata,
    }
}

/// Antisymmetric bracket tensor of an algebra document, without the Jacobi check.
pub fn document_to_brackets(doc: &InterchangeDocument) -> Result<Tensor3> {
    expect_kind(doc, DocumentKind::Algebra)?;
    if doc.weight.is_some() {
        return Err(field_err("weight".into(), "not allowed for an algebra"));
    }
    let mut upper = Vec::new();
    for (pos, (i, j, k, c)) in triples(doc, doc.dim, true)?.into_iter().enumerate() {
        if i >= j {
            return Err(field_err(
                format!("entries[{pos}]"),
                "algebra entries need i < j",
            ));
        }
        upper.push((i, j, k.expect("k checked"), c));
    }
    Tensor3::antisymmetric_from_upper(doc.dim, upper)
}

pub fn document_to_algebra(doc: &InterchangeDocument) -> Result<LieAlgebra> {
    let n = doc.dim;
    let mut g = LieAlgebra::new(document_to_brackets(doc)?)?;
    if let Some(labels) = &doc.labels {
        g = g.with_labels(labels.clone())?;
    }
    if let Some(md) = &doc.metadata {
        let mut out = Metadata {
            name: md.name.clone(),
            modules: md.modules.clone(),
            ..Metadata::default()
        };
        for (name, rows) in &md.subspaces {
            let field = format!("metadata.subspaces.{name}");
            let mut vectors = Vec::with_capacity(rows.len());
            for (r, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(field_err(
                        format!("{field}[{r}]"),
                        format!("expected {n} coordinates, found {}", row.len()),
                    ));
                }
                let v = row
                    .iter()
                    .enumerate()
                    .map(|(c, t)| coeff(format!("{field}[{r}][{c}]"), t))
                    .collect::<Result<Vec<_>>>()?;
                vectors.push(v);
            }
            let s = Subspace::span(n, vectors)?;
            match name.as_str() {
                "levi" => out.levi = Some(s),
                "radical" => out.radical = Some(s),
                "nilradical" => out.nilradical = Some(s),
                _ => {
                    return Err(field_err(
                        field,
                        format!("unknown subspace name (expected one of {SUBSPACE_NAMES:?})"),
                    ))
                }
            }
        }
        g = g.with_metadata(out);
    }
    Ok(g)
}

pub fn product_to_document(t: &Tensor3) -> InterchangeDocument {
    InterchangeDocument {
        kind: DocumentKind::Product,
        dim: t.dim(),
        labels: None,
        weight: None,
        entries: tensor_entries(t, false),
        metadata: None,
    }
}

pub fn document_to_product(doc: &InterchangeDocument) -> Result<Tensor3> {
    expect_kind(doc, DocumentKind::Product)?;
    no_extras(doc)?;
    let entries = triples(doc, doc.dim, true)?;
    Ok(Tensor3::from_entries(
        doc.dim,
        entries
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k.expect("k checked"), c)),
    ))
}

/// Operator matrix `R` with `R(e_j) = sum_i R[i][j] e_i`, and its weight.
pub fn operator_to_document(r: &Matrix, weight: Option<&Scalar>) -> InterchangeDocument {
    InterchangeDocument {
        kind: DocumentKind::Operator,
        dim: r.rows(),
        labels: None,
        weight: weight.map(scalar::format),
        entries: matrix_entries(r),
        metadata: None,
    }
}

pub fn document_to_operator(doc: &InterchangeDocument) -> Result<(Matrix, Option<Scalar>)> {
    expect_kind(doc, DocumentKind::Operator)?;
    if doc.metadata.is_some() {
        return Err(field_err("metadata".into(), "not allowed for an operator"));
    }
    let n = doc.dim;
    let mut m = Matrix::zeros(n, n);
    for (i, j, _, c) in triples(doc, n, false)? {
        m[(i, j)] = c;
    }
    let weight = doc
        .weight
        .as_deref()
        .map(|w| coeff("weight".into(), w))
        .transpose()?;
    Ok((m, weight))
}

/// Double embedding `g -> n + n` stored as the stacked `2n x n` matrix of
/// `(j1; j2)`.
pub fn embedding_to_document(j1: &Matrix, j2: &Matrix) -> InterchangeDocument {
    InterchangeDocument {
        kind: DocumentKind::Embedding,
        dim: j1.cols(),
        labels: None,
        weight: None,
        entries: matrix_entries(&j1.vstack(j2)),
        metadata: None,
    }
}

pub fn document_to_embedding(doc: &InterchangeDocument) -> Result<(Matrix, Matrix)> {
    expect_kind(doc, DocumentKind::Embedding)?;
    no_extras(doc)?;
    let n = doc.dim;
    let mut j1 = Matrix::zeros(n, n);
    let mut j2 = Matrix::zeros(n, n);
    for (i, j, _, c) in triples(doc, 2 * n, false)? {
        if i < n {
            j1[(i, j)] = c;
        } else {
            j2[(i - n, j)] = c;
        }
    }
    Ok((j1, j2))
}

fn no_extras(doc: &InterchangeDocument) -> Result<()> {
    if doc.weight.is_some() {
        return Err(field_err(
            "weight".into(),
            format!("not allowed for kind {}", doc.kind.as_str()),
        ));
    }
    if doc.metadata.is_some() {
        return Err(field_err(
            "metadata".into(),
            format!("not allowed for kind {}", doc.kind.as_str()),
        ));
    }
    Ok(())
}

pub fn algebra_to_json(g: &LieAlgebra) -> String {
    to_json(&algebra_to_document(g))
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    document_to_algebra(&parse_document(text)?)
}

/// Labels to print for a document without explicit labels.
pub fn labels_or_default(doc: &InterchangeDocument) -> Vec<String> {
    doc.labels
        .clone()
        .unwrap_or_else(|| default_labels(doc.dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl2;
    use crate::scalar::{int, ratio};

    #[test]
    fn algebra_round_trip_is_exact() {
        let g = sl2().with_name("sl2");
        let text = algebra_to_json(&g);
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(algebra_to_json(&back), text);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"kind":"algebra","dim":1,"entries":[],"extra":1}"#;
        let err = parse_document(text).unwrap_err().to_string();
        assert!(err.contains("unknown field"), "{err}");
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn field_diagnostics_name_the_entry() {
        let text = r#"{"kind":"algebra","dim":2,"entries":[{"i":1,"j":3,"k":1,"coeff":"1"}]}"#;
        let err = algebra_from_json(text).unwrap_err().to_string();
        assert!(err.contains("entries[0].j"), "{err}");
        let text = r#"{"kind":"algebra","dim":2,"entries":[{"i":1,"j":2,"k":1,"coeff":"1.5"}]}"#;
        assert!(algebra_from_json(text)
            .unwrap_err()
            .to_string()
            .contains("entries[0].coeff"));
    }

    #[test]
    fn non_lie_tables_are_rejected() {
        let text = r#"{"kind":"algebra","dim":3,"entries":[
            {"i":1,"j":2,"k":1,"coeff":"1"},{"i":1,"j":3,"k":1,"coeff":"1"},{"i":2,"j":3,"k":3,"coeff":"1"}]}"#;
        assert_eq!(
            algebra_from_json(text).unwrap_err(),
            Error::JacobiViolation { i: 1, j: 2, k: 3 }
        );
    }

    #[test]
    fn operator_round_trip() {
        let r = Matrix::diagonal(&[int(0), ratio(-1, 2), int(3)]);
        let doc = operator_to_document(&r, Some(&int(1)));
        let text = to_json(&doc);
        let (back, w) = document_to_operator(&parse_document(&text).unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(w, Some(int(1)));
    }

    #[test]
    fn embedding_round_trip() {
        let j1 = Matrix::identity(2);
        let j2 = Matrix::from_i64(&[&[0, 1], &[2, 0]]);
        let doc = embedding_to_document(&j1, &j2);
        assert_eq!(document_to_embedding(&doc).unwrap(), (j1, j2));
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let doc = product_to_document(&Tensor3::zeros(2));
        assert!(document_to_algebra(&doc)
            .unwrap_err()
            .to_string()
            .starts_with("kind"));
    }
}
