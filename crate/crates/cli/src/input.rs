//! Loading algebras and documents from files or catalog ids.

use std::fmt;
use std::fs;
use std::path::Path;

use postlie::interchange::{self, InterchangeDocument};
use postlie::{catalog, Error, LieAlgebra};

/// A failure that ends the process with a sysexits-style code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Format(String),
    NoInput(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Format(_) => 65,
            Failure::NoInput(_) => 66,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Format(m) | Failure::NoInput(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCatalogId(_) | Error::ExternalConstantsRequired(_) => {
                Failure::NoInput(e.to_string())
            }
            other => Failure::Format(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

fn with_source(src: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match Failure::from(e) {
        Failure::Format(m) => Failure::Format(format!("{src}: {m}")),
        other => other,
    }
}

pub fn read_document(path: &str) -> CliResult<InterchangeDocument> {
    let text = fs::read_to_string(path).map_err(|e| Failure::NoInput(format!("{path}: {e}")))?;
    interchange::parse_document(&text).map_err(with_source(path))
}

fn looks_like_path(src: &str) -> bool {
    src.contains('/') || src.contains('\\') || src.ends_with(".json")
}

/// An algebra from a JSON file, or a catalog id when no such file exists.
pub fn load_algebra(src: &str) -> CliResult<LieAlgebra> {
    if Path::new(src).is_file() {
        let doc = read_document(src)?;
        return interchange::document_to_algebra(&doc).map_err(with_source(src));
    }
    if looks_like_path(src) {
        return Err(Failure::NoInput(format!("{src}: no such file")));
    }
    Ok(catalog::build(src)?)
}

/// Bracket tensor without the Jacobi check, from a file or catalog id.
pub fn load_brackets(src: &str) -> CliResult<postlie::Tensor3> {
    if Path::new(src).is_file() {
        let doc = read_document(src)?;
        return interchange::document_to_brackets(&doc).map_err(with_source(src));
    }
    load_algebra(src).map(|g| g.brackets().clone())
}

pub fn load_product(path: &str) -> CliResult<postlie::postlie::PAProduct> {
    let doc = read_document(path)?;
    let t = interchange::document_to_product(&doc).map_err(with_source(path))?;
    Ok(postlie::postlie::PAProduct::new(t))
}

pub fn load_operator(path: &str) -> CliResult<(postlie::Matrix, Option<postlie::Scalar>)> {
    let doc = read_document(path)?;
    interchange::document_to_operator(&doc).map_err(with_source(path))
}

pub fn load_embedding(path: &str) -> CliResult<(postlie::Matrix, postlie::Matrix)> {
    let doc = read_document(path)?;
    interchange::document_to_embedding(&doc).map_err(with_source(path))
}

pub fn write_or_print(out: Option<&str>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::NoInput(format!("{path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `1,4,5` into 0-based indices below `n`.
pub fn parse_indices(text: &str, n: usize) -> CliResult<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad basis index `{t}`")))?;
            if i == 0 || i > n {
                return Err(Failure::Usage(format!(
                    "basis index {i} out of range 1..={n}"
                )));
            }
            Ok(i - 1)
        })
        .collect()
}
