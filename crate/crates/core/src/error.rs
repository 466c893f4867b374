//! Crate-wide error type for fallible operations.
//!
//! Arithmetic on mismatched dimensions is a programming error and panics
//! (see the `poly` module docs); the variants here cover input validation,
//! parsing, and capability limits.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("components have mismatched dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows} rows but row {row} has {cols} entries")]
    NonSquareMatrix { rows: usize, row: usize, cols: usize },

    #[error("dimension {dimension} above determinant bound {bound}")]
    DeterminantBound { dimension: usize, bound: usize },

    #[error("map is not of the required form: {0}")]
    BadMapForm(String),

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("generation failed: {0}")]
    GenerationFailure(String),

    #[error("parse error at line {line}{}: {message}", field_suffix(*.field))]
    Parse {
        line: usize,
        field: Option<usize>,
        message: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn field_suffix(field: Option<usize>) -> String {
    match field {
        Some(f) => format!(", field {f}"),
        None => String::new(),
    }
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
