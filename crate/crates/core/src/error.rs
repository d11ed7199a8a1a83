use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The CLI maps [`Error::InternalInconsistency`] to exit code 2 and everything
/// else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid signature literal `{literal}`: {reason}")]
    InvalidSignature { literal: String, reason: String },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("kneser obstruction: relation `{relation}` violated ({detail})")]
    KneserObstruction { relation: &'static str, detail: String },

    #[error("unsupported covering degree {0}: only double covers are enumerated")]
    UnsupportedDegree(u32),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
