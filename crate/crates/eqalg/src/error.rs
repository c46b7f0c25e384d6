use thiserror::Error;

/// Errors surfaced by the workbench.
///
/// Structural problems (bad table shapes, out-of-range entries) are kept
/// distinct from axiom failures: a structurally broken table cannot even be
/// scanned, while an axiom failure is an ordinary negative result carried in
/// an [`crate::report::AxiomReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural input error: {0}")]
    Structure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("congruence failure: {0}")]
    CongruenceFailure(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
