//! Error type shared by the whole crate.
//!
//! Two failure families matter to callers:
//!
//! * **Input errors** — malformed documents, unknown catalog names, parameters
//!   outside a family's domain, mixed exact/float scalars at a construction
//!   boundary.  The CLI maps these to exit code 2.
//! * **Verification failures** — a structure that parses fine but fails the
//!   axioms it claims.  Most operations report these through structured
//!   reports rather than `Err`; the CLI maps a failed report to exit code 1.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Error)]
pub enum Error {
    /// Exact and float scalars were mixed in one value.
    #[error("scalar mode mismatch: {0}")]
    ModeMismatch(String),

    /// Vector/matrix shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A precondition on the input data failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A structural validation failed (named condition + witness).
    #[error("validation failed: {0}")]
    ValidationFailed(String),

    /// The Jacobi identity fails; indices are 1-based basis positions.
    #[error("Jacobi identity fails on triple (e{i}, e{j}, e{k}); defect {defect}")]
    JacobiFailure {
        i: usize,
        j: usize,
        k: usize,
        defect: String,
    },

    /// The requested quantity is irrational (or otherwise not representable
    /// exactly); rerun the computation in float mode.
    #[error("not representable in exact arithmetic: {0}; rerun in float mode")]
    NeedsFloat(String),

    /// Automatic enumeration would require solving a nonlinear system;
    /// the caller must supply a candidate by hand and validate it.
    #[error("manual seed required: {0}")]
    ManualSeedRequired(String),

    /// Structure-equation text rejected by the grammar.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// `catalog` was asked for a name it does not know.
    #[error("unknown catalog name: {0}")]
    UnknownCatalog(String),

    /// A catalog/CLI parameter is missing or outside the family's domain.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Bundle (de)serialization failure.
    #[error("bundle error: {0}")]
    Bundle(String),

    /// Filesystem trouble (CLI only).
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
