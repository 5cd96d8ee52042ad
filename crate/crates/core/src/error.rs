use thiserror::Error;

/// Errors surfaced by the exact-arithmetic pipeline.
///
/// `IdentityViolation` and `FixtureMismatch` are fatal in the CLI (exit
/// code 1): they mean a symbolic identity or a golden value failed to
/// reproduce. Everything else is a caller error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("identity violation in `{name}`: residue {residue}")]
    IdentityViolation { name: String, residue: String },

    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),

    #[error("singular specialization at S0 = {0}")]
    SingularSpecialization(i64),

    #[error("degenerate slice h = 0: {0}")]
    DegenerateSlice(String),

    #[error("p = {0} is not an odd prime of good reduction for this curve")]
    BadReduction(u64),

    #[error("insufficient evidence: {0}")]
    InsufficientEvidence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
