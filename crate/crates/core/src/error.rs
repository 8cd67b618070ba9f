use thiserror::Error;

use crate::meyer::SympMatrix;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-integral invariant: {0}")]
    NonIntegralInvariant(String),

    #[error("fiber-sum genus must be at least 1, got {0}")]
    GenusOutOfRange(i64),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// Knot surgery on E(1) does not guarantee irreducible singular fibers.
    #[error("E(n)_K needs n >= 2 for nonseparating singular fibers, got n = {0}")]
    NOrderTooSmall(i64),

    #[error("fibrations are not equivalent: {0}")]
    NotEquivalent(String),

    #[error("twist vector {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),

    #[error("twist vector is zero")]
    ZeroVector,

    #[error("expected a vector or matrix of dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),

    #[error("twist word is empty")]
    EmptyWord,

    #[error("monodromy is not the identity; total product:\n{0}")]
    NonTrivialMonodromy(SympMatrix),

    #[error("integer overflow in matrix arithmetic")]
    Overflow,

    #[error("line {line}: {message}")]
    WordParse { line: usize, message: String },

    #[error("search range too small: h_max = {h_max}, k_max = {k_max} (both must be >= 2)")]
    RangeTooSmall { h_max: i64, k_max: i64 },

    #[error("consistency violation in {quantity}: closed form {closed_form}, construction {constructed}")]
    ConsistencyViolation {
        quantity: &'static str,
        closed_form: i64,
        constructed: i64,
    },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("unknown corollary {0:?} (expected 4.2 or 4.3)")]
    UnknownCorollary(String),
}
