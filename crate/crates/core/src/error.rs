use thiserror::Error;

/// Errors raised by the algebra kernels and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable declaration: {0}")]
    InvalidVariables(String),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("linear form is zero")]
    ZeroLinearForm,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("non-homogeneous input: {0}")]
    NonHomogeneousInput(String),

    #[error("quotient is not Artinian: no pure power of `{0}` in the initial ideal")]
    NotArtinian(String),

    #[error("quotient is the zero algebra")]
    ZeroAlgebra,

    #[error("algebra is not Gorenstein (socle dimension {0})")]
    NotGorenstein(usize),

    #[error("Hilbert series is not symmetric")]
    NonSymmetricHilbert,

    #[error("denominator divisible by modulus {0}")]
    DenominatorDivisibleByP(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("hypothesis fails at k = {k}: {reason}")]
    HypothesisFails { k: usize, reason: String },

    #[error("unknown gallery entry `{0}`")]
    UnknownGalleryName(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
