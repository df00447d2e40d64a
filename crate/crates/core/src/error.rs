use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlmovError {
    #[error("divisor does not divide the numerator exactly")]
    NotDivisible,
    #[error("denominator does not divide the numerator: {0}")]
    NotPolynomial(String),
    #[error("not expressible in z = q - q^-1; residual {residual}")]
    NotZRepresentable { residual: String },
    #[error("valuation of zero")]
    ZeroInput,
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("expected {expected} color components, got {got}")]
    ComponentCountMismatch { expected: usize, got: usize },
    #[error("non-integer exponent {exponent} on a nonzero term ({context})")]
    NonIntegerExponent { exponent: String, context: String },
    #[error("non-integer coefficient {coeff} at z^{zpow} t^{tpow}")]
    NonIntegerCoefficient { zpow: u32, tpow: i64, coeff: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, KlmovError>;
