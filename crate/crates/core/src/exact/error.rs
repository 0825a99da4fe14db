use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    /// The representative shares a factor with the modulus, so the residue
    /// class is a zero divisor.
    #[error("element is not invertible modulo {modulus}")]
    NotInvertible { modulus: String },
    #[error("elements belong to different number fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("leading coefficient vanishes")]
    LeadingCoefficientZero,
    #[error("variable {0:?} does not occur in the input")]
    VariableAbsent(String),
    #[error("coefficients already lie in a proper extension; nested extensions are unsupported")]
    NestedExtension,
    #[error("parse error: {0}")]
    Parse(String),
}
