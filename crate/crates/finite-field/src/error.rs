use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u16),
    #[error("GF({0}^{1}) exceeds the supported size")]
    FieldTooLarge(u16, u32),
    #[error("no reduction polynomial on file for GF({0}^{1})")]
    NoPolynomial(u16, u32),
    #[error("reduction polynomial for GF({0}^{1}) is not primitive")]
    NotPrimitive(u16, u32),
    #[error("matrix is singular")]
    Singular,
    #[error("group construction failed: {0}")]
    Group(String),
}
