use thiserror::Error;

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("group `{0}` is outside the supported parameter range")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] finite_field::FieldError),
    #[error(transparent)]
    Perm(#[from] perm_core::PermError),
    #[error("no element of order {0} found within the sampling budget")]
    NoElementOfOrder(u64),
}
