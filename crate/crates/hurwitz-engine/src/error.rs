use class_char::ClassError;
use group_atlas::AtlasError;
use perm_core::PermError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Atlas(#[from] AtlasError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("invalid datum: {0}")]
    Datum(String),
    #[error("invalid tuple: {0}")]
    Tuple(String),
    #[error("tuple file: {0}")]
    TupleFile(String),
    #[error("search: {0}")]
    Search(String),
    #[error("fixity: {0}")]
    Fixity(String),
}
