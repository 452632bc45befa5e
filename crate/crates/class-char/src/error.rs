use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassError {
    #[error(transparent)]
    Perm(#[from] perm_core::PermError),
    #[error("group of order {0} exceeds the class-enumeration bound {1}")]
    GroupTooLarge(u64, u64),
    #[error("conjugacy class exceeds the bound of {0} elements")]
    ClassTooLarge(usize),
    #[error("discovery budget exhausted; possible fingerprint collision")]
    Budget,
    #[error("character table failure: {0}")]
    Character(String),
}
