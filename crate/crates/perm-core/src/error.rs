use thiserror::Error;

#[derive(Debug, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a bijection (point {0} repeated or out of range)")]
    NotBijective(u32),
    #[error("degree {0} exceeds the supported maximum {1}")]
    DegreeTooLarge(usize, usize),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("{0} is not a subgroup element: generator fails membership")]
    NotSubgroup(String),
    #[error("coset index {0} exceeds the bound {1}")]
    IndexTooLarge(u64, u64),
    #[error("subgroup order does not divide group order")]
    BadIndex,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("group order mismatch: {0}")]
    OrderMismatch(String),
}
