use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("operator does not preserve the subspace: {0}")]
    NotPreserved(String),
    #[error("operator is not well defined on the quotient: {0}")]
    NotWellDefined(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("not a modular pair: {0}")]
    NotModularPair(String),
    #[error("modular pair is not in involution")]
    NotInInvolution,
    #[error("module is not a stable anti-Yetter-Drinfeld module; failed: {}", .0.join(", "))]
    SaydViolation(Vec<String>),
    #[error("printed operator disagrees with the dual of the cocyclic module: {0}")]
    MismatchWithHatDual(String),
    #[error("identification maps are not mutually inverse: {0}")]
    IdentificationFailure(String),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("differential does not square to zero: {0}")]
    NotAComplex(String),
    #[error("module is only paracyclic: {0}")]
    NotCyclic(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
