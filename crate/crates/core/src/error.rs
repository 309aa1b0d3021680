use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid symplectic form: {0}")]
    InvalidForm(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("the zero polynomial has no squarefree part")]
    ZeroPolynomial,
    #[error("marked vector must be nonzero")]
    ZeroVector,
    #[error("parameter is nonzero ({0}); split it off first")]
    NonzeroParameter(String),
    #[error("parameter is zero; nothing to split")]
    ZeroParameter,
    #[error("matrix is not in the symplectic algebra of the form")]
    NotInAlgebra,
    #[error("matrix is not in the stabilizer of the marked vector")]
    NotInStabilizer,
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
