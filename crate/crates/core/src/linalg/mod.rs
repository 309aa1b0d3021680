//! Exact dense linear algebra over the rationals.

pub mod jordan;
pub mod matrix;
pub mod poly;
pub mod reduce;
pub mod scalar;

pub use jordan::{
    height, is_nilpotent, jordan_chevalley, jordan_summary, nilpotency_index, nilpotent_chains,
    nilpotent_jordan_type, Chain, FactorJordanData,
};
pub use matrix::Matrix;
pub use poly::{
    charpoly, minimal_polynomial, squarefree_factorization, squarefree_part, Polynomial,
};
pub use reduce::{coordinates, determinant, inverse, kernel_basis, rank, rref, solve};
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar, Vector};
