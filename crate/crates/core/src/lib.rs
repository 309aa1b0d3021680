//! Classification of tuples `(V, Y, v; ω)` under the odd real symplectic
//! group, in exact rational arithmetic.
//!
//! A tuple is a symplectic space with an infinitesimally symplectic map `Y`
//! and a marked vector `v`; two tuples are equivalent when a symplectic
//! isomorphism carries one marked vector to the other and conjugates `Y`
//! to the other map up to a correction `L_{v,w}`. [`classify`] splits any
//! tuple into its indecomposable affine summand, given by an
//! [`AffineLabel`], plus a residual pair, and returns an explicit
//! [`EquivalenceWitness`] for the splitting.

pub mod classify;
pub mod cli;
pub mod coadjoint;
mod error;
pub mod linalg;
pub mod scramble;
pub mod symplectic;

pub use classify::{
    classify, labels_equal, lift_label, little_cotype, normal_form, split_nonzero_parameter,
    AffineLabel, Decomposition, LabelVerdict, Presentation, ResidualType,
};
pub use coadjoint::{
    annihilator_solve, coadjoint_transport, ell, restrict_functional, stabilizer_basis,
    Functional, StabilizerBasis,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Polynomial, Scalar, Vector};
pub use scramble::scramble;
pub use symplectic::{
    build_l, compose_witness, invert_witness, membership, parameter, standard_j, standardize,
    symplectic_completion, verify_witness, EquivalenceWitness, Membership, StandardTuple,
    StandardYBlocks, SymplecticForm, Tuple,
};
