//! Trace-pairing functionals on the stabilizer of `e_{2n+1}` in the standard
//! frame `(ℝ^{2n+2}, J)`.
//!
//! `ℓ_Y(Z) = tr(YZ)`. Restricted to the stabilizer subalgebra, `ℓ_Y` forgets
//! the correction terms `L_{w, e_{2n+1}}`, so equivalent tuples in the
//! standard frame have functionals related by coadjoint transport.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::scalar::{frac, int, one, unit_vector};
use crate::linalg::{coordinates, inverse, Matrix, Scalar, Vector};
use crate::symplectic::{build_l, membership, standard_j, Membership, SymplecticForm};

/// Fixed basis of `sp(ℝ^{2n+2}, J)_{e_{2n+1}}`.
///
/// Order: the generator `2 E_{2n+1,0}`; then `L_{e_i, e_{2n+1}}` for the
/// middle coordinates `i = 1..=2n`; then `J̃ S` embedded in the middle
/// block, for `S = E_ii` or `E_ij + E_ji` with `i ≤ j` in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerBasis {
    pub n: usize,
    pub elements: Vec<Matrix>,
}

impl StabilizerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 2
    }
}

/// Coordinates of a functional against a [`StabilizerBasis`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functional {
    pub n: usize,
    pub coords: Vec<Scalar>,
}

pub fn stabilizer_basis(n: usize) -> StabilizerBasis {
    let dim = 2 * n + 2;
    let last = dim - 1;
    let form = standard_j(n);
    let mut elements = Vec::with_capacity(n * (2 * n + 1) + 2 * n + 1);

    let mut g = Matrix::zeros(dim, dim);
    g[(last, 0)] = int(2);
    elements.push(g);

    let e = unit_vector(dim, last);
    for i in 1..last {
        elements.push(build_l(&unit_vector(dim, i), &e, &form).expect("dimensions agree"));
    }

    let mid = SymplecticForm::standard_middle(n);
    for i in 0..2 * n {
        for j in i..2 * n {
            let mut s = Matrix::zeros(2 * n, 2 * n);
            s[(i, j)] = one();
            s[(j, i)] = one();
            let mut z = Matrix::zeros(dim, dim);
            z.set_block(1, 1, &(mid.gram() * &s));
            elements.push(z);
        }
    }
    StabilizerBasis { n, elements }
}

/// `tr(YZ)`.
pub fn ell(y: &Matrix, z: &Matrix) -> Result<Scalar> {
    let n = y.require_square()?;
    if z.rows() != n || z.cols() != n {
        return Err(Error::DimensionMismatch("ell of differently sized matrices".into()));
    }
    Ok((0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .fold(Scalar::zero(), |acc, (i, k)| acc + &y[(i, k)] * &z[(k, i)]))
}

fn check_algebra(y: &Matrix, n: usize) -> Result<SymplecticForm> {
    let form = standard_j(n);
    if !membership(Membership::Algebra, y, &form, None)? {
        return Err(Error::NotInAlgebra);
    }
    Ok(form)
}

/// `ℓ_Y` evaluated on each basis element.
pub fn restrict_functional(y: &Matrix, basis: &StabilizerBasis) -> Result<Functional> {
    check_algebra(y, basis.n)?;
    let coords = basis
        .elements
        .iter()
        .map(|z| ell(y, z))
        .collect::<Result<_>>()?;
    Ok(Functional { n: basis.n, coords })
}

/// For `X` whose functional vanishes on the stabilizer, the vector `v` with
/// `X = L_{v, e_{2n+1}}`, read as `(a, d̃, f)` from the first column.
/// `None` when the restriction of `ℓ_X` is nonzero.
pub fn annihilator_solve(x: &Matrix, n: usize) -> Result<Option<Vector>> {
    let form = check_algebra(x, n)?;
    let basis = stabilizer_basis(n);
    let f = restrict_functional(x, &basis)?;
    if !f.coords.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let dim = 2 * n + 2;
    let last = dim - 1;
    let mut v = x.column(0);
    v[last] = &v[last] * frac(1, 2);
    if build_l(&v, &unit_vector(dim, last), &form)? != *x {
        return Err(Error::Internal("annihilating element is not an L-shift".into()));
    }
    Ok(Some(v))
}

/// Functional of `PYP⁻¹` computed from that of `Y`: each `P⁻¹ Z_i P` is
/// expanded in the basis, and the coordinates are paired with `f`.
pub fn coadjoint_transport(
    f: &Functional,
    p: &Matrix,
    basis: &StabilizerBasis,
) -> Result<Functional> {
    if f.n != basis.n || f.coords.len() != basis.len() {
        return Err(Error::DimensionMismatch("functional and basis disagree".into()));
    }
    let dim = basis.dim();
    let form = standard_j(basis.n);
    if !membership(
        Membership::GroupStabilizer,
        p,
        &form,
        Some(&unit_vector(dim, dim - 1)),
    )? {
        return Err(Error::NotInStabilizer);
    }
    let p_inv = inverse(p)?;
    let flat: Vec<Vector> = basis.elements.iter().map(Matrix::vectorize).collect();
    let coords = basis
        .elements
        .iter()
        .map(|z| {
            let pulled = &(&p_inv * z) * p;
            let alpha = coordinates(&flat, &pulled.vectorize())?
                .ok_or_else(|| Error::Internal("conjugate left the stabilizer".into()))?;
            Ok(alpha
                .iter()
                .zip(&f.coords)
                .fold(Scalar::zero(), |acc, (a, c)| acc + a * c))
        })
        .collect::<Result<_>>()?;
    Ok(Functional { n: f.n, coords })
}
