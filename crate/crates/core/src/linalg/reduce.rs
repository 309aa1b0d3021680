//! Gaussian elimination over the rationals. Pivots are always the
//! lowest-index nonzero entry, so every result is reproducible.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{one, zero, Scalar, Vector};
use crate::error::{Error, Result};

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                let delta = &f * &a[(r, j)];
                a[(i, j)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).pivots.len()
}

/// Basis of the right null space, one vector per free column (in column
/// order), with the free coordinate set to one.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let Echelon { reduced, pivots } = rref(m);
    let cols = m.cols();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero(); cols];
        v[free] = one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -reduced[(row, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `m x = b`, with free variables set to zero; `None` when the
/// system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            m.rows(),
            b.len()
        )));
    }
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    aug.set_block(0, 0, m);
    for (i, x) in b.iter().enumerate() {
        aug[(i, cols)] = x.clone();
    }
    let Echelon { reduced, pivots } = rref(&aug);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = reduced[(row, cols)].clone();
    }
    Ok(Some(x))
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.require_square()?;
    let mut aug = Matrix::zeros(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, &Matrix::identity(n));
    let Echelon { reduced, pivots } = rref(&aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return Err(Error::Singular);
    }
    Ok(reduced.submatrix(0, n, n, 2 * n))
}

pub fn determinant(m: &Matrix) -> Result<Scalar> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(zero());
        };
        if p != c {
            for j in 0..n {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] / &pivot;
            for j in c..n {
                let delta = &f * &a[(c, j)];
                a[(i, j)] -= delta;
            }
        }
    }
    Ok(det)
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn coordinates(basis: &[Vector], target: &[Scalar]) -> Result<Option<Vector>> {
    if basis.is_empty() {
        return Ok(if target.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let m = Matrix::from_columns(basis)?;
    solve(&m, target)
}
