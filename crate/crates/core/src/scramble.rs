//! Seeded random equivalences, for building test corpora.
//!
//! For an affine tuple the symplectic part is drawn from the stabilizer of
//! the marked vector in the standard frame, `[[1, 0, 0], [ũ, P̃, 0], [k, s, 1]]`
//! with `P̃` a product of transvections, and conjugated back by the
//! standardizing basis. A unimodular change of coordinates then moves the
//! result off the original form.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::scalar::{int, one};
use crate::linalg::{inverse, Matrix, Scalar, Vector};
use crate::symplectic::{
    compose_witness, symplectic_completion, EquivalenceWitness, SymplecticForm, Tuple,
};

const TRANSVECTIONS: usize = 3;
const ELEMENTARY_OPS: usize = 4;

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

fn small_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vector {
    (0..len).map(|_| small(rng, bound)).collect()
}

/// `x ↦ x + λ ω(u, x) u`.
fn transvection(u: &[Scalar], lambda: &Scalar, form: &SymplecticForm) -> Matrix {
    // uᵀG = -(Gu)ᵀ
    let row: Vec<Scalar> = form.dual(u).into_iter().map(|x| -x).collect();
    &Matrix::identity(u.len()) + &Matrix::outer(u, &row).scale(lambda)
}

fn random_symplectic(rng: &mut ChaCha8Rng, form: &SymplecticForm) -> Matrix {
    let dim = form.dim();
    let mut p = Matrix::identity(dim);
    for _ in 0..TRANSVECTIONS {
        let u = small_vector(rng, dim, 1);
        let lambda = int([-2, -1, 1, 2][rng.gen_range(0..4)]);
        p = &transvection(&u, &lambda, form) * &p;
    }
    p
}

/// Stabilizer element of `e_{2n+1}` in the standard frame.
fn random_stabilizer(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mid = SymplecticForm::standard_middle(n);
    let m = 2 * n;
    let dim = m + 2;
    let p_mid = random_symplectic(rng, &mid);
    let u = small_vector(rng, m, 1);
    // s = -uᵀ J̃ P̃
    let gu = mid.dual(&u);
    let s = p_mid.transpose().mul_vec(&gu).expect("middle dimensions agree");
    let mut p = Matrix::zeros(dim, dim);
    p[(0, 0)] = one();
    p[(dim - 1, dim - 1)] = one();
    p[(dim - 1, 0)] = small(rng, 2);
    p.set_block(1, 1, &p_mid);
    for i in 0..m {
        p[(1 + i, 0)] = u[i].clone();
        p[(dim - 1, 1 + i)] = s[i].clone();
    }
    p
}

/// Integer matrix with integer inverse, from elementary row additions.
fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    let mut c = Matrix::identity(dim);
    if dim < 2 {
        return c;
    }
    for _ in 0..ELEMENTARY_OPS {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim - 1);
        if j >= i {
            j += 1;
        }
        let mut e = Matrix::identity(dim);
        e[(i, j)] = int([-1, 1][rng.gen_range(0..2)]);
        c = &e * &c;
    }
    c
}

/// A random tuple equivalent to `t` together with the witness `t → result`.
/// Deterministic in `seed`.
pub fn scramble(t: &Tuple, seed: u64) -> Result<(Tuple, EquivalenceWitness)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = t.dim();
    let p = if t.is_affine() {
        let b = symplectic_completion(&t.v, &t.form)?;
        let ps = random_stabilizer(&mut rng, (dim - 2) / 2);
        &(&b * &ps) * &inverse(&b)?
    } else {
        random_symplectic(&mut rng, &t.form)
    };
    let moved = EquivalenceWitness {
        p,
        w: small_vector(&mut rng, dim, 2),
    };
    let recoordinate = EquivalenceWitness::basis_change(random_unimodular(&mut rng, dim));
    let wit = compose_witness(&moved, &recoordinate)?;
    Ok((t.transform(&wit)?, wit))
}
