#![allow(dead_code)]

use cotype::classify::Presentation;
use cotype::linalg::{frac, int, inverse, Matrix, Scalar, Vector};
use cotype::{normal_form, AffineLabel, SymplecticForm, Tuple};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

pub fn small_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vector {
    (0..len).map(|_| small(rng, bound)).collect()
}

pub fn small_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(rng, bound))
}

pub fn moduli() -> Vec<Scalar> {
    vec![int(1), int(-1), int(2), frac(3, 2), frac(-7, 3)]
}

/// Every label of the round-trip grid.
pub fn label_grid() -> Vec<AffineLabel> {
    let mut out = Vec::new();
    for r in 0..=4 {
        for d in moduli() {
            out.push(AffineLabel::OddChain { r, d });
        }
        out.push(AffineLabel::TwoChains { r });
    }
    out
}

pub fn presentations() -> [Presentation; 2] {
    [Presentation::Standard, Presentation::ProofBasis]
}

/// `G⁻¹ S` for a random symmetric `S`: a random element of the algebra of `G`.
pub fn random_algebra_element(rng: &mut ChaCha8Rng, form: &SymplecticForm, bound: i64) -> Matrix {
    let dim = form.dim();
    let mut s = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let x = small(rng, bound);
            s[(i, j)] = x.clone();
            s[(j, i)] = x;
        }
    }
    &inverse(form.gram()).unwrap() * &s
}

/// Product of transvections `x ↦ x + λ ω(u, x) u`.
pub fn random_symplectic(rng: &mut ChaCha8Rng, form: &SymplecticForm, steps: usize) -> Matrix {
    let dim = form.dim();
    let mut p = Matrix::identity(dim);
    for _ in 0..steps {
        let u = small_vector(rng, dim, 1);
        let lambda = int([-2, -1, 1, 2][rng.gen_range(0..4)]);
        let row: Vec<Scalar> = form.dual(&u).into_iter().map(|x| -x).collect();
        let t = &Matrix::identity(dim) + &Matrix::outer(&u, &row).scale(&lambda);
        p = &t * &p;
    }
    p
}

/// Integer matrix with integer inverse.
pub fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize, steps: usize) -> Matrix {
    let mut c = Matrix::identity(dim);
    if dim < 2 {
        return c;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim - 1);
        if j >= i {
            j += 1;
        }
        let mut e = Matrix::identity(dim);
        e[(i, j)] = small(rng, 1);
        c = &e * &c;
    }
    c
}

/// A non-standard symplectic form `Cᵀ J C` with `C` unimodular.
pub fn random_form(rng: &mut ChaCha8Rng, n: usize) -> SymplecticForm {
    let c = random_unimodular(rng, 2 * n, 3);
    let j = SymplecticForm::standard_middle(n);
    SymplecticForm::new(&(&c.transpose() * j.gram()) * &c).unwrap()
}

pub fn hyperbolic() -> Matrix {
    Matrix::from_i64(&[&[1, 0], &[0, -1]])
}

pub fn elliptic() -> Matrix {
    Matrix::from_i64(&[&[0, 1], &[-1, 0]])
}

pub fn nilpotent_pair() -> Matrix {
    Matrix::from_i64(&[&[0, 1], &[0, 0]])
}

/// Residual pairs in the standard middle form: `(name, Y, n)`.
pub fn residuals() -> Vec<(&'static str, Matrix, usize)> {
    let mixed = elliptic().direct_sum(&nilpotent_pair());
    // a 4x4 hyperbolic-with-Jordan-block element: diag(A, -Aᵀ) in J̃₂
    let a = Matrix::from_i64(&[&[2, 1], &[0, 2]]);
    let jordan_hyp = a.direct_sum(&(-&a.transpose()));
    vec![
        ("empty", Matrix::zeros(0, 0), 0),
        ("hyperbolic", hyperbolic(), 1),
        ("elliptic", elliptic(), 1),
        ("nilpotent", nilpotent_pair(), 1),
        ("elliptic+nilpotent", to_blocked(&mixed), 2),
        ("hyperbolic-jordan", jordan_hyp, 2),
    ]
}

/// Reorders a direct sum of two 2x2 pairs from `(p₁, q₁, p₂, q₂)` to the
/// standard middle layout `(p₁, p₂, q₁, q₂)`.
pub fn to_blocked(m: &Matrix) -> Matrix {
    let perm = Matrix::permutation(&[0, 2, 1, 3]);
    &(&perm * m) * &perm.transpose()
}

/// Base tuples for scramble tests, each of dimension at most 12.
pub fn scramble_bases() -> Vec<(String, Tuple)> {
    let mut out = Vec::new();
    let labels = [
        AffineLabel::OddChain { r: 0, d: int(3) },
        AffineLabel::OddChain { r: 1, d: frac(3, 2) },
        AffineLabel::OddChain { r: 2, d: frac(-7, 3) },
        AffineLabel::TwoChains { r: 0 },
        AffineLabel::TwoChains { r: 1 },
        AffineLabel::TwoChains { r: 3 },
        AffineLabel::OddChain { r: 4, d: int(-1) },
    ];
    for label in &labels {
        for (rname, y, n) in residuals() {
            let nf = normal_form(label, Presentation::Standard).unwrap();
            if nf.dim() + 2 * n > 12 {
                continue;
            }
            let t = nf
                .direct_sum_pair(&y, &SymplecticForm::standard_middle(n))
                .unwrap();
            out.push((format!("{label} + {rname}"), t));
        }
    }
    // marked vector zero
    let y = to_blocked(&elliptic().direct_sum(&hyperbolic()));
    let j = SymplecticForm::standard_middle(2);
    out.push((
        "zero vector".into(),
        Tuple::new(j, y, vec![int(0); 4]).unwrap(),
    ));
    out
}
