//! Symplectic forms, tuples, the maps `L_{v,w}`, standard frames and
//! equivalence witnesses.
//!
//! Conventions: `ω(x, y) = xᵀ G y` for the Gram matrix `G`, and the dual
//! of `u` is the row vector `u* = (G u)ᵀ`, i.e. `u*(x) = xᵀ G u`. With this
//! choice `L_{w, e_{2n+1}}` in the standard frame has first column
//! `(w₀, w̃, 2w_{2n+1})` and the standard block layout of `Y` reads
//! `[[a, -ṽ*, c], [d̃, Ỹ, ṽ], [2f, d̃*, -a]]`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::scalar::{add_vectors, dot, frac, is_zero_vector, one, unit_vector, zero};
use crate::linalg::{inverse, solve, Matrix, Scalar, Vector};

/// Nondegenerate skew form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticForm {
    gram: Matrix,
}

impl SymplecticForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        let n = gram.require_square()?;
        if n % 2 != 0 {
            return Err(Error::InvalidForm(format!("odd dimension {n}")));
        }
        if gram.transpose() != -&gram {
            return Err(Error::InvalidForm("Gram matrix is not skew-symmetric".into()));
        }
        if inverse(&gram).is_err() {
            return Err(Error::InvalidForm("Gram matrix is singular".into()));
        }
        Ok(SymplecticForm { gram })
    }

    /// `[[0, I_n], [-I_n, 0]]` on `ℝ^{2n}`.
    pub fn standard_middle(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            g[(i, n + i)] = one();
            g[(n + i, i)] = -one();
        }
        SymplecticForm { gram: g }
    }

    pub fn empty() -> Self {
        SymplecticForm {
            gram: Matrix::zeros(0, 0),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn omega(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.mul_vec(y).expect("vector length matches form"))
    }

    /// Coefficients of the linear function `u*`, so `u*(x) = dot(u*, x)`.
    pub fn dual(&self, u: &[Scalar]) -> Vector {
        self.gram.mul_vec(u).expect("vector length matches form")
    }

    pub fn direct_sum(&self, other: &SymplecticForm) -> SymplecticForm {
        SymplecticForm {
            gram: self.gram.direct_sum(&other.gram),
        }
    }

    /// Gram matrix of the pushed-forward form `(P⁻¹)ᵀ G P⁻¹`.
    pub fn push_forward(&self, p: &Matrix) -> Result<SymplecticForm> {
        let p_inv = inverse(p)?;
        SymplecticForm::new(&(&p_inv.transpose() * &self.gram) * &p_inv)
    }
}

/// The form `J` on `ℝ^{2n+2}`: `e₀` pairs with `e_{2n+1}` and the middle
/// block is `J̃`.
pub fn standard_j(n: usize) -> SymplecticForm {
    let dim = 2 * n + 2;
    let mut g = Matrix::zeros(dim, dim);
    g[(0, dim - 1)] = one();
    g[(dim - 1, 0)] = -one();
    g.set_block(1, 1, SymplecticForm::standard_middle(n).gram());
    SymplecticForm { gram: g }
}

fn check_len(v: &[Scalar], dim: usize, what: &str) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{what} has length {} but the space has dimension {dim}",
            v.len()
        )));
    }
    Ok(())
}

/// Matrix of `L_{v,w} = v ⊗ w* + w ⊗ v*`.
pub fn build_l(v: &[Scalar], w: &[Scalar], form: &SymplecticForm) -> Result<Matrix> {
    check_len(v, form.dim(), "v")?;
    check_len(w, form.dim(), "w")?;
    let vs = form.dual(v);
    let ws = form.dual(w);
    Ok(&Matrix::outer(v, &ws) + &Matrix::outer(w, &vs))
}

/// Solves `L_{v,w} = target` for `w`.
pub fn solve_shift(target: &Matrix, v: &[Scalar], form: &SymplecticForm) -> Result<Option<Vector>> {
    let dim = form.dim();
    check_len(v, dim, "v")?;
    if target.rows() != dim || target.cols() != dim {
        return Err(Error::DimensionMismatch("shift target has wrong shape".into()));
    }
    let columns: Vec<Vector> = (0..dim)
        .map(|i| build_l(v, &unit_vector(dim, i), form).map(|l| l.vectorize()))
        .collect::<Result<_>>()?;
    if dim == 0 {
        return Ok(Some(Vec::new()));
    }
    solve(&Matrix::from_columns(&columns)?, &target.vectorize())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Algebra,
    Group,
    AlgebraStabilizer,
    GroupStabilizer,
}

pub fn membership(
    kind: Membership,
    m: &Matrix,
    form: &SymplecticForm,
    v: Option<&[Scalar]>,
) -> Result<bool> {
    let dim = form.dim();
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against a form of dimension {dim}",
            m.rows(),
            m.cols()
        )));
    }
    let g = form.gram();
    let in_algebra = || &(&m.transpose() * g) + &(g * m) == Matrix::zeros(dim, dim);
    let in_group = || &(&m.transpose() * g) * m == *g;
    let marked = |kind: Membership| -> Result<&[Scalar]> {
        let v = v.ok_or_else(|| {
            Error::DimensionMismatch(format!("{kind:?} membership needs a marked vector"))
        })?;
        check_len(v, dim, "marked vector")?;
        Ok(v)
    };
    Ok(match kind {
        Membership::Algebra => in_algebra(),
        Membership::Group => in_group(),
        Membership::AlgebraStabilizer => {
            let v = marked(kind)?;
            in_algebra() && is_zero_vector(&m.mul_vec(v)?)
        }
        Membership::GroupStabilizer => {
            let v = marked(kind)?;
            in_group() && m.mul_vec(v)? == v
        }
    })
}

/// A symplectic space with `Y` in its algebra and a marked vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tuple {
    pub form: SymplecticForm,
    pub y: Matrix,
    pub v: Vector,
}

impl Tuple {
    pub fn new(form: SymplecticForm, y: Matrix, v: Vector) -> Result<Self> {
        check_len(&v, form.dim(), "marked vector")?;
        if !membership(Membership::Algebra, &y, &form, None)? {
            return Err(Error::NotInAlgebra);
        }
        Ok(Tuple { form, y, v })
    }

    /// The tuple `(𝟎, 0, 0; 0)`.
    pub fn empty() -> Self {
        Tuple {
            form: SymplecticForm::empty(),
            y: Matrix::zeros(0, 0),
            v: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn is_affine(&self) -> bool {
        !is_zero_vector(&self.v)
    }

    /// The tuple that `wit` maps this one to: form pushed forward along
    /// `P`, `P v`, and `P (Y + L_{v,w}) P⁻¹`.
    pub fn transform(&self, wit: &EquivalenceWitness) -> Result<Tuple> {
        let p_inv = inverse(&wit.p)?;
        let shifted = &self.y + &build_l(&self.v, &wit.w, &self.form)?;
        Tuple::new(
            self.form.push_forward(&wit.p)?,
            &(&wit.p * &shifted) * &p_inv,
            wit.p.mul_vec(&self.v)?,
        )
    }

    /// Direct sum with a pair `(Y₂; ω₂)`; the marked vector gets zero
    /// components on the new summand.
    pub fn direct_sum_pair(&self, y: &Matrix, form: &SymplecticForm) -> Result<Tuple> {
        let mut v = self.v.clone();
        v.extend(std::iter::repeat_with(zero).take(form.dim()));
        Tuple::new(self.form.direct_sum(form), self.y.direct_sum(y), v)
    }
}

/// Blocks of `Y` in the standard frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardYBlocks {
    pub a: Scalar,
    pub c: Scalar,
    pub f: Scalar,
    pub d_tilde: Vector,
    pub v_tilde: Vector,
    pub y_tilde: Matrix,
}

impl StandardYBlocks {
    /// Reads the blocks of a `(2n+2)`-square matrix.
    pub fn read(y: &Matrix) -> Self {
        let dim = y.rows();
        let last = dim - 1;
        StandardYBlocks {
            a: y[(0, 0)].clone(),
            c: y[(0, last)].clone(),
            f: &y[(last, 0)] * frac(1, 2),
            d_tilde: (1..last).map(|i| y[(i, 0)].clone()).collect(),
            v_tilde: (1..last).map(|i| y[(i, last)].clone()).collect(),
            y_tilde: y.submatrix(1, last, 1, last),
        }
    }

    pub fn n(&self) -> usize {
        self.v_tilde.len() / 2
    }

    /// Reassembles `[[a, -ṽ*, c], [d̃, Ỹ, ṽ], [2f, d̃*, -a]]`.
    pub fn assemble(&self) -> Matrix {
        let n = self.n();
        let mid = SymplecticForm::standard_middle(n);
        let dim = 2 * n + 2;
        let last = dim - 1;
        let vs = mid.dual(&self.v_tilde);
        let ds = mid.dual(&self.d_tilde);
        let mut y = Matrix::zeros(dim, dim);
        y[(0, 0)] = self.a.clone();
        y[(0, last)] = self.c.clone();
        y[(last, 0)] = &self.f * Scalar::from_integer(2.into());
        y[(last, last)] = -self.a.clone();
        for i in 0..2 * n {
            y[(0, 1 + i)] = -vs[i].clone();
            y[(1 + i, 0)] = self.d_tilde[i].clone();
            y[(1 + i, last)] = self.v_tilde[i].clone();
            y[(last, 1 + i)] = ds[i].clone();
        }
        y.set_block(1, 1, &self.y_tilde);
        y
    }
}

/// A tuple in the frame `(ℝ^{2n+2}, Y, e_{2n+1}; J)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTuple {
    pub n: usize,
    pub y: Matrix,
    pub blocks: StandardYBlocks,
}

impl StandardTuple {
    pub fn new(y: Matrix) -> Result<Self> {
        let dim = y.require_square()?;
        if dim < 2 || dim % 2 != 0 {
            return Err(Error::DimensionMismatch(format!(
                "standard frame needs an even dimension >= 2, got {dim}"
            )));
        }
        let n = dim / 2 - 1;
        if !membership(Membership::Algebra, &y, &standard_j(n), None)? {
            return Err(Error::NotInAlgebra);
        }
        let blocks = StandardYBlocks::read(&y);
        debug_assert_eq!(blocks.assemble(), y);
        Ok(StandardTuple { n, y, blocks })
    }

    pub fn marked(&self) -> Vector {
        unit_vector(2 * self.n + 2, 2 * self.n + 1)
    }

    pub fn to_tuple(&self) -> Tuple {
        Tuple {
            form: standard_j(self.n),
            y: self.y.clone(),
            v: self.marked(),
        }
    }
}

/// Basis `v₀, …, v_{2n+1} = v` (as the columns of the result) in which the
/// form becomes `standard_j(n)`.
///
/// `v₀` is the lowest-index standard basis vector `e_j` with `ω(e_j, v) ≠ 0`,
/// scaled so that `ω(v₀, v) = 1`. The remaining pairs are found the same way
/// inside the ω-orthogonal complement of the pairs already chosen.
pub fn symplectic_completion(v: &[Scalar], form: &SymplecticForm) -> Result<Matrix> {
    let dim = form.dim();
    check_len(v, dim, "v")?;
    if is_zero_vector(v) {
        return Err(Error::ZeroVector);
    }
    let n = dim / 2 - 1;
    let std_basis: Vec<Vector> = (0..dim).map(|i| unit_vector(dim, i)).collect();

    let pick = |candidates: &[Vector], partner: &[Scalar]| -> Option<Vector> {
        candidates.iter().find_map(|e| {
            let w = form.omega(e, partner);
            (!w.is_zero()).then(|| e.iter().map(|x| x / &w).collect())
        })
    };
    // projection onto the ω-complement of span{p, q}, where ω(p, q) = 1
    let project = |x: &[Scalar], p: &[Scalar], q: &[Scalar]| -> Vector {
        let xq = form.omega(x, q);
        let xp = form.omega(x, p);
        x.iter()
            .zip(p.iter().zip(q))
            .map(|(xi, (pi, qi))| xi - &xq * pi + &xp * qi)
            .collect()
    };

    let v0 = pick(&std_basis, v).expect("nondegenerate form pairs v with some basis vector");
    let mut candidates: Vec<Vector> = std_basis.iter().map(|e| project(e, &v0, v)).collect();
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for _ in 0..n {
        let p = candidates
            .iter()
            .find(|c| !is_zero_vector(c))
            .cloned()
            .ok_or_else(|| Error::Internal("symplectic complement exhausted".into()))?;
        // ω(q, p) ≠ 0 scaled to ω(q, p) = 1 means ω(p, q) = -1; flip the sign
        let q: Vector = pick(&candidates, &p)
            .ok_or_else(|| Error::Internal("degenerate symplectic complement".into()))?
            .into_iter()
            .map(|x| -x)
            .collect();
        candidates = candidates.iter().map(|c| project(c, &p, &q)).collect();
        lower.push(p);
        upper.push(q);
    }
    let mut cols = vec![v0];
    cols.extend(lower);
    cols.extend(upper);
    cols.push(v.to_vec());
    let b = Matrix::from_columns(&cols)?;
    debug_assert_eq!(&(&b.transpose() * form.gram()) * &b, *standard_j(n).gram());
    Ok(b)
}

/// Moves an affine tuple into the standard frame. The witness maps `t` to
/// the returned standard tuple.
pub fn standardize(t: &Tuple) -> Result<(StandardTuple, EquivalenceWitness)> {
    let b = symplectic_completion(&t.v, &t.form)?;
    let p = inverse(&b)?;
    let y = &(&p * &t.y) * &b;
    Ok((
        StandardTuple::new(y)?,
        EquivalenceWitness {
            p,
            w: vec![zero(); t.dim()],
        },
    ))
}

/// `ω(Y v, v)`, the top-right entry of `Y` in any standard frame.
pub fn parameter(t: &Tuple) -> Result<Scalar> {
    if !t.is_affine() {
        return Err(Error::ZeroVector);
    }
    Ok(t.form.omega(&t.y.mul_vec(&t.v)?, &t.v))
}

/// `(P, w)` carrying tuple `A` to `B`: `P` is symplectic from `A.form` to
/// `B.form`, `P A.v = B.v` and `B.Y = P (A.Y + L_{A.v, w}) P⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivalenceWitness {
    pub p: Matrix,
    pub w: Vector,
}

impl EquivalenceWitness {
    pub fn identity(dim: usize) -> Self {
        EquivalenceWitness {
            p: Matrix::identity(dim),
            w: vec![zero(); dim],
        }
    }

    pub fn basis_change(p: Matrix) -> Self {
        let dim = p.cols();
        EquivalenceWitness {
            p,
            w: vec![zero(); dim],
        }
    }
}

pub fn verify_witness(a: &Tuple, b: &Tuple, wit: &EquivalenceWitness) -> bool {
    let (da, db) = (a.dim(), b.dim());
    if wit.p.rows() != db || wit.p.cols() != da || wit.w.len() != da || da != db {
        return false;
    }
    let p = &wit.p;
    if &(&p.transpose() * b.form.gram()) * p != *a.form.gram() {
        return false;
    }
    if p.mul_vec(&a.v).ok().as_deref() != Some(&b.v[..]) {
        return false;
    }
    let Ok(l) = build_l(&a.v, &wit.w, &a.form) else {
        return false;
    };
    // P invertible follows from the Gram identity, so B.Y P = P X suffices.
    &b.y * p == p * &(&a.y + &l)
}

/// Witness for `A → C` from witnesses `A → B` and `B → C`:
/// `(P₂P₁, w₁ + P₁⁻¹ w₂)`.
pub fn compose_witness(
    first: &EquivalenceWitness,
    second: &EquivalenceWitness,
) -> Result<EquivalenceWitness> {
    if first.p.rows() != second.p.cols() || second.w.len() != first.p.rows() {
        return Err(Error::DimensionMismatch("witnesses do not compose".into()));
    }
    let p1_inv = inverse(&first.p)?;
    Ok(EquivalenceWitness {
        p: &second.p * &first.p,
        w: add_vectors(&first.w, &p1_inv.mul_vec(&second.w)?),
    })
}

/// Witness for `B → A` from one for `A → B`: `(P⁻¹, -P w)`.
pub fn invert_witness(wit: &EquivalenceWitness) -> Result<EquivalenceWitness> {
    Ok(EquivalenceWitness {
        p: inverse(&wit.p)?,
        w: wit.p.mul_vec(&wit.w)?.into_iter().map(|x| -x).collect(),
    })
}
