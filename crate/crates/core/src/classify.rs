//! Decomposition of a tuple into its indecomposable affine summand and a
//! residual pair, with the normal forms of the affine summands.
//!
//! The recursion works in the standard frame. When the parameter `c` is
//! nonzero, a stabilizer element with `ũ = -ṽ/c` splits off the 2-dimensional
//! block `[[0, c], [0, 0]]` and leaves `Ỹ + (1/2c) L_{ṽ,ṽ}` on the middle.
//! When `c = 0`, the little cotype `(ℝ^{2n}, Ỹ, ṽ; J̃)` is classified and
//! its witness is lifted back one level, which raises the label by one.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::scalar::{format_scalar, frac, one, scale_vector, unit_vector, zero};
use crate::linalg::{charpoly, inverse, jordan_summary, FactorJordanData, Matrix, Polynomial, Scalar, Vector};
use crate::symplectic::{
    build_l, compose_witness, membership, solve_shift, standard_j, standardize, verify_witness,
    EquivalenceWitness, Membership, StandardTuple, SymplecticForm, Tuple,
};

/// Indecomposable affine summand of a cotype.
///
/// `OddChain { r, d }` is the chain cotype of dimension `2r+2` with modulus
/// `d ≠ 0`; `TwoChains { r }` is the two-chain cotype of dimension `2r+2`;
/// `Zero` is the zero cotype of dimension 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AffineLabel {
    Zero,
    OddChain { r: usize, d: Scalar },
    TwoChains { r: usize },
}

impl AffineLabel {
    pub fn carrier_dim(&self) -> usize {
        match self {
            AffineLabel::Zero => 0,
            AffineLabel::OddChain { r, .. } | AffineLabel::TwoChains { r } => 2 * r + 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            AffineLabel::OddChain { d, .. } if d.is_zero() => Err(Error::InvalidLabel(
                "an odd chain needs a nonzero modulus".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AffineLabel::Zero => "Zero",
            AffineLabel::OddChain { .. } => "OddChain",
            AffineLabel::TwoChains { .. } => "TwoChains",
        }
    }

    pub fn r(&self) -> Option<usize> {
        match self {
            AffineLabel::Zero => None,
            AffineLabel::OddChain { r, .. } | AffineLabel::TwoChains { r } => Some(*r),
        }
    }

    pub fn modulus(&self) -> Option<&Scalar> {
        match self {
            AffineLabel::OddChain { d, .. } => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for AffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineLabel::Zero => write!(f, "Zero"),
            AffineLabel::OddChain { r, d } => write!(f, "OddChain(r={r}, d={})", format_scalar(d)),
            AffineLabel::TwoChains { r } => write!(f, "TwoChains(r={r})"),
        }
    }
}

/// Which basis a normal form is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Block layout in the standard frame `(ℝ^{2r+2}, Y, e_{2r+1}; J)`.
    Standard,
    /// Superdiagonal chain basis with an antidiagonal form.
    ProofBasis,
}

/// The pair left over after the affine summand is split off, with its
/// similarity invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualType {
    pub y: Matrix,
    pub form: SymplecticForm,
    pub jordan_summary: Vec<FactorJordanData>,
    pub charpoly: Polynomial,
}

impl ResidualType {
    pub fn new(y: Matrix, form: SymplecticForm) -> Result<Self> {
        if !membership(Membership::Algebra, &y, &form, None)? {
            return Err(Error::NotInAlgebra);
        }
        Ok(ResidualType {
            jordan_summary: jordan_summary(&y)?,
            charpoly: charpoly(&y)?,
            y,
            form,
        })
    }

    pub fn empty() -> Self {
        ResidualType {
            y: Matrix::zeros(0, 0),
            form: SymplecticForm::empty(),
            jordan_summary: Vec::new(),
            charpoly: Polynomial::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    /// Charpoly and Jordan data agree.
    pub fn invariants_match(&self, other: &ResidualType) -> bool {
        self.charpoly == other.charpoly && self.jordan_summary == other.jordan_summary
    }
}

/// Result of [`classify`]. `witness` maps the input tuple to
/// `presentation = normal_form(affine) ⊕ residual`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub affine: AffineLabel,
    pub residual: ResidualType,
    pub witness: EquivalenceWitness,
    pub presentation: Tuple,
}

/// `(ℝ^{2n}, Ỹ, ṽ; J̃)` of a standard tuple with parameter zero.
pub fn little_cotype(s: &StandardTuple) -> Result<Tuple> {
    if !s.blocks.c.is_zero() {
        return Err(Error::NonzeroParameter(format_scalar(&s.blocks.c)));
    }
    Tuple::new(
        SymplecticForm::standard_middle(s.n),
        s.blocks.y_tilde.clone(),
        s.blocks.v_tilde.clone(),
    )
}

/// The stabilizer element `[[1, 0, 0], [u, P̃, 0], [0, s, 1]]` from a
/// standard frame to the frame with middle form `target_mid`; `s` is fixed
/// by the symplectic condition `s = -uᵀ G P̃`.
fn stabilizer_element(u: &[Scalar], p_mid: &Matrix, target_mid: &SymplecticForm) -> Matrix {
    let m = u.len();
    let dim = m + 2;
    let s = p_mid
        .transpose()
        .mul_vec(&target_mid.dual(u))
        .expect("middle dimensions agree");
    let mut p = Matrix::zeros(dim, dim);
    p[(0, 0)] = one();
    p[(dim - 1, dim - 1)] = one();
    p.set_block(1, 1, p_mid);
    for i in 0..m {
        p[(1 + i, 0)] = u[i].clone();
        // s = -uᵀ G P̃ = (P̃ᵀ Gu)ᵀ since Gᵀ = -G
        p[(dim - 1, 1 + i)] = s[i].clone();
    }
    p
}

/// `[[0, 0, 1], [0, mid, 0], [-1, 0, 0]]`.
fn bordered_form(mid: &SymplecticForm) -> SymplecticForm {
    let m = mid.dim();
    let dim = m + 2;
    let mut g = Matrix::zeros(dim, dim);
    g[(0, dim - 1)] = one();
    g[(dim - 1, 0)] = -one();
    g.set_block(1, 1, mid.gram());
    SymplecticForm::new(g).expect("bordered form of a symplectic form is symplectic")
}

/// Finds `w` with `target = P (Y + L_{v,w}) P⁻¹`, given `P` already fixing
/// the marked vectors.
fn complete_witness(
    source: &Tuple,
    target: &Tuple,
    p: Matrix,
) -> Result<EquivalenceWitness> {
    let p_inv = inverse(&p)?;
    let conj = &(&p * &source.y) * &p_inv;
    let gap = &target.y - &conj;
    let y = solve_shift(&gap, &target.v, &target.form)?.ok_or_else(|| {
        Error::Internal("conjugated map differs from the target by more than an L-shift".into())
    })?;
    let wit = EquivalenceWitness {
        w: p_inv.mul_vec(&y)?,
        p,
    };
    if !verify_witness(source, target, &wit) {
        return Err(Error::Internal("constructed witness does not verify".into()));
    }
    Ok(wit)
}

/// Splits off the 2-dimensional summand `[[0, c], [0, 0]]` of a standard
/// tuple with nonzero parameter `c`. The witness maps `s` to
/// `normal_form(OddChain(0, c)) ⊕ (Ỹ + (1/2c) L_{ṽ,ṽ}; J̃)`, with the
/// 2-dimensional block carried by `e₀, e_{2n+1}`.
pub fn split_nonzero_parameter(s: &StandardTuple) -> Result<(ResidualType, EquivalenceWitness)> {
    let (y_res, wit) = split_nonzero_raw(s)?;
    Ok((
        ResidualType::new(y_res, SymplecticForm::standard_middle(s.n))?,
        wit,
    ))
}

fn split_nonzero_raw(s: &StandardTuple) -> Result<(Matrix, EquivalenceWitness)> {
    let c = &s.blocks.c;
    if c.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let n = s.n;
    let dim = 2 * n + 2;
    let mid = SymplecticForm::standard_middle(n);
    let v_tilde = &s.blocks.v_tilde;
    let u = scale_vector(&(-c.recip()), v_tilde);
    let p = stabilizer_element(&u, &Matrix::identity(2 * n), &mid);

    let half_inv_c = (c * frac(2, 1)).recip();
    let y_res = &s.blocks.y_tilde + &build_l(v_tilde, v_tilde, &mid)?.scale(&half_inv_c);
    let mut split_y = Matrix::zeros(dim, dim);
    split_y[(0, dim - 1)] = c.clone();
    split_y.set_block(1, 1, &y_res);
    let split = Tuple::new(standard_j(n), split_y, unit_vector(dim, dim - 1))?;
    let to_split = complete_witness(&s.to_tuple(), &split, p)?;

    // reorder coordinates to (e₀, e_{2n+1}, middle)
    let mut order = vec![0, dim - 1];
    order.extend(1..dim - 1);
    let target = normal_form(&AffineLabel::OddChain { r: 0, d: c.clone() }, Presentation::Standard)?
        .direct_sum_pair(&y_res, &mid)?;
    let reorder = EquivalenceWitness::basis_change(Matrix::permutation(&order));
    let wit = compose_witness(&to_split, &reorder)?;
    if !verify_witness(&s.to_tuple(), &target, &wit) {
        return Err(Error::Internal("parameter split witness does not verify".into()));
    }
    Ok((y_res, wit))
}

/// One level of the recursion: label, residual pair and a witness from the
/// input to `normal_form(label) ⊕ residual`.
struct Split {
    label: AffineLabel,
    res_y: Matrix,
    res_form: SymplecticForm,
    witness: EquivalenceWitness,
}

impl Split {
    fn presentation(&self) -> Result<Tuple> {
        normal_form(&self.label, Presentation::Standard)?.direct_sum_pair(&self.res_y, &self.res_form)
    }
}

fn split_tuple(t: &Tuple) -> Result<Split> {
    if !t.is_affine() {
        return Ok(Split {
            label: AffineLabel::Zero,
            res_y: t.y.clone(),
            res_form: t.form.clone(),
            witness: EquivalenceWitness::identity(t.dim()),
        });
    }
    let (s, to_standard) = standardize(t)?;
    let inner = split_standard(&s)?;
    Ok(Split {
        witness: compose_witness(&to_standard, &inner.witness)?,
        ..inner
    })
}

fn split_standard(s: &StandardTuple) -> Result<Split> {
    if !s.blocks.c.is_zero() {
        let (res_y, witness) = split_nonzero_raw(s)?;
        return Ok(Split {
            label: AffineLabel::OddChain {
                r: 0,
                d: s.blocks.c.clone(),
            },
            res_y,
            res_form: SymplecticForm::standard_middle(s.n),
            witness,
        });
    }
    let little = little_cotype(s)?;
    let inner = split_tuple(&little)?;
    let inner_target = inner.presentation()?;

    // Lift (P̃, w̃) to [[1,0,0],[ũ,P̃,0],[0,*,1]] with ũ = -P̃ w̃.
    let u: Vector = inner
        .witness
        .p
        .mul_vec(&inner.witness.w)?
        .into_iter()
        .map(|x| -x)
        .collect();
    let p = stabilizer_element(&u, &inner.witness.p, &inner_target.form);

    let m = inner_target.dim();
    let dim = m + 2;
    let lifted_form = bordered_form(&inner_target.form);
    let dual = inner_target.form.dual(&inner_target.v);
    let mut lifted_y = Matrix::zeros(dim, dim);
    lifted_y.set_block(1, 1, &inner_target.y);
    for i in 0..m {
        lifted_y[(0, 1 + i)] = -dual[i].clone();
        lifted_y[(1 + i, dim - 1)] = inner_target.v[i].clone();
    }
    let lifted = Tuple::new(lifted_form, lifted_y, unit_vector(dim, dim - 1))?;
    let to_lifted = complete_witness(&s.to_tuple(), &lifted, p)?;

    let label = lift_label(&inner.label);
    let order = lift_order(&inner.label, m);
    let reorder = EquivalenceWitness::basis_change(Matrix::permutation(&order));
    let split = Split {
        label,
        res_y: inner.res_y,
        res_form: inner.res_form,
        witness: compose_witness(&to_lifted, &reorder)?,
    };
    if !verify_witness(&s.to_tuple(), &split.presentation()?, &split.witness) {
        return Err(Error::Internal("lifted witness does not verify".into()));
    }
    Ok(split)
}

/// Coordinate order taking the bordered frame `(E₀, inner NF, residual, E_last)`
/// to `(NF of the lifted label, residual)`.
fn lift_order(inner: &AffineLabel, inner_dim: usize) -> Vec<usize> {
    let last = inner_dim + 1;
    let k = inner.carrier_dim();
    let mut order = vec![0];
    if let Some(ri) = inner.r() {
        // a_1..a_ri, then a_r from the inner first vector
        order.extend(2..=ri + 1);
        order.push(1);
        // b_1..b_ri, then b_r from the inner marked vector
        order.extend(ri + 2..=2 * ri + 1);
        order.push(2 * ri + 2);
    }
    order.push(last);
    order.extend(1 + k..=inner_dim);
    order
}

/// Decomposes `t` as (affine summand) ⊕ (residual pair).
pub fn classify(t: &Tuple) -> Result<Decomposition> {
    if t.v.len() != t.dim() {
        return Err(Error::DimensionMismatch("marked vector length".into()));
    }
    if !membership(Membership::Algebra, &t.y, &t.form, None)? {
        return Err(Error::NotInAlgebra);
    }
    let split = split_tuple(t)?;
    let presentation = split.presentation()?;
    if !verify_witness(t, &presentation, &split.witness) {
        return Err(Error::Internal("decomposition witness does not verify".into()));
    }
    let residual = if split.res_form.dim() == 0 {
        ResidualType::empty()
    } else {
        ResidualType::new(split.res_y, split.res_form)?
    };
    Ok(Decomposition {
        affine: split.label,
        residual,
        witness: split.witness,
        presentation,
    })
}

/// The label one little-cotype step above `inner`.
pub fn lift_label(inner: &AffineLabel) -> AffineLabel {
    match inner {
        AffineLabel::Zero => AffineLabel::TwoChains { r: 0 },
        AffineLabel::OddChain { r, d } => AffineLabel::OddChain {
            r: r + 1,
            d: d.clone(),
        },
        AffineLabel::TwoChains { r } => AffineLabel::TwoChains { r: r + 1 },
    }
}

/// Representative tuple of an affine label.
///
/// In the standard presentation, for `r ≥ 1` with coordinates
/// `e₀ | a₁…a_r | b₁…b_r | e_{2r+1}`, `Y` has `-1` at `(e₀, a_r)`, `-Nᵀ` on the
/// `a` block, `N` on the `b` block, `1` at `(b_r, e_{2r+1})`, and for odd chains
/// the modulus at `(a₁, b₁)`. The form is `standard_j(r)`.
///
/// In the proof-basis presentation `Y` is `-1` on the superdiagonal of the
/// first `r+1` coordinates, `+1` on the superdiagonal of the last `r+1`, with
/// the modulus at `(r, r+1)`; the form is antidiagonal, `+1` above the
/// center and `-1` below.
pub fn normal_form(label: &AffineLabel, presentation: Presentation) -> Result<Tuple> {
    label.validate()?;
    let (r, d) = match label {
        AffineLabel::Zero => return Ok(Tuple::empty()),
        AffineLabel::OddChain { r, d } => (*r, d.clone()),
        AffineLabel::TwoChains { r } => (*r, zero()),
    };
    let dim = 2 * r + 2;
    let mut y = Matrix::zeros(dim, dim);
    let form = match presentation {
        Presentation::Standard => {
            if r == 0 {
                y[(0, 1)] = d;
            } else {
                y[(0, r)] = -one();
                for i in 1..r {
                    y[(i + 1, i)] = -one();
                    y[(r + i, r + i + 1)] = one();
                }
                y[(1, r + 1)] = d;
                y[(2 * r, 2 * r + 1)] = one();
            }
            standard_j(r)
        }
        Presentation::ProofBasis => {
            for i in 0..r {
                y[(i, i + 1)] = -one();
            }
            y[(r, r + 1)] = d;
            for i in r + 1..dim - 1 {
                y[(i, i + 1)] = one();
            }
            let mut g = Matrix::zeros(dim, dim);
            for i in 0..dim {
                g[(i, dim - 1 - i)] = if i <= r { one() } else { -one() };
            }
            SymplecticForm::new(g)?
        }
    };
    Tuple::new(form, y, unit_vector(dim, dim - 1))
}

/// Outcome of comparing two decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelVerdict {
    Equal,
    Distinct,
    /// Affine labels and residual invariants agree, but the residual pairs
    /// are not certified equivalent.
    Undetermined,
}

pub fn labels_equal(a: &Decomposition, b: &Decomposition) -> LabelVerdict {
    if a.affine != b.affine || !a.residual.invariants_match(&b.residual) {
        return LabelVerdict::Distinct;
    }
    let same_pair = a.residual.y == b.residual.y && a.residual.form == b.residual.form;
    if a.residual.is_empty() || same_pair {
        LabelVerdict::Equal
    } else {
        LabelVerdict::Undetermined
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use crate::linalg::nilpotent_chains;
    use crate::symplectic::parameter;

    fn odd(r: usize, d: Scalar) -> AffineLabel {
        AffineLabel::OddChain { r, d }
    }

    #[test]
    fn two_dimensional_cases() {
        let t = Tuple::new(
            standard_j(0),
            Matrix::from_i64(&[&[0, 4], &[0, 0]]),
            unit_vector(2, 1),
        )
        .unwrap();
        let dec = classify(&t).unwrap();
        assert_eq!(dec.affine, odd(0, int(4)));
        assert!(dec.residual.is_empty());

        let t = Tuple::new(standard_j(0), Matrix::zeros(2, 2), unit_vector(2, 1)).unwrap();
        let dec = classify(&t).unwrap();
        assert_eq!(dec.affine, AffineLabel::TwoChains { r: 0 });
        assert!(dec.residual.is_empty());
    }

    #[test]
    fn shifted_two_dimensional_tuple_has_no_modulus() {
        // [[1,0],[0,-1]] = L_{e₀,e₁}-shift of zero, parameter 0
        let t = Tuple::new(
            standard_j(0),
            Matrix::from_i64(&[&[1, 0], &[6, -1]]),
            unit_vector(2, 1),
        )
        .unwrap();
        let dec = classify(&t).unwrap();
        assert_eq!(dec.affine, AffineLabel::TwoChains { r: 0 });
        assert!(verify_witness(&t, &dec.presentation, &dec.witness));
    }

    #[test]
    fn zero_vector_gives_zero_cotype() {
        let y = Matrix::from_i64(&[&[1, 2], &[3, -1]]);
        let t = Tuple::new(standard_j(0), y.clone(), vec![zero(), zero()]).unwrap();
        let dec = classify(&t).unwrap();
        assert_eq!(dec.affine, AffineLabel::Zero);
        assert_eq!(dec.residual.y, y);
        assert_eq!(dec.presentation, t);

        let dec = classify(&Tuple::empty()).unwrap();
        assert_eq!(dec.affine, AffineLabel::Zero);
        assert!(dec.residual.is_empty());
    }

    #[test]
    fn little_cotype_examples() {
        let s = StandardTuple::new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(little_cotype(&s).unwrap().dim(), 0);

        for r in 1..4 {
            let nf = normal_form(&odd(r, frac(3, 2)), Presentation::Standard).unwrap();
            let s = StandardTuple::new(nf.y).unwrap();
            let little = little_cotype(&s).unwrap();
            assert_eq!(little.dim(), 2 * r);
            assert_eq!(classify(&little).unwrap().affine, odd(r - 1, frac(3, 2)));

            let nf = normal_form(&AffineLabel::TwoChains { r }, Presentation::Standard).unwrap();
            let s = StandardTuple::new(nf.y).unwrap();
            let little = little_cotype(&s).unwrap();
            assert_eq!(
                classify(&little).unwrap().affine,
                AffineLabel::TwoChains { r: r - 1 }
            );
        }

        let s = StandardTuple::new(Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        assert!(matches!(little_cotype(&s), Err(Error::NonzeroParameter(_))));
    }

    #[test]
    fn split_examples() {
        // ṽ = 0, Ỹ = 0
        let mut y = Matrix::zeros(4, 4);
        y[(0, 3)] = int(2);
        let s = StandardTuple::new(y).unwrap();
        let (res, wit) = split_nonzero_parameter(&s).unwrap();
        assert!(res.y.is_zero());
        let target = normal_form(&odd(0, int(2)), Presentation::Standard)
            .unwrap()
            .direct_sum_pair(&res.y, &res.form)
            .unwrap();
        assert!(verify_witness(&s.to_tuple(), &target, &wit));

        // n = 0: nothing left over
        let s = StandardTuple::new(Matrix::from_i64(&[&[0, 5], &[0, 0]])).unwrap();
        let (res, _) = split_nonzero_parameter(&s).unwrap();
        assert!(res.is_empty());

        // n = 1, c = 1, ṽ = e, Ỹ = 0: residual ½ L_{e,e}
        let blocks = crate::symplectic::StandardYBlocks {
            a: zero(),
            c: int(1),
            f: zero(),
            d_tilde: vec![zero(), zero()],
            v_tilde: vec![int(1), zero()],
            y_tilde: Matrix::zeros(2, 2),
        };
        let s = StandardTuple::new(blocks.assemble()).unwrap();
        let (res, wit) = split_nonzero_parameter(&s).unwrap();
        let mid = SymplecticForm::standard_middle(1);
        let e = vec![int(1), zero()];
        assert_eq!(res.y, build_l(&e, &e, &mid).unwrap().scale(&frac(1, 2)));
        let target = normal_form(&odd(0, int(1)), Presentation::Standard)
            .unwrap()
            .direct_sum_pair(&res.y, &res.form)
            .unwrap();
        assert!(verify_witness(&s.to_tuple(), &target, &wit));

        let s = StandardTuple::new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(split_nonzero_parameter(&s).unwrap_err(), Error::ZeroParameter);
    }

    #[test]
    fn lift_label_examples() {
        assert_eq!(lift_label(&odd(0, int(3))), odd(1, int(3)));
        assert_eq!(
            lift_label(&AffineLabel::TwoChains { r: 0 }),
            AffineLabel::TwoChains { r: 1 }
        );
        assert_eq!(
            lift_label(&AffineLabel::Zero),
            AffineLabel::TwoChains { r: 0 }
        );
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&odd(0, int(-3)), Presentation::Standard).unwrap();
        assert_eq!(nf.y, Matrix::from_i64(&[&[0, -3], &[0, 0]]));
        assert_eq!(*nf.form.gram(), Matrix::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(nf.v, vec![zero(), one()]);

        let nf = normal_form(&AffineLabel::TwoChains { r: 0 }, Presentation::Standard).unwrap();
        assert!(nf.y.is_zero());

        let nf = normal_form(&odd(1, int(5)), Presentation::ProofBasis).unwrap();
        assert_eq!(
            nf.y,
            Matrix::from_i64(&[&[0, -1, 0, 0], &[0, 0, 5, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
        );
        assert_eq!(
            *nf.form.gram(),
            Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]])
        );

        assert!(matches!(
            normal_form(&odd(2, zero()), Presentation::Standard),
            Err(Error::InvalidLabel(_))
        ));
        assert_eq!(
            normal_form(&AffineLabel::Zero, Presentation::ProofBasis).unwrap(),
            Tuple::empty()
        );
    }

    #[test]
    fn standard_form_matches_block_layout() {
        // r = 2: rows/cols e0 | a1 a2 | b1 b2 | e5
        let nf = normal_form(&odd(2, int(7)), Presentation::Standard).unwrap();
        assert_eq!(
            nf.y,
            Matrix::from_i64(&[
                &[0, 0, -1, 0, 0, 0],
                &[0, 0, 0, 7, 0, 0],
                &[0, -1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 0],
            ])
        );
    }

    #[test]
    fn round_trip_small_grid() {
        for r in 0..4 {
            for pres in [Presentation::Standard, Presentation::ProofBasis] {
                for label in [odd(r, frac(-7, 3)), AffineLabel::TwoChains { r }] {
                    let nf = normal_form(&label, pres).unwrap();
                    let dec = classify(&nf).unwrap();
                    assert_eq!(dec.affine, label, "{pres:?}");
                    assert!(dec.residual.is_empty());
                }
            }
        }
    }

    #[test]
    fn chain_structure_of_normal_forms() {
        for r in 0..4 {
            let nf = normal_form(&odd(r, int(2)), Presentation::Standard).unwrap();
            let lens: Vec<usize> = nilpotent_chains(&nf.y).unwrap().iter().map(Vec::len).collect();
            assert_eq!(lens, vec![2 * r + 2]);
            let nf = normal_form(&AffineLabel::TwoChains { r }, Presentation::Standard).unwrap();
            let lens: Vec<usize> = nilpotent_chains(&nf.y).unwrap().iter().map(Vec::len).collect();
            assert_eq!(lens, vec![r + 1, r + 1]);
        }
    }

    #[test]
    fn residual_is_kept_beside_the_affine_part() {
        let elliptic = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let mid = SymplecticForm::standard_middle(1);
        for label in [odd(1, int(2)), AffineLabel::TwoChains { r: 2 }] {
            let t = normal_form(&label, Presentation::Standard)
                .unwrap()
                .direct_sum_pair(&elliptic, &mid)
                .unwrap();
            let dec = classify(&t).unwrap();
            assert_eq!(dec.affine, label);
            assert_eq!(dec.residual.charpoly, Polynomial::from_i64(&[1, 0, 1]));
            assert_eq!(t.dim(), dec.affine.carrier_dim() + dec.residual.dim());
        }
    }

    #[test]
    fn parameter_split_happens_exactly_when_parameter_is_nonzero() {
        let hyperbolic = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let mid = SymplecticForm::standard_middle(1);
        let t = normal_form(&odd(0, int(3)), Presentation::Standard)
            .unwrap()
            .direct_sum_pair(&hyperbolic, &mid)
            .unwrap();
        assert_eq!(parameter(&t).unwrap(), int(3));
        assert_eq!(classify(&t).unwrap().affine, odd(0, int(3)));
    }

    #[test]
    fn verdicts() {
        let a = classify(&normal_form(&odd(1, int(2)), Presentation::Standard).unwrap()).unwrap();
        let b = classify(&normal_form(&odd(1, int(3)), Presentation::Standard).unwrap()).unwrap();
        assert_eq!(labels_equal(&a, &a), LabelVerdict::Equal);
        assert_eq!(labels_equal(&a, &b), LabelVerdict::Distinct);

        // equal invariants, different matrices: conjugate elliptic residuals
        let mid = SymplecticForm::standard_middle(1);
        let r1 = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let r2 = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(-1), int(-1)]]).unwrap();
        let base = normal_form(&AffineLabel::TwoChains { r: 0 }, Presentation::Standard).unwrap();
        let a = classify(&base.direct_sum_pair(&r1, &mid).unwrap()).unwrap();
        let b = classify(&base.direct_sum_pair(&r2, &mid).unwrap()).unwrap();
        assert_eq!(labels_equal(&a, &b), LabelVerdict::Undetermined);
    }

    #[test]
    fn malformed_tuple_rejected() {
        let t = Tuple {
            form: standard_j(0),
            y: Matrix::identity(2),
            v: unit_vector(2, 1),
        };
        assert_eq!(classify(&t).unwrap_err(), Error::NotInAlgebra);
    }
}
