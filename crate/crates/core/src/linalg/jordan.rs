//! Jordan–Chevalley splitting and Jordan chains of nilpotent maps.

use super::matrix::Matrix;
use super::poly::{charpoly, squarefree_factorization, squarefree_part, Polynomial};
use super::reduce::{inverse, kernel_basis, rank};
use super::scalar::Vector;
use crate::error::{Error, Result};

/// Splits `M = S + N` with `S` semisimple, `N` nilpotent and `SN = NS`.
///
/// Newton's iteration `S ← S − g(S) g′(S)⁻¹` on the squarefree part `g` of
/// the characteristic polynomial, starting from `S = M`. Every iterate is a
/// polynomial in `M`; convergence takes at most ⌈log₂ dim⌉ + 1 steps.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix)> {
    let n = m.require_square()?;
    let g = squarefree_part(&charpoly(m)?)?;
    let dg = g.derivative();
    let mut s = m.clone();
    let bound = usize::BITS - n.leading_zeros() + 1;
    for _ in 0..=bound {
        let gs = g.eval_matrix(&s);
        if gs.is_zero() {
            let nil = m - &s;
            return Ok((s, nil));
        }
        let step = &gs * &inverse(&dg.eval_matrix(&s))?;
        s = &s - &step;
    }
    Err(Error::Internal(
        "Jordan–Chevalley iteration did not converge".into(),
    ))
}

/// Least `k` with `N^k = 0`, or `None` when `N` is not nilpotent.
pub fn nilpotency_index(n: &Matrix) -> Result<Option<usize>> {
    let dim = n.require_square()?;
    let mut power = Matrix::identity(dim);
    for k in 0..=dim {
        if power.is_zero() {
            return Ok(Some(k));
        }
        power = &power * n;
    }
    Ok(None)
}

pub fn is_nilpotent(n: &Matrix) -> Result<bool> {
    Ok(nilpotency_index(n)?.is_some())
}

/// Height of a nilpotent map: the least `k` with `N^{k+1} = 0`. The zero map
/// on a nonzero space has height 0, as does the 0x0 map.
pub fn height(n: &Matrix) -> Result<usize> {
    nilpotency_index(n)?
        .map(|k| k.saturating_sub(1))
        .ok_or(Error::NotNilpotent)
}

/// A Jordan chain `z, Nz, …, N^k z` with `N^{k+1} z = 0`.
pub type Chain = Vec<Vector>;

/// Jordan chains whose union is a basis. Chains are returned longest first;
/// within one length, tops are taken from `ker N^j` basis vectors in index
/// order, keeping the first that are independent of what is already chosen.
pub fn nilpotent_chains(n: &Matrix) -> Result<Vec<Chain>> {
    let dim = n.require_square()?;
    let index = nilpotency_index(n)?.ok_or(Error::NotNilpotent)?;
    // kernels[j] = basis of ker N^j
    let mut kernels: Vec<Vec<Vector>> = Vec::with_capacity(index + 1);
    let mut power = Matrix::identity(dim);
    for _ in 0..=index {
        kernels.push(kernel_basis(&power));
        power = &power * n;
    }
    let mut chains: Vec<Chain> = Vec::new();
    for j in (1..=index).rev() {
        // Span to be independent of: ker N^{j-1} plus members of longer
        // chains that already lie in ker N^j.
        let mut span: Vec<Vector> = kernels[j - 1].clone();
        for chain in &chains {
            span.push(chain[chain.len() - j].clone());
        }
        let mut current_rank = rank_of(&span, dim);
        let mut tops = Vec::new();
        for candidate in &kernels[j] {
            span.push(candidate.clone());
            let r = rank_of(&span, dim);
            if r > current_rank {
                current_rank = r;
                tops.push(candidate.clone());
            } else {
                span.pop();
            }
        }
        for top in tops {
            let mut chain = vec![top];
            for _ in 1..j {
                let next = n.mul_vec(chain.last().unwrap())?;
                chain.push(next);
            }
            chains.push(chain);
        }
    }
    Ok(chains)
}

fn rank_of(vectors: &[Vector], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = Matrix::from_columns(vectors).expect("vectors of equal length");
    debug_assert_eq!(m.rows(), dim);
    rank(&m)
}

/// Jordan block sizes of a nilpotent map from the rank sequence of its
/// powers, in decreasing order.
pub fn nilpotent_jordan_type(n: &Matrix) -> Result<Vec<usize>> {
    let dim = n.require_square()?;
    let index = nilpotency_index(n)?.ok_or(Error::NotNilpotent)?;
    let ranks: Vec<usize> = (0..=index + 1).map(|k| rank(&n.pow(k))).collect();
    let mut sizes = Vec::new();
    for k in (1..=index).rev() {
        // blocks of size exactly k
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_next = ranks[k] - ranks[k + 1];
        sizes.extend(std::iter::repeat_n(k, at_least_k - at_least_next));
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), dim);
    Ok(sizes)
}

/// Similarity data attached to one squarefree factor `g` of the
/// characteristic polynomial: `nullities[k-1] = dim ker g(M)^k` for
/// `k = 1..=multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorJordanData {
    pub factor: Polynomial,
    pub multiplicity: usize,
    pub nullities: Vec<usize>,
}

impl FactorJordanData {
    /// Jordan block sizes per root, when the nullities divide evenly by the
    /// factor degree (always the case for an irreducible factor).
    pub fn block_sizes(&self) -> Option<Vec<usize>> {
        let deg = self.factor.degree()?;
        let mut per_root = Vec::with_capacity(self.nullities.len() + 1);
        per_root.push(0);
        for &k in &self.nullities {
            if k % deg != 0 {
                return None;
            }
            per_root.push(k / deg);
        }
        let m = self.nullities.len();
        let mut sizes = Vec::new();
        for k in (1..=m).rev() {
            let ge_k = per_root[k] - per_root[k - 1];
            let ge_next = if k < m {
                per_root[k + 1] - per_root[k]
            } else {
                0
            };
            sizes.extend(std::iter::repeat_n(k, ge_k - ge_next));
        }
        Some(sizes)
    }
}

/// Jordan data per squarefree factor of `charpoly(M)`, ordered by
/// multiplicity. Equal summaries are necessary for similarity.
pub fn jordan_summary(m: &Matrix) -> Result<Vec<FactorJordanData>> {
    let n = m.require_square()?;
    let cp = charpoly(m)?;
    let mut out = Vec::new();
    for (factor, multiplicity) in squarefree_factorization(&cp)? {
        let g = factor.eval_matrix(m);
        let mut power = Matrix::identity(n);
        let nullities = (0..multiplicity)
            .map(|_| {
                power = &power * &g;
                n - rank(&power)
            })
            .collect();
        out.push(FactorJordanData {
            factor,
            multiplicity,
            nullities,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::poly::minimal_polynomial;
    use crate::linalg::scalar::int;

    fn check_split(m: &Matrix) {
        let (s, n) = jordan_chevalley(m).unwrap();
        assert_eq!(&s + &n, *m);
        assert_eq!(&s * &n, &n * &s);
        assert!(is_nilpotent(&n).unwrap());
        let mp = minimal_polynomial(&s).unwrap();
        assert_eq!(squarefree_part(&mp).unwrap(), mp);
    }

    #[test]
    fn jordan_chevalley_examples() {
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(n, Matrix::from_i64(&[&[0, 1], &[0, 0]]));

        let d = Matrix::diagonal(&[int(3), int(-1), int(3)]);
        let (s, n) = jordan_chevalley(&d).unwrap();
        assert_eq!(s, d);
        assert!(n.is_zero());

        let m = Matrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, Matrix::diagonal(&[int(2), int(2), int(3)]));
        assert_eq!(n, Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]));

        assert_eq!(
            jordan_chevalley(&Matrix::zeros(0, 0)).unwrap(),
            (Matrix::zeros(0, 0), Matrix::zeros(0, 0))
        );
    }

    #[test]
    fn jordan_chevalley_non_diagonalizable_over_q() {
        // companion matrix of (x^2 + 1)^2: semisimple part is not rational-diagonal
        let m = Matrix::from_i64(&[
            &[0, 0, 0, -1],
            &[1, 0, 0, 0],
            &[0, 1, 0, -2],
            &[0, 0, 1, 0],
        ]);
        check_split(&m);
        let (_, n) = jordan_chevalley(&m).unwrap();
        assert!(!n.is_zero());
    }

    #[test]
    fn chains_examples() {
        let chains = nilpotent_chains(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(chains.len(), 3);
        assert!(chains.iter().all(|c| c.len() == 1));

        let block = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let chains = nilpotent_chains(&block).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].len(), 3);

        let two_one = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let lens: Vec<usize> = nilpotent_chains(&two_one)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(lens, vec![2, 1]);

        assert_eq!(
            nilpotent_chains(&Matrix::identity(2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn chains_span_and_close_up() {
        // N = J_3 ⊕ J_2 ⊕ J_2, conjugated by a unipotent matrix
        let mut j = Matrix::zeros(7, 7);
        for &(a, b) in &[(0, 1), (1, 2), (3, 4), (5, 6)] {
            j[(a, b)] = int(1);
        }
        let p = Matrix::from_fn(7, 7, |i, k| {
            if i == k {
                int(1)
            } else if k > i {
                int(((i + 2 * k) % 3) as i64 - 1)
            } else {
                int(0)
            }
        });
        let n = &(&p * &j) * &inverse(&p).unwrap();
        let chains = nilpotent_chains(&n).unwrap();
        let lens: Vec<usize> = chains.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![3, 2, 2]);
        assert_eq!(nilpotent_jordan_type(&n).unwrap(), lens);
        let all: Vec<Vector> = chains.iter().flatten().cloned().collect();
        assert_eq!(rank(&Matrix::from_columns(&all).unwrap()), 7);
        for chain in &chains {
            for w in chain.windows(2) {
                assert_eq!(n.mul_vec(&w[0]).unwrap(), w[1]);
            }
            assert!(n
                .mul_vec(chain.last().unwrap())
                .unwrap()
                .iter()
                .all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn heights() {
        assert_eq!(height(&Matrix::zeros(2, 2)).unwrap(), 0);
        let block = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(height(&block).unwrap(), 2);
        assert_eq!(height(&Matrix::identity(1)), Err(Error::NotNilpotent));
    }

    #[test]
    fn summary_reports_blocks() {
        // eigenvalue 2 with blocks [2,1], eigenvalue 0 with block [1]
        let m = Matrix::from_i64(&[
            &[2, 1, 0, 0],
            &[0, 2, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, 0],
        ]);
        let summary = jordan_summary(&m).unwrap();
        assert_eq!(summary.len(), 2);
        assert_eq!(summary[0].factor, Polynomial::from_i64(&[0, 1]));
        assert_eq!(summary[0].block_sizes(), Some(vec![1]));
        assert_eq!(summary[1].factor, Polynomial::linear(int(2)));
        assert_eq!(summary[1].nullities, vec![2, 3, 3]);
        assert_eq!(summary[1].block_sizes(), Some(vec![2, 1]));
    }
}
