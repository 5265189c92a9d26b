use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::sparse::{SparseMatrix, SparseVector};
use crate::error::{Error, Result};

/// Diagonal inner product `<x, y>_G = sum_i x_i y_i g_i`, with every `g_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    diag: Vec<Rational>,
}

impl GramForm {
    pub fn new(diag: Vec<Rational>) -> Result<Self> {
        if let Some(i) = diag.iter().position(|g| !g.is_positive()) {
            return Err(Error::InvalidArgument(format!(
                "Gram diagonal entry {i} is not positive: {}",
                diag[i]
            )));
        }
        Ok(Self { diag })
    }

    pub fn identity(n: usize) -> Self {
        Self { diag: vec![Rational::one(); n] }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.diag[i]
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        x.iter()
            .zip(y)
            .zip(&self.diag)
            .fold(Rational::zero(), |acc, ((a, b), g)| acc + a * b * g)
    }

    pub fn inner_sparse(&self, x: &SparseVector, y: &SparseVector) -> Rational {
        x.iter()
            .filter_map(|(i, a)| y.get(i).map(|b| a * b * &self.diag[*i]))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn norm_sq_sparse(&self, x: &SparseVector) -> Rational {
        self.inner_sparse(x, x)
    }

    /// Gram adjoint `A† = G^{-1} A^T G`, i.e. `(A†)_{ij} = A_{ji} g_j / g_i`.
    pub fn adjoint(&self, a: &SparseMatrix) -> Result<SparseMatrix> {
        if a.n_rows() != self.dim() || a.n_cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix against Gram form of dimension {}",
                a.n_rows(),
                a.n_cols(),
                self.dim()
            )));
        }
        SparseMatrix::from_triplets(
            a.n_cols(),
            a.n_rows(),
            a.entries().map(|(r, c, v)| (c, r, v * &self.diag[r] / &self.diag[c])),
        )
    }

    /// True when `G A` is symmetric.
    pub fn is_self_adjoint(&self, a: &SparseMatrix) -> bool {
        a.is_square()
            && a.n_rows() == self.dim()
            && a.entries().all(|(r, c, v)| v * &self.diag[r] == a.get(c, r) * &self.diag[c])
    }
}

/// Gram-orthogonal projection onto the span of `vectors` (dense, each of
/// length `G.dim()`): `P = B (B^T G B)^{-1} B^T G`.
pub fn gram_projection(vectors: &[Vec<Rational>], g: &GramForm) -> Result<SparseMatrix> {
    let sparse: Vec<SparseVector> = vectors
        .iter()
        .map(|v| {
            if v.len() != g.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} against Gram form of dimension {}",
                    v.len(),
                    g.dim()
                )));
            }
            Ok(v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect())
        })
        .collect::<Result<_>>()?;
    gram_projection_sparse(&sparse, g)
}

/// Sparse-input form of [`gram_projection`]. Only the coordinates in the
/// union of supports are touched, so projections onto subspaces living in a
/// small coordinate block stay cheap.
pub fn gram_projection_sparse(vectors: &[SparseVector], g: &GramForm) -> Result<SparseMatrix> {
    let n = g.dim();
    if vectors.is_empty() {
        return Ok(SparseMatrix::zeros(n, n));
    }
    if let Some(bad) = vectors.iter().flat_map(|v| v.keys()).find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange(format!("coordinate {bad} in dimension {n}")));
    }
    let k = vectors.len();
    let support: Vec<usize> = vectors
        .iter()
        .flat_map(|v| v.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // M = B^T G B
    let mut m = vec![vec![Rational::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let v = g.inner_sparse(&vectors[a], &vectors[b]);
            m[b][a] = v.clone();
            m[a][b] = v;
        }
    }
    let m_inv = invert(m).map_err(|rank| Error::RankDeficient { rank, count: k })?;

    // C = B M^{-1}, restricted to the support rows.
    let c: Vec<Vec<Rational>> = support
        .iter()
        .map(|i| {
            (0..k)
                .map(|b| {
                    (0..k).fold(Rational::zero(), |acc, a| match vectors[a].get(i) {
                        Some(x) if !m_inv[a][b].is_zero() => acc + x * &m_inv[a][b],
                        _ => acc,
                    })
                })
                .collect()
        })
        .collect();

    // P_{ij} = sum_b C_{ib} B_{jb} g_j
    let mut triplets = Vec::new();
    for (si, &i) in support.iter().enumerate() {
        for &j in &support {
            let s = (0..k).fold(Rational::zero(), |acc, b| match vectors[b].get(&j) {
                Some(x) if !c[si][b].is_zero() => acc + &c[si][b] * x,
                _ => acc,
            });
            if !s.is_zero() {
                triplets.push((i, j, s * g.get(j)));
            }
        }
    }
    SparseMatrix::from_triplets(n, n, triplets)
}

/// Gauss–Jordan inverse of a square rational matrix; on failure returns the
/// rank.
fn invert(mut a: Vec<Vec<Rational>>) -> std::result::Result<Vec<Vec<Rational>>, usize> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut rank = 0;
    let mut singular = false;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&i| !a[i][c].is_zero()) else {
            singular = true;
            continue;
        };
        a.swap(rank, p);
        inv.swap(rank, p);
        let piv = Rational::one() / &a[rank][c];
        for j in 0..n {
            a[rank][j] *= &piv;
            inv[rank][j] *= &piv;
        }
        for i in 0..n {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let da = &f * &a[rank][j];
                    a[i][j] -= da;
                    let di = &f * &inv[rank][j];
                    inv[i][j] -= di;
                }
            }
        }
        rank += 1;
    }
    if singular {
        Err(rank)
    } else {
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, ratio};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn coordinate_projection() {
        let p = gram_projection(&[ints(&[1, 0])], &GramForm::identity(2)).unwrap();
        assert_eq!(p, SparseMatrix::diagonal(ints(&[1, 0])));
    }

    #[test]
    fn weighted_projection_onto_diagonal_line() {
        // B = (1,1)^T, G = diag(1,3): B^T G B = 4, P = B B^T G / 4 = [[1,3],[1,3]]/4.
        let g = GramForm::new(ints(&[1, 3])).unwrap();
        let p = gram_projection(&[ints(&[1, 1])], &g).unwrap();
        let want = SparseMatrix::from_dense(&[
            vec![ratio(1, 4), ratio(3, 4)],
            vec![ratio(1, 4), ratio(3, 4)],
        ])
        .unwrap();
        assert_eq!(p, want);
        assert_eq!(p.mul(&p).unwrap(), p);
        assert!(g.is_self_adjoint(&p));
    }

    #[test]
    fn full_basis_gives_identity() {
        let g = GramForm::new(ints(&[2, 5, 7])).unwrap();
        let basis = vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])];
        assert_eq!(gram_projection(&basis, &g).unwrap(), SparseMatrix::identity(3));
    }

    #[test]
    fn dependent_input_rejected() {
        let err = gram_projection(&[ints(&[1, 2]), ints(&[2, 4])], &GramForm::identity(2));
        assert_eq!(err, Err(Error::RankDeficient { rank: 1, count: 2 }));
    }

    #[test]
    fn nonpositive_gram_rejected() {
        assert!(GramForm::new(ints(&[1, 0])).is_err());
    }

    #[test]
    fn adjoint_of_weighted_shift() {
        let g = GramForm::new(ints(&[1, 4])).unwrap();
        let a = SparseMatrix::from_triplets(2, 2, [(0, 1, int(1))]).unwrap();
        let adj = g.adjoint(&a).unwrap();
        // <A x, y> = x_1 y_0 g_0 ; <x, A† y> = x_1 (A† y)_1 g_1  =>  A†_{10} = g_0/g_1
        assert_eq!(adj.get(1, 0), ratio(1, 4));
    }

    proptest! {
        #[test]
        fn projection_laws(
            g in proptest::collection::vec(1i64..6, 4),
            raw in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..4),
        ) {
            let g = GramForm::new(ints(&g)).unwrap();
            let vs: Vec<Vec<Rational>> = raw.iter().map(|v| ints(v)).collect();
            match gram_projection(&vs, &g) {
                Ok(p) => {
                    prop_assert_eq!(p.mul(&p).unwrap(), p.clone());
                    prop_assert!(g.is_self_adjoint(&p));
                    for v in &vs {
                        prop_assert_eq!(&p.mul_vec(v).unwrap(), v);
                    }
                }
                Err(Error::RankDeficient { rank, count }) => prop_assert!(rank < count),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
