//! Kernels and ranks by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::sparse::{SparseMatrix, SparseVector};

/// Integer row-echelon form of a dense block, produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Scales each rational row by the lcm of its denominators.
fn integer_rows(dense: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
    dense
        .into_iter()
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.into_iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination. At each column the pivot is the
/// candidate entry with the fewest bits, which keeps intermediate minors
/// small. Every division is exact (Sylvester's identity).
fn bareiss(mut a: Vec<Vec<BigInt>>, n_cols: usize) -> Echelon {
    let n_rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits())
        else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..n_cols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Kernel of an echelon block: one vector per free column `f`, with `x_f = 1`
/// and all other free coordinates zero.
fn echelon_kernel(e: &Echelon, n_cols: usize) -> Vec<(usize, Vec<Rational>)> {
    let is_pivot = {
        let mut v = vec![false; n_cols];
        for &p in &e.pivots {
            v[p] = true;
        }
        v
    };
    (0..n_cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![Rational::zero(); n_cols];
            x[f] = Rational::one();
            for (i, &p) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[i];
                let s = (p + 1..n_cols)
                    .filter(|&j| !row[j].is_zero() && !x[j].is_zero())
                    .fold(Rational::zero(), |acc, j| acc + &x[j] * Rational::from_integer(row[j].clone()));
                x[p] = -s / Rational::from_integer(row[p].clone());
            }
            (f, x)
        })
        .collect()
}

fn normalize_sign(v: &mut [Rational]) {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -x.clone();
        }
    }
}

/// Basis of `{v : Mv = 0}`, one vector per non-pivot column in increasing
/// column order, each scaled so its first nonzero entry is positive.
///
/// The matrix is split into connected blocks first, so block-diagonal inputs
/// (operators that preserve weight spaces) cost only as much as their blocks.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let n_cols = m.n_cols();
    let mut keyed: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut touched = vec![false; n_cols];
    for (rows, cols) in m.components() {
        for &c in &cols {
            touched[c] = true;
        }
        let local = dense_block(m, &rows, &cols);
        let e = bareiss(integer_rows(local), cols.len());
        for (f, x) in echelon_kernel(&e, cols.len()) {
            let mut v = vec![Rational::zero(); n_cols];
            for (j, val) in x.into_iter().enumerate() {
                v[cols[j]] = val;
            }
            keyed.push((cols[f], v));
        }
    }
    for (c, _) in touched.iter().enumerate().filter(|(_, t)| !**t) {
        let mut v = vec![Rational::zero(); n_cols];
        v[c] = Rational::one();
        keyed.push((c, v));
    }
    keyed.sort_by_key(|(c, _)| *c);
    keyed
        .into_iter()
        .map(|(_, mut v)| {
            normalize_sign(&mut v);
            v
        })
        .collect()
}

/// Exact rank, block by block.
pub fn rank(m: &SparseMatrix) -> usize {
    m.components()
        .into_iter()
        .map(|(rows, cols)| {
            let local = dense_block(m, &rows, &cols);
            bareiss(integer_rows(local), cols.len()).pivots.len()
        })
        .sum()
}

fn dense_block(m: &SparseMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<Rational>> {
    let col_pos = |c: usize| cols.binary_search(&c).expect("column belongs to component");
    rows.iter()
        .map(|&r| {
            let mut row = vec![Rational::zero(); cols.len()];
            for (c, v) in m.row(r) {
                row[col_pos(*c)] = v.clone();
            }
            row
        })
        .collect()
}

/// Incrementally built reduced echelon basis of a subspace, over sparse
/// rational vectors. Used to grow invariant subspaces one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    /// `(pivot, vector)` with `vector[pivot] == 1` and no other basis vector
    /// having a nonzero entry at `pivot`.
    rows: Vec<(usize, SparseVector)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        let mut v = v.clone();
        for (p, b) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-c, b);
            }
        }
        v
    }

    /// Inserts `v` if it is independent; returns whether the span grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce(v);
        let Some((&p, c)) = r.iter().next() else {
            return false;
        };
        let inv = Rational::one() / c;
        let r: SparseVector = r.iter().map(|(k, x)| (*k, x * &inv)).collect();
        for (_, b) in self.rows.iter_mut() {
            if let Some(c) = b.get(&p).cloned() {
                axpy(b, &-c, &r);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVector> {
        self.rows.iter().map(|(_, v)| v)
    }
}

/// `y += a * x`, dropping cancelled entries.
fn axpy(y: &mut SparseVector, a: &Rational, x: &SparseVector) {
    for (k, xv) in x {
        let entry = y.entry(*k).or_insert_with(Rational::zero);
        *entry += a * xv;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, ratio};
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let d: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        SparseMatrix::from_dense(&d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn zero_map_has_full_kernel() {
        assert_eq!(kernel_basis(&SparseMatrix::zeros(2, 2)), vec![ints(&[1, 0]), ints(&[0, 1])]);
    }

    #[test]
    fn equal_rows() {
        assert_eq!(kernel_basis(&dense(&[&[1, 1], &[1, 1]])), vec![ints(&[1, -1])]);
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(kernel_basis(&dense(&[&[1, 2], &[2, 4], &[3, 6]])), vec![ints(&[2, -1])]);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(kernel_basis(&SparseMatrix::zeros(0, 3)).len(), 3);
        assert_eq!(rank(&SparseMatrix::zeros(0, 3)), 0);
    }

    #[test]
    fn rational_entries() {
        let m = SparseMatrix::from_dense(&[vec![ratio(1, 2), ratio(1, 3)]]).unwrap();
        // x_2 = 1 is the free coordinate, so x_1 = -2/3; sign flipped to lead positive.
        assert_eq!(kernel_basis(&m), vec![vec![ratio(2, 3), int(-1)]]);
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut b = EchelonBasis::new();
        let v1: SparseVector = [(0, int(1)), (1, int(2))].into_iter().collect();
        let v2: SparseVector = [(0, int(2)), (1, int(4))].into_iter().collect();
        let v3: SparseVector = [(1, int(1))].into_iter().collect();
        assert!(b.insert(&v1));
        assert!(!b.insert(&v2));
        assert!(b.insert(&v3));
        assert_eq!(b.len(), 2);
        assert!(b.reduce(&[(0, int(5))].into_iter().collect()).is_empty());
    }

    /// Plain rational Gauss–Jordan rank: an independent route for rank–nullity.
    fn oracle_rank(m: &SparseMatrix) -> usize {
        let mut a = m.to_dense();
        let (rows, cols) = (a.len(), m.n_cols());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    for j in 0..cols {
                        let d = &f * &a[r][j];
                        a[i][j] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(
            entries in proptest::collection::vec((0usize..5, 0usize..6, -4i64..5, 1i64..4), 0..20)
        ) {
            let m = SparseMatrix::from_triplets(5, 6, entries.into_iter().map(|(r, c, n, d)| (r, c, ratio(n, d)))).unwrap();
            let ker = kernel_basis(&m);
            for v in &ker {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            }
            let r = oracle_rank(&m);
            prop_assert_eq!(ker.len(), 6 - r);
            prop_assert_eq!(rank(&m), r);
            // independence: kernel vectors as columns have full column rank
            let cols: Vec<SparseVector> = ker.iter().map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()).collect();
            prop_assert_eq!(oracle_rank(&SparseMatrix::from_columns(6, &cols).unwrap()), ker.len());
        }
    }
}
