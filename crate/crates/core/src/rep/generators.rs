//! Gelfand–Tsetlin formulas for `E_{k,k}`, `E_{k,k+1}` and `E_{k+1,k}`, and
//! the remaining root vectors by nested commutators.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::irrep::Irrep;
use crate::error::{Error, Result};
use crate::gt::{GtPattern, PatternShift};
use crate::linalg::{Rational, SparseMatrix};

/// `π_λ(E_{p,q})` on the pattern basis of an irrep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub p: usize,
    pub q: usize,
    pub matrix: SparseMatrix,
}

impl GeneratorMatrix {
    pub fn to_json(&self, rep: &Irrep) -> Value {
        json!({
            "lambda": rep.hw().entries(),
            "p": self.p,
            "q": self.q,
            "matrix": self.matrix.to_json(),
        })
    }
}

/// All `n²` generator matrices of one irrep, plus transposes for column
/// access.
#[derive(Debug, Clone)]
pub struct Generators {
    n: usize,
    /// `e[p-1][q-1] = π(E_{p,q})`
    e: Vec<Vec<SparseMatrix>>,
    et: Vec<Vec<SparseMatrix>>,
}

impl Generators {
    pub(crate) fn build(rep: &Irrep) -> Self {
        let n = rep.n();
        let mut e: Vec<Vec<Option<SparseMatrix>>> = vec![vec![None; n]; n];
        for k in 1..=n {
            e[k - 1][k - 1] = Some(weight_matrix(rep, k));
        }
        for k in 1..n {
            e[k - 1][k] = Some(raise_matrix(rep, k));
            e[k][k - 1] = Some(lower_matrix(rep, k));
        }
        // E_{p,q} = [E_{p,r}, E_{r,q}] with r = p ± 1 stepping toward q; fill
        // by increasing distance so both factors already exist.
        for dist in 2..n {
            for p in 1..=n {
                for q in [p + dist, p.wrapping_sub(dist)] {
                    if q == 0 || q > n {
                        continue;
                    }
                    let r = if q > p { p + 1 } else { p - 1 };
                    let a = e[p - 1][r - 1].as_ref().expect("adjacent generator");
                    let b = e[r - 1][q - 1].as_ref().expect("shorter generator");
                    e[p - 1][q - 1] = Some(a.commutator(b).expect("square matrices"));
                }
            }
        }
        let e: Vec<Vec<SparseMatrix>> = e
            .into_iter()
            .map(|row| row.into_iter().map(|m| m.expect("all generators built")).collect())
            .collect();
        let et = e.iter().map(|row| row.iter().map(SparseMatrix::transpose).collect()).collect();
        Self { n, e, et }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self, p: usize, q: usize) -> &SparseMatrix {
        &self.e[p - 1][q - 1]
    }

    /// Transpose of `E_{p,q}`: row `c` lists column `c` of `E_{p,q}`.
    pub fn e_transposed(&self, p: usize, q: usize) -> &SparseMatrix {
        &self.et[p - 1][q - 1]
    }

    /// Adds `delta` to one stored entry of `E_{p,q}`. Only for negative
    /// controls: the result is no longer a representation.
    pub fn perturb(&mut self, p: usize, q: usize, row: usize, col: usize, delta: &Rational) -> Result<()> {
        let m = &mut self.e[p - 1][q - 1];
        let v = m.get(row, col) + delta;
        m.set(row, col, v)?;
        self.et[p - 1][q - 1] = m.transpose();
        Ok(())
    }
}

fn weight_matrix(rep: &Irrep, k: usize) -> SparseMatrix {
    let diag = rep
        .patterns()
        .iter()
        .map(|p| Rational::from_integer(BigInt::from(p.row_sum(k) - p.row_sum(k - 1))))
        .collect();
    SparseMatrix::diagonal(diag)
}

/// Coefficient of `ξ_{Λ+δ_{k,i}}` in `E_{k,k+1} ξ_Λ`:
/// `-Π_j (l_{k,i} - l_{k+1,j}) / Π_{j≠i} (l_{k,i} - l_{k,j})`.
fn raise_coefficient(p: &GtPattern, k: usize, i: usize) -> Rational {
    let lki = p.l(k, i);
    let num: i128 = (1..=k + 1).map(|j| (lki - p.l(k + 1, j)) as i128).product();
    Rational::new(BigInt::from(-num), BigInt::from(same_row_denominator(p, k, i)))
}

/// Coefficient of `ξ_{Λ-δ_{k,i}}` in `E_{k+1,k} ξ_Λ`:
/// `Π_{j<k} (l_{k,i} - l_{k-1,j}) / Π_{j≠i} (l_{k,i} - l_{k,j})`.
fn lower_coefficient(p: &GtPattern, k: usize, i: usize) -> Rational {
    let lki = p.l(k, i);
    let num: i128 = (1..k).map(|j| (lki - p.l(k - 1, j)) as i128).product();
    Rational::new(BigInt::from(num), BigInt::from(same_row_denominator(p, k, i)))
}

/// `Π_{j≠i} (l_{k,i} - l_{k,j})`; the `j = i` factor is omitted, and the
/// others are nonzero because the `l_{k,j}` are strictly decreasing.
fn same_row_denominator(p: &GtPattern, k: usize, i: usize) -> i128 {
    let lki = p.l(k, i);
    let d: i128 = (1..=k).filter(|&j| j != i).map(|j| (lki - p.l(k, j)) as i128).product();
    debug_assert!(d != 0);
    d
}

fn raise_matrix(rep: &Irrep, k: usize) -> SparseMatrix {
    shift_matrix(rep, k, 1, raise_coefficient)
}

fn lower_matrix(rep: &Irrep, k: usize) -> SparseMatrix {
    shift_matrix(rep, k, -1, lower_coefficient)
}

fn shift_matrix(
    rep: &Irrep,
    k: usize,
    sign: i8,
    coeff: fn(&GtPattern, usize, usize) -> Rational,
) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (col, p) in rep.patterns().iter().enumerate() {
        for i in 1..=k {
            let d = PatternShift::new(k, i, sign).expect("1 <= i <= k");
            if let Some(target) = p.shift(d) {
                let c = coeff(p, k, i);
                if !c.is_zero() {
                    let row = rep.index_of(&target).expect("shifted pattern belongs to the irrep");
                    triplets.push((row, col, c));
                }
            }
        }
    }
    SparseMatrix::from_triplets(rep.dim(), rep.dim(), triplets).expect("indices in range")
}

fn check_index(rep: &Irrep, idx: usize, upper: usize, what: &str) -> Result<()> {
    if idx == 0 || idx > upper {
        return Err(Error::IndexOutOfRange(format!(
            "{what} index {idx} outside 1..={upper} for n = {}",
            rep.n()
        )));
    }
    Ok(())
}

/// `π_λ(E_{k,k})`: diagonal with entry `s_k - s_{k-1}`.
pub fn matrix_ekk(rep: &Irrep, k: usize) -> Result<GeneratorMatrix> {
    check_index(rep, k, rep.n(), "k")?;
    Ok(GeneratorMatrix { p: k, q: k, matrix: rep.e(k, k).clone() })
}

/// `π_λ(E_{k,k+1})`.
pub fn matrix_raise(rep: &Irrep, k: usize) -> Result<GeneratorMatrix> {
    check_index(rep, k, rep.n() - 1, "k")?;
    Ok(GeneratorMatrix { p: k, q: k + 1, matrix: rep.e(k, k + 1).clone() })
}

/// `π_λ(E_{k+1,k})`.
pub fn matrix_lower(rep: &Irrep, k: usize) -> Result<GeneratorMatrix> {
    check_index(rep, k, rep.n() - 1, "k")?;
    Ok(GeneratorMatrix { p: k + 1, q: k, matrix: rep.e(k + 1, k).clone() })
}

/// `π_λ(E_{p,q})` for `p ≠ q`.
pub fn matrix_epq(rep: &Irrep, p: usize, q: usize) -> Result<GeneratorMatrix> {
    check_index(rep, p, rep.n(), "p")?;
    check_index(rep, q, rep.n(), "q")?;
    if p == q {
        return Err(Error::InvalidArgument(format!("E_({p},{q}) is diagonal; use matrix_ekk")));
    }
    Ok(GeneratorMatrix { p, q, matrix: rep.e(p, q).clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::HighestWeight;
    use crate::linalg::int;

    fn irrep(v: &[i64]) -> Irrep {
        Irrep::new(&HighestWeight::new(v.to_vec()).unwrap())
    }

    fn pat(rows: &[&[i64]]) -> GtPattern {
        GtPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn su2_defining_rep() {
        let rep = irrep(&[1, 0]);
        let hi = rep.index_of(&pat(&[&[1, 0], &[1]])).unwrap();
        let lo = rep.index_of(&pat(&[&[1, 0], &[0]])).unwrap();
        let e12 = matrix_raise(&rep, 1).unwrap().matrix;
        let e21 = matrix_lower(&rep, 1).unwrap().matrix;
        assert_eq!(e12.get(hi, lo), int(1));
        assert_eq!(e12.nnz(), 1);
        assert_eq!(e21.get(lo, hi), int(1));
        assert_eq!(e21.nnz(), 1);
    }

    #[test]
    fn weight_operator_entries() {
        let rep = irrep(&[1, 0, -1]);
        let i = rep.index_of(&pat(&[&[1, 0, -1], &[1, 0], &[1]])).unwrap();
        let got: Vec<Rational> = (1..=3).map(|k| matrix_ekk(&rep, k).unwrap().matrix.get(i, i)).collect();
        assert_eq!(got, vec![int(1), int(0), int(-1)]);
        // telescoping: sum_k E_kk = s_n everywhere
        let total = (1..=3).fold(SparseMatrix::zeros(8, 8), |acc, k| acc.add(rep.e(k, k)).unwrap());
        assert_eq!(total, SparseMatrix::zeros(8, 8));
    }

    #[test]
    fn highest_and_lowest_vectors_are_annihilated() {
        for hw in [vec![2, 1, 0], vec![1, 0, -1], vec![2, 1, 1, 0]] {
            let rep = irrep(&hw);
            let n = rep.n();
            for k in 1..n {
                assert!(rep.e(k, k + 1).column(0).is_empty(), "raise on highest, {hw:?}");
                assert!(rep.e(k + 1, k).column(rep.dim() - 1).is_empty(), "lower on lowest, {hw:?}");
            }
        }
    }

    #[test]
    fn gl2_relation_inside_gl3() {
        let rep = irrep(&[1, 0, -1]);
        let c = rep.e(1, 2).commutator(rep.e(2, 1)).unwrap();
        assert_eq!(c, rep.e(1, 1).sub(rep.e(2, 2)).unwrap());
    }

    #[test]
    fn nested_commutator_route() {
        let rep = irrep(&[2, 1, 0]);
        assert_eq!(rep.e(1, 3), &rep.e(1, 2).commutator(rep.e(2, 3)).unwrap());
        assert_eq!(rep.e(3, 1), &rep.e(3, 2).commutator(rep.e(2, 1)).unwrap());
        let c = rep.e(1, 3).commutator(rep.e(3, 1)).unwrap();
        assert_eq!(c, rep.e(1, 1).sub(rep.e(3, 3)).unwrap());
    }

    #[test]
    fn standard_rep_matrix_units() {
        // λ = (1,0,0): patterns ordered by weight e_1, e_2, e_3. Basis vectors
        // are not unit length, so the matrix unit shows up after rescaling by
        // ‖ξ_row‖/‖ξ_col‖.
        let rep = irrep(&[1, 0, 0]);
        let idx_of_weight = |j: usize| (0..3).find(|&i| rep.weight(i).0[j - 1] == 1).unwrap();
        for p in 1..=3 {
            for q in 1..=3 {
                if p == q {
                    continue;
                }
                let m = matrix_epq(&rep, p, q).unwrap().matrix;
                assert_eq!(m.nnz(), 1, "E_({p},{q})");
                let (r, c) = (idx_of_weight(p), idx_of_weight(q));
                let v = m.get(r, c);
                assert_eq!(&v * &v * rep.gram().get(r) / rep.gram().get(c), int(1), "E_({p},{q})");
            }
        }
    }

    #[test]
    fn index_validation() {
        let rep = irrep(&[1, 0, 0]);
        assert!(matrix_ekk(&rep, 0).is_err());
        assert!(matrix_ekk(&rep, 4).is_err());
        assert!(matrix_raise(&rep, 3).is_err());
        assert!(matrix_lower(&rep, 0).is_err());
        assert!(matrix_epq(&rep, 2, 2).is_err());
        assert!(matrix_epq(&rep, 1, 4).is_err());
    }

    #[test]
    fn json_export_is_tagged() {
        let rep = irrep(&[1, 0]);
        let v = matrix_raise(&rep, 1).unwrap().to_json(&rep);
        assert_eq!(v["lambda"], serde_json::json!([1, 0]));
        assert_eq!((v["p"].as_u64(), v["q"].as_u64()), (Some(1), Some(2)));
        assert_eq!(v["matrix"]["entries"], serde_json::json!([[0, 1, "1"]]));
    }
}
