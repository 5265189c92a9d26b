use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gram::GramForm;
use super::kernel::rank;
use super::rational::{rational_to_f64, Rational};
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

const REL_TOL: f64 = 1e-12;
const MAX_ITERS: usize = 200_000;
const SEED: u64 = 0x6774_6b69_74;

/// Largest eigenvalue of a Gram-self-adjoint positive semidefinite matrix:
/// exact rational bounds plus a floating power-iteration estimate inside them.
#[derive(Debug, Clone, PartialEq)]
pub struct NormBracket {
    pub estimate: f64,
    /// `trace / rank`, the mean nonzero eigenvalue.
    pub lower: Rational,
    /// `trace`, the sum of all eigenvalues.
    pub upper: Rational,
}

impl NormBracket {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Brackets `lambda_max(A)` for `A` Gram-self-adjoint and PSD (for example
/// `p_s p_t p_s` with isotypic projections).
pub fn norm_bracket(a: &SparseMatrix, g: &GramForm) -> Result<NormBracket> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.n_rows(), cols: a.n_cols() });
    }
    if a.n_rows() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against Gram form of dimension {}",
            a.n_rows(),
            a.n_cols(),
            g.dim()
        )));
    }
    let trace = a.trace()?;
    let r = rank(a);
    let lower = if r == 0 { Rational::zero() } else { &trace / Rational::from(num_bigint::BigInt::from(r)) };
    let raw = power_iteration(a, g);
    let (lo, hi) = (rational_to_f64(&lower), rational_to_f64(&trace));
    let estimate = if lower == trace { lo } else { raw.clamp(lo, hi) };
    Ok(NormBracket { estimate, lower, upper: trace })
}

/// Power iteration on the symmetrised matrix `G^{1/2} A G^{-1/2}`, whose
/// entries `A_ij sqrt(g_i / g_j)` stay in `f64` range even when the Gram
/// entries themselves do not.
fn power_iteration(a: &SparseMatrix, g: &GramForm) -> f64 {
    let n = a.n_rows();
    if n == 0 || a.is_zero() {
        return 0.0;
    }
    let sym: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|(j, v)| {
                    let w = rational_to_f64(&(g.get(i) / g.get(*j))).sqrt();
                    (*j, rational_to_f64(v) * w)
                })
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..1.5)).collect();
    normalize(&mut x);
    let mut lambda = 0.0;
    for it in 0..MAX_ITERS {
        let y: Vec<f64> = sym
            .iter()
            .map(|row| row.iter().map(|(j, v)| v * x[*j]).sum())
            .collect();
        let next: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        x = y.into_iter().map(|v| v / norm).collect();
        if it > 2 && (next - lambda).abs() <= REL_TOL * next.abs() {
            return next;
        }
        lambda = next;
    }
    lambda
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in x.iter_mut() {
        *v /= norm;
    }
}
