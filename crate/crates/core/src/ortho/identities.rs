use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{binomial, factorial};

/// Both sides of an integer identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Σ_{m ≥ m_{n-1} ≥ ... ≥ m_2 ≥ 0} Π_{k=2}^{n-1} (2m_k+k-1)` against
/// `(n-2)! · binom(m+n-2, n-2)²`.
///
/// The left side is summed by dynamic programming over the outermost index:
/// `g_2(x) = 2x+1`, `g_k(x) = (2x+k-1) Σ_{y ≤ x} g_{k-1}(y)`, and
/// `lhs = Σ_{x ≤ m} g_{n-1}(x)`.
pub fn comb_identity_check(n: usize, m: i64) -> Result<IdentityCheck> {
    if n < 3 || m < 0 {
        return Err(Error::InvalidArgument(format!("need n >= 3 and m >= 0, got n={n}, m={m}")));
    }
    let mut g: Vec<BigInt> = (0..=m).map(|x| BigInt::from(2 * x + 1)).collect();
    for k in 3..n as i64 {
        let mut acc = BigInt::zero();
        g = g
            .iter()
            .enumerate()
            .map(|(x, gx)| {
                acc += gx;
                BigInt::from(2 * x as i64 + k - 1) * &acc
            })
            .collect();
    }
    let lhs = g.into_iter().sum();
    let b = binomial((m + n as i64 - 2) as u64, (n - 2) as u64);
    Ok(IdentityCheck { lhs, rhs: factorial((n - 2) as u64) * &b * &b })
}

/// `Σ_{i=0}^{m} (2i+p+1) binom(i+p, p)²` against `(p+1) binom(m+p+1, p+1)²`.
pub fn identity1_check(m: i64, p: i64) -> Result<IdentityCheck> {
    if m < 0 || p < 0 {
        return Err(Error::InvalidArgument(format!("need m, p >= 0, got m={m}, p={p}")));
    }
    let (m, p) = (m as u64, p as u64);
    let lhs = (0..=m)
        .map(|i| {
            let b = binomial(i + p, p);
            BigInt::from(2 * i + p + 1) * &b * &b
        })
        .sum();
    let b = binomial(m + p + 1, p + 1);
    Ok(IdentityCheck { lhs, rhs: BigInt::from(p + 1) * &b * &b })
}

pub fn comb_identity_json(n: usize, m: i64, c: &IdentityCheck) -> Value {
    json!({"n": n, "m": m, "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string(), "equal": c.equal()})
}

pub fn identity1_json(m: i64, p: i64, c: &IdentityCheck) -> Value {
    json!({"m": m, "p": p, "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string(), "equal": c.equal()})
}
