use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::weight::{HighestWeight, WeightVector};
use crate::error::{Error, Result};
use crate::linalg::{FactorialTable, Rational};

/// Gelfand–Tsetlin pattern: rows `λ_{k,1..k}` for `k = n..1`, stored flat with
/// the top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern {
    n: usize,
    entries: Vec<i64>,
}

/// Offset of row `k` (1-based) in the flat top-first layout.
fn row_offset(n: usize, k: usize) -> usize {
    (n * (n + 1) - k * (k + 1)) / 2
}

impl GtPattern {
    /// Builds a pattern from rows given top first (`rows[0]` has length `n`).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty pattern".into()));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != n - idx {
                return Err(Error::InvalidArgument(format!(
                    "row {} has length {}, expected {}",
                    n - idx,
                    row.len(),
                    n - idx
                )));
            }
        }
        let p = Self { n, entries: rows.into_iter().flatten().collect() };
        if !p.is_admissible() {
            return Err(Error::Inadmissible(p.to_string()));
        }
        Ok(p)
    }

    pub(crate) fn from_flat_unchecked(n: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), n * (n + 1) / 2);
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row `k`, `1 <= k <= n`.
    pub fn row(&self, k: usize) -> &[i64] {
        let o = row_offset(self.n, k);
        &self.entries[o..o + k]
    }

    /// `λ_{k,i}`, both indices 1-based.
    pub fn entry(&self, k: usize, i: usize) -> i64 {
        self.row(k)[i - 1]
    }

    /// `l_{k,i} = λ_{k,i} - i + 1`.
    pub fn l(&self, k: usize, i: usize) -> i64 {
        self.entry(k, i) - i as i64 + 1
    }

    /// `s_k`, with `s_0 = 0`.
    pub fn row_sum(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.row(k).iter().sum()
        }
    }

    pub fn top(&self) -> HighestWeight {
        HighestWeight::new(self.row(self.n).to_vec()).expect("top row of an admissible pattern is dominant")
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n).rev().map(|k| self.row(k).to_vec()).collect()
    }

    pub fn flat(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_admissible(&self) -> bool {
        (1..self.n).all(|k| {
            let (up, lo) = (self.row(k + 1), self.row(k));
            (0..k).all(|i| up[i] >= lo[i] && lo[i] >= up[i + 1])
        })
    }

    /// Weight `(s_1 - s_0, ..., s_n - s_{n-1})`.
    pub fn weight(&self) -> WeightVector {
        WeightVector((1..=self.n).map(|k| self.row_sum(k) - self.row_sum(k - 1)).collect())
    }

    /// `Λ ± δ_{k,i}`, or `None` when the result is not admissible (the
    /// convention `ξ_Λ = 0`) or the shift does not address a lower row.
    pub fn shift(&self, d: PatternShift) -> Option<GtPattern> {
        if d.k >= self.n {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[row_offset(self.n, d.k) + d.i - 1] += d.sign as i64;
        let p = Self { n: self.n, entries };
        p.is_admissible().then_some(p)
    }

    /// Canonical order: lexicographic on the rows top-first, larger first, so
    /// the highest-weight pattern comes first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.entries.cmp(&self.entries)
    }

    /// Exact `‖ξ_Λ‖²`.
    pub fn norm_sq(&self) -> Rational {
        self.norm_sq_with(&FactorialTable::up_to(self.factorial_bound()))
    }

    /// Largest factorial argument [`Self::norm_sq_with`] can request.
    pub fn factorial_bound(&self) -> usize {
        let top = self.row(self.n);
        (top[0] - top[self.n - 1]) as usize + self.n
    }

    /// `‖ξ_Λ‖² = Π_{k=2}^n Π_{1<=i<=j<k} (l_{k,i}-l_{k-1,j})!/(l_{k-1,i}-l_{k-1,j})!
    ///          · Π_{1<=i<j<=k} (l_{k,i}-l_{k,j}-1)!/(l_{k-1,i}-l_{k,j}-1)!`.
    pub fn norm_sq_with(&self, f: &FactorialTable) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 2..=self.n {
            for i in 1..k {
                for j in i..k {
                    num *= f.get(self.l(k, i) - self.l(k - 1, j));
                    den *= f.get(self.l(k - 1, i) - self.l(k - 1, j));
                }
            }
            for i in 1..k {
                for j in i + 1..=k {
                    num *= f.get(self.l(k, i) - self.l(k, j) - 1);
                    den *= f.get(self.l(k - 1, i) - self.l(k, j) - 1);
                }
            }
        }
        Rational::new(num, den)
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows()).expect("serializable"))
    }
}

impl Serialize for GtPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// `±δ_{k,i}`: add `sign` to entry `(k, i)`, with `1 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternShift {
    k: usize,
    i: usize,
    sign: i8,
}

impl PatternShift {
    pub fn new(k: usize, i: usize, sign: i8) -> Result<Self> {
        if i == 0 || i > k || (sign != 1 && sign != -1) {
            return Err(Error::InvalidArgument(format!("invalid shift δ_({k},{i}) with sign {sign}")));
        }
        Ok(Self { k, i, sign })
    }

    pub fn up(k: usize, i: usize) -> Self {
        Self::new(k, i, 1).expect("valid shift")
    }

    pub fn down(k: usize, i: usize) -> Self {
        Self::new(k, i, -1).expect("valid shift")
    }

    pub fn opposite(self) -> Self {
        Self { sign: -self.sign, ..self }
    }
}

/// All patterns with top row `λ`, in canonical order.
pub fn enumerate_patterns(hw: &HighestWeight) -> Vec<GtPattern> {
    let n = hw.n();
    let mut out = Vec::new();
    let mut buf: Vec<i64> = hw.entries().to_vec();
    fill_rows(n, n - 1, 0, &mut buf, &mut out);
    out
}

/// Depth-first fill of row `k` entry `i` (0-based), each entry running from
/// its upper bound down, which yields the canonical (descending) order.
fn fill_rows(n: usize, k: usize, i: usize, buf: &mut Vec<i64>, out: &mut Vec<GtPattern>) {
    if k == 0 {
        out.push(GtPattern::from_flat_unchecked(n, buf.clone()));
        return;
    }
    if i == k {
        fill_rows(n, k - 1, 0, buf, out);
        return;
    }
    let up = row_offset(n, k + 1);
    let (hi, lo) = (buf[up + i], buf[up + i + 1]);
    for v in (lo..=hi).rev() {
        buf.push(v);
        fill_rows(n, k, i + 1, buf, out);
        buf.pop();
    }
}

/// `‖ξ_Λ‖²` for an admissible pattern.
pub fn pattern_norm_sq(p: &GtPattern) -> Result<Rational> {
    if !p.is_admissible() {
        return Err(Error::Inadmissible(p.to_string()));
    }
    Ok(p.norm_sq())
}
