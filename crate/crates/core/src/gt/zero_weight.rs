use std::fmt;

use super::pattern::GtPattern;
use super::weight::write_tuple;
use crate::error::{Error, Result};

/// `M = (m_n, m_{n-1}, ..., m_2, m_1)` with `m_n >= ... >= m_2 >= m_1 = 0`,
/// indexing the zero-row-sum pattern `Λ(M)` whose row `k` is
/// `(m_k, 0, ..., 0, -m_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroWeightTuple(Vec<i64>);

impl ZeroWeightTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument("zero-weight tuple needs n >= 2".into()));
        }
        if *entries.last().unwrap() != 0 {
            return Err(Error::InvalidArgument(format!("m_1 must be 0 in {entries:?}")));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("tuple {entries:?} is not weakly decreasing")));
        }
        Ok(Self(entries))
    }

    /// `(m, 0, ..., 0)`.
    pub fn top(n: usize, m: i64) -> Self {
        let mut v = vec![0; n];
        v[0] = m;
        Self(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn m(&self) -> i64 {
        self.0[0]
    }

    /// `m_k`, `1 <= k <= n`.
    pub fn get(&self, k: usize) -> i64 {
        self.0[self.n() - k]
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `M ± e_k` for `1 < k < n`, if still a valid tuple.
    pub fn step(&self, k: usize, delta: i64) -> Option<Self> {
        if k <= 1 || k >= self.n() {
            return None;
        }
        let mut v = self.0.clone();
        v[self.n() - k] += delta;
        Self::new(v).ok()
    }

    /// `Λ(M)`.
    pub fn pattern(&self) -> GtPattern {
        let n = self.n();
        let rows = (1..=n)
            .rev()
            .map(|k| {
                let mut row = vec![0; k];
                if k >= 2 {
                    row[0] = self.get(k);
                    row[k - 1] = -self.get(k);
                }
                row
            })
            .collect();
        GtPattern::new(rows).expect("Λ(M) interlaces")
    }
}

impl fmt::Display for ZeroWeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// All tuples `M` for `(n, m)` in ascending lexicographic order, with their
/// patterns `Λ(M)`.
pub fn zero_weight_patterns(n: usize, m: i64) -> Result<Vec<(ZeroWeightTuple, GtPattern)>> {
    Ok(zero_weight_tuples(n, m)?
        .into_iter()
        .map(|t| {
            let p = t.pattern();
            (t, p)
        })
        .collect())
}

pub fn zero_weight_tuples(n: usize, m: i64) -> Result<Vec<ZeroWeightTuple>> {
    if n < 2 || m < 0 {
        return Err(Error::InvalidArgument(format!("need n >= 2 and m >= 0, got n={n}, m={m}")));
    }
    let mut out = Vec::new();
    let mut buf = vec![m];
    fill(n, &mut buf, &mut out);
    Ok(out)
}

fn fill(n: usize, buf: &mut Vec<i64>, out: &mut Vec<ZeroWeightTuple>) {
    if buf.len() == n - 1 {
        let mut v = buf.clone();
        v.push(0);
        out.push(ZeroWeightTuple(v));
        return;
    }
    let bound = *buf.last().unwrap();
    for x in 0..=bound {
        buf.push(x);
        fill(n, buf, out);
        buf.pop();
    }
}
