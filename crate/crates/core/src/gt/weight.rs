use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dominant integral weight `λ_1 >= ... >= λ_n` of `gl(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("highest weight must have at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(Self(entries))
    }

    /// Trivial weight `(0, ..., 0)`.
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `(m, 0, ..., 0, -m)`: the irreducibles carrying a vector fixed by the
    /// lower-right `U(n-1)` block.
    pub fn fixed_vector_family(n: usize, m: i64) -> Self {
        assert!(n >= 2 && m >= 0);
        let mut v = vec![0; n];
        v[0] = m;
        v[n - 1] = -m;
        Self(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Canonical representative of the `sl(n)` class: shifted so that the
    /// minimum entry is zero.
    pub fn sl_normalize(&self) -> Self {
        let min = *self.0.last().expect("nonempty");
        Self(self.0.iter().map(|x| x - min).collect())
    }

    pub fn sl_equivalent(&self, other: &Self) -> bool {
        self.sl_normalize() == other.sl_normalize()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Parses `"1,0,-1"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_ints(s)?)
    }
}

impl TryFrom<Vec<i64>> for HighestWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<HighestWeight> for Vec<i64> {
    fn from(w: HighestWeight) -> Self {
        w.0
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A weight `(μ_1, ..., μ_n)`, not necessarily dominant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Fixed by the maximal torus of `SU(n)`: all entries equal.
    pub fn is_central(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("not an integer list: {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_is_enforced() {
        assert!(HighestWeight::new(vec![0, 1]).is_err());
        assert!(HighestWeight::new(vec![]).is_err());
        assert!(HighestWeight::new(vec![2, 2, -1]).is_ok());
    }

    #[test]
    fn sl_normalization() {
        let cases = [(vec![1, 0, -1], vec![2, 1, 0]), (vec![3, 2, 2], vec![1, 0, 0]), (vec![0, 0, 0], vec![0, 0, 0])];
        for (input, want) in cases {
            assert_eq!(HighestWeight::new(input).unwrap().sl_normalize().entries(), &want[..]);
        }
        let a = HighestWeight::new(vec![4, 3, 1]).unwrap();
        let b = HighestWeight::new(vec![3, 2, 0]).unwrap();
        assert!(a.sl_equivalent(&b));
    }

    #[test]
    fn parse_and_display() {
        let w = HighestWeight::parse("1, 0,-1").unwrap();
        assert_eq!(w.to_string(), "(1,0,-1)");
        assert!(HighestWeight::parse("0,1").is_err());
        assert!(HighestWeight::parse("a").is_err());
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "[1,0,-1]");
        assert!(serde_json::from_str::<HighestWeight>("[0,1]").is_err());
    }
}
