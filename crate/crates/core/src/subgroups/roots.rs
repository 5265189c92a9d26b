use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A set of simple roots `α_i` (stored by index `i ∈ 1..n`) of `SU(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset {
    n: usize,
    members: BTreeSet<usize>,
}

impl RootSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("rank parameter n must be positive".into()));
        }
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidArgument(format!("root index {bad} outside 1..{}", n - 1)));
        }
        Ok(Self { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, members: BTreeSet::new() }
    }

    pub fn full(n: usize) -> Self {
        Self { n, members: (1..n).collect() }
    }

    /// `"1,2"`; an empty string is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(n, []);
        }
        let idx = crate::gt::parse_ints(s)?;
        if idx.iter().any(|&i| i < 0) {
            return Err(Error::InvalidArgument(format!("negative root index in {s:?}")));
        }
        Self::new(n, idx.into_iter().map(|i| i as usize))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { n: self.n, members: self.members.union(&other.members).copied().collect() }
    }

    pub fn blocks(&self) -> BlockStructure {
        blocks_of(self)
    }
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Partition of `1..=n` into consecutive blocks; the block-diagonal subgroup
/// `K_S = S(U(n_1) × ... × U(n_r))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockStructure {
    /// Inclusive 1-based `(first, last)` of each block.
    blocks: Vec<(usize, usize)>,
}

impl BlockStructure {
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.1)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|(a, b)| b - a + 1).collect()
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.blocks.iter().position(|&(a, b)| a <= i && i <= b).expect("index in range")
    }

    /// Ordered pairs `(p, q)`, `p ≠ q`, lying in a common block.
    pub fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .flat_map(|&(a, b)| (a..=b).flat_map(move |p| (a..=b).filter(move |&q| q != p).map(move |q| (p, q))))
            .collect()
    }

    /// Blocks with more than one index.
    pub fn nontrivial_blocks(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().copied().filter(|(a, b)| b > a).collect()
    }

    /// Splits a length-`n` tuple into per-block pieces.
    pub fn split(&self, v: &[i64]) -> Vec<Vec<i64>> {
        self.blocks.iter().map(|&(a, b)| v[a - 1..b].to_vec()).collect()
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(a, b)) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for i in a..=b {
                if i > a {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Indices `i, i+1` share a block exactly when `α_i ∈ S`.
pub fn blocks_of(s: &RootSubset) -> BlockStructure {
    let mut blocks = Vec::new();
    let mut start = 1;
    for i in 1..=s.n() {
        if i == s.n() || !s.contains(i) {
            blocks.push((start, i));
            start = i + 1;
        }
    }
    BlockStructure { blocks }
}

/// The two subgroups of the base case: the upper-left `U(n-1)` block
/// (`Σ ∖ {α_{n-1}}`) and the lower-right one (`Σ ∖ {α_1}`).
pub fn named_subgroups(n: usize) -> Result<(RootSubset, RootSubset)> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("named subgroups need n >= 3, got {n}")));
    }
    Ok((RootSubset::new(n, 1..n - 1)?, RootSubset::new(n, 2..n)?))
}
