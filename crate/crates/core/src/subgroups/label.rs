use std::fmt;

use serde::Serialize;

use super::roots::BlockStructure;
use crate::error::{Error, Result};
use crate::gt::{write_tuple, HighestWeight, WeightVector};
use crate::rep::dimension;

/// An irreducible of `K_S`: one dominant tuple per block, shifted so the
/// smallest entry overall is 0. Labels differing by a common constant are the
/// same label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SubgroupLabel(Vec<Vec<i64>>);

impl SubgroupLabel {
    pub fn new(blocks: Vec<Vec<i64>>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidArgument("label needs nonempty block tuples".into()));
        }
        if let Some(b) = blocks.iter().find(|b| b.windows(2).any(|w| w[0] < w[1])) {
            return Err(Error::NotDominant(b.clone()));
        }
        let min = blocks.iter().flatten().copied().min().expect("nonempty");
        Ok(Self(blocks.into_iter().map(|b| b.into_iter().map(|x| x - min).collect()).collect()))
    }

    /// `"1,0|0"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.split('|').map(crate::gt::parse_ints).collect::<Result<_>>()?)
    }

    pub fn trivial(blocks: &BlockStructure) -> Self {
        Self(blocks.sizes().into_iter().map(|k| vec![0; k]).collect())
    }

    /// Label of a weight that is dominant within every block.
    pub fn from_weight(blocks: &BlockStructure, w: &WeightVector) -> Result<Self> {
        Self::new(blocks.split(&w.0))
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().flatten().all(|&x| x == 0)
    }

    pub fn fits(&self, blocks: &BlockStructure) -> bool {
        self.0.iter().map(Vec::len).eq(blocks.sizes())
    }

    pub fn dim(&self) -> u64 {
        self.0.iter().map(|b| dimension(&HighestWeight::new(b.clone()).expect("dominant"))).product()
    }

    fn flat(&self) -> Vec<i64> {
        self.0.iter().flatten().copied().collect()
    }

    /// The highest weight this label has inside `π_λ`, i.e. the canonical
    /// tuple plus the constant fixed by the central character of `λ`.
    /// `None` if no constant matches, in which case the label cannot occur.
    pub fn weight_in(&self, hw: &HighestWeight) -> Option<WeightVector> {
        let flat = self.flat();
        let n = flat.len() as i64;
        let diff = hw.sum() - flat.iter().sum::<i64>();
        (diff % n == 0).then(|| WeightVector(flat.iter().map(|x| x + diff / n).collect()))
    }
}

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write_tuple(f, b)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::{blocks_of, RootSubset};

    #[test]
    fn canonical_shift() {
        let a = SubgroupLabel::new(vec![vec![1, 0], vec![-1]]).unwrap();
        assert_eq!(a.blocks(), &[vec![2, 1], vec![0]]);
        assert_eq!(a, SubgroupLabel::parse("5,4|3").unwrap());
        assert_eq!(a.to_string(), "((2,1),(0))");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[2,1],[0]]");
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(SubgroupLabel::parse("0,1|0").is_err());
        assert!(SubgroupLabel::parse("").is_err());
        assert!(SubgroupLabel::parse("1,a").is_err());
    }

    #[test]
    fn weight_inside_rep() {
        let s = SubgroupLabel::parse("1,0|-1").unwrap();
        let hw = HighestWeight::new(vec![2, 0, -2]).unwrap();
        assert_eq!(s.weight_in(&hw), Some(WeightVector(vec![1, 0, -1])));
        // sum 1 is not reachable from canonical sum 3 by a shift of 3 entries
        assert_eq!(s.weight_in(&HighestWeight::new(vec![1, 0, 0]).unwrap()), None);
    }

    #[test]
    fn trivial_and_dims() {
        let b = blocks_of(&RootSubset::new(4, [1, 2]).unwrap());
        let t = SubgroupLabel::trivial(&b);
        assert!(t.is_trivial() && t.fits(&b) && t.dim() == 1);
        assert_eq!(SubgroupLabel::parse("1,0,-1|0").unwrap().dim(), 8);
        assert!(!SubgroupLabel::parse("1|0").unwrap().fits(&b));
    }
}
