//! Gelfand–Tsetlin patterns.
//!
//! A pattern `Λ` with top row `λ` labels one basis vector `ξ_Λ` of the
//! irreducible `gl(n)` module of highest weight `λ`; the rows record the
//! highest weights along the chain of upper-left subalgebras
//! `gl(n) ⊃ gl(n-1) ⊃ ... ⊃ gl(1)`.

mod pattern;
mod weight;
mod zero_weight;

pub use pattern::{enumerate_patterns, pattern_norm_sq, GtPattern, PatternShift};
pub use weight::{HighestWeight, WeightVector};
pub(crate) use weight::{parse_ints, write_tuple};
pub use zero_weight::{zero_weight_patterns, zero_weight_tuples, ZeroWeightTuple};

pub fn pattern_weight(p: &GtPattern) -> WeightVector {
    p.weight()
}

pub fn shift(p: &GtPattern, d: PatternShift) -> Option<GtPattern> {
    p.shift(d)
}

pub fn sl_normalize(hw: &HighestWeight) -> HighestWeight {
    hw.sl_normalize()
}
