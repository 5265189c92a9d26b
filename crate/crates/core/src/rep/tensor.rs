use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::gt::{enumerate_patterns, HighestWeight, WeightVector};
use crate::linalg::Rational;

/// Weight multiplicities, keyed by weight.
pub type WeightMultiset = BTreeMap<WeightVector, u64>;

/// Weyl dimension formula `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn dimension(hw: &HighestWeight) -> u64 {
    let l = hw.entries();
    let n = l.len();
    let mut q = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            q *= Rational::new(BigInt::from(l[i] - l[j] + (j - i) as i64), BigInt::from((j - i) as i64));
        }
    }
    debug_assert!(q.is_integer());
    q.to_integer().to_u64().expect("dimension fits in u64")
}

/// Every `λ` with `λ_n = 0` and `dimension(λ) <= max_dim`, in ascending
/// lexicographic order. Dimension grows in each gap `λ_i - λ_{i+1}`, which
/// bounds the search.
pub fn highest_weights_up_to_dim(n: usize, max_dim: u64) -> Vec<HighestWeight> {
    fn go(gaps: &mut Vec<i64>, n: usize, max_dim: u64, out: &mut Vec<HighestWeight>) {
        let hw = |gaps: &[i64]| {
            let mut v = vec![0; n];
            for i in (0..n - 1).rev() {
                v[i] = v[i + 1] + gaps.get(i).copied().unwrap_or(0);
            }
            HighestWeight::new(v).expect("nonnegative gaps")
        };
        if gaps.len() == n - 1 {
            out.push(hw(gaps));
            return;
        }
        gaps.push(0);
        while dimension(&hw(gaps)) <= max_dim {
            go(gaps, n, max_dim, out);
            *gaps.last_mut().unwrap() += 1;
        }
        gaps.pop();
    }
    let mut out = Vec::new();
    if n >= 1 && max_dim >= 1 {
        go(&mut Vec::new(), n, max_dim, &mut out);
    }
    out.sort();
    out
}

/// Weight multiplicities of `π_λ`, read off the Gelfand–Tsetlin patterns.
pub fn weight_multiset(hw: &HighestWeight) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for p in enumerate_patterns(hw) {
        *out.entry(p.weight()).or_insert(0) += 1;
    }
    out
}

/// Repeatedly removes the character whose highest weight is the
/// lexicographically largest remaining weight. Returns `(highest weight,
/// multiplicity)` pairs in the order extracted (descending).
///
/// `character(top)` must return the weight multiset of the irreducible with
/// highest weight `top`, and the lex-largest weight of any sum of such
/// characters must be one of their highest weights, which holds for `gl(n)`
/// and for block subalgebras (positive roots are lex-positive).
pub fn peel_characters<F>(mut remaining: WeightMultiset, mut character: F) -> Result<Vec<(WeightVector, u64)>>
where
    F: FnMut(&WeightVector) -> WeightMultiset,
{
    let mut out = Vec::new();
    while let Some((top, &count)) = remaining.iter().next_back() {
        let top = top.clone();
        for (w, c) in character(&top) {
            let slot = remaining.get_mut(&w).ok_or_else(|| {
                Error::Inconsistent(format!("weight {w} of character {top} missing from multiset"))
            })?;
            *slot = slot.checked_sub(c * count).ok_or_else(|| {
                Error::Inconsistent(format!("weight {w} over-subtracted while peeling {top}"))
            })?;
            if *slot == 0 {
                remaining.remove(&w);
            }
        }
        out.push((top, count));
    }
    Ok(out)
}

/// Decomposition of `π_λ ⊗ π_μ` into irreducibles, with multiplicities,
/// highest weights in descending lexicographic order.
pub fn tensor_decompose(a: &HighestWeight, b: &HighestWeight) -> Result<Vec<(HighestWeight, u64)>> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!("rank {} vs rank {}", a.n(), b.n())));
    }
    let (wa, wb) = (weight_multiset(a), weight_multiset(b));
    let mut product = WeightMultiset::new();
    for (x, cx) in &wa {
        for (y, cy) in &wb {
            *product.entry(x.add(y)).or_insert(0) += cx * cy;
        }
    }
    peel_characters(product, |top| {
        let hw = HighestWeight::new(top.0.clone()).expect("top weight is dominant");
        weight_multiset(&hw)
    })?
    .into_iter()
    .map(|(w, c)| Ok((HighestWeight::new(w.0).map_err(|e| Error::Inconsistent(e.to_string()))?, c)))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hw(v: &[i64]) -> HighestWeight {
        HighestWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(dimension(&hw(&[1, 0])), 2);
        assert_eq!(dimension(&hw(&[1, 0, -1])), 8);
        assert_eq!(dimension(&hw(&[2, 0, -2])), 27);
        assert_eq!(dimension(&hw(&[0, 0, 0, 0])), 1);
    }

    #[test]
    fn fixed_vector_family_dimension_matches_enumeration() {
        for n in 3..=5 {
            for m in 0..5 {
                let h = HighestWeight::fixed_vector_family(n, m);
                assert_eq!(dimension(&h) as usize, enumerate_patterns(&h).len(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn su2_clebsch_gordan() {
        assert_eq!(tensor_decompose(&hw(&[1, 0]), &hw(&[1, 0])).unwrap(), vec![(hw(&[2, 0]), 1), (hw(&[1, 1]), 1)]);
    }

    #[test]
    fn three_times_three_bar() {
        assert_eq!(
            tensor_decompose(&hw(&[1, 0, 0]), &hw(&[0, 0, -1])).unwrap(),
            vec![(hw(&[1, 0, -1]), 1), (hw(&[0, 0, 0]), 1)]
        );
    }

    #[test]
    fn eight_times_eight() {
        let d = tensor_decompose(&hw(&[1, 0, -1]), &hw(&[1, 0, -1])).unwrap();
        let mult = |v: &[i64]| d.iter().find(|(h, _)| h.entries() == v).map_or(0, |(_, c)| *c);
        assert_eq!(mult(&[1, 0, -1]), 2);
        assert_eq!(mult(&[2, 0, -2]), 1);
        assert_eq!(mult(&[0, 0, 0]), 1);
        assert_eq!(mult(&[2, -1, -1]), 1);
        assert_eq!(mult(&[1, 1, -2]), 1);
        assert_eq!(d.len(), 5);
    }

    #[test]
    fn bounded_weight_lists() {
        let ws = highest_weights_up_to_dim(3, 8);
        let dims: Vec<u64> = ws.iter().map(dimension).collect();
        assert_eq!(ws.len(), 6, "{ws:?}");
        assert!(dims.iter().all(|&d| d <= 8));
        assert!(ws.contains(&hw(&[2, 1, 0])) && ws.contains(&hw(&[0, 0, 0])));
        assert_eq!(highest_weights_up_to_dim(2, 5).len(), 5);
        // brute force over a box
        let mut brute = 0;
        for a in 0..20 {
            for b in 0..20 {
                for c in 0..20 {
                    if dimension(&hw(&[a + b + c, b + c, c, 0])) <= 50 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(highest_weights_up_to_dim(4, 50).len(), brute);
    }

    #[test]
    fn rank_mismatch() {
        assert!(tensor_decompose(&hw(&[1, 0]), &hw(&[1, 0, 0])).is_err());
    }

    proptest! {
        #[test]
        fn dimensions_add_up(a in proptest::collection::vec(0i64..3, 2), b in proptest::collection::vec(0i64..3, 2)) {
            let mk = |g: &[i64]| hw(&[g[0] + g[1], g[1], 0]);
            let (x, y) = (mk(&a), mk(&b));
            let total: u64 = tensor_decompose(&x, &y).unwrap().iter().map(|(h, c)| c * dimension(h)).sum();
            prop_assert_eq!(total, dimension(&x) * dimension(&y));
        }
    }
}
