//! The acceptance suite: ten exact checks, each reported as one pass/fail
//! line. Shared by the CLI `verify` command and the `acceptance` test target.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::Exec;
use crate::gt::{enumerate_patterns, zero_weight_tuples, HighestWeight, WeightVector};
use crate::linalg::{binomial, int, rational_to_f64, Rational};
use crate::ortho::{
    claim_direct, claim_value_sq, comb_identity_check, decay_experiment, identity1_check, xim_norm_sq,
};
use crate::rep::{
    adjointness_failure, check_relations, dimension, highest_weights_up_to_dim, peel_characters, tensor_decompose,
    weight_multiset, Irrep, WeightMultiset,
};
use crate::subgroups::{all_projections, blocks_of, named_subgroups, restrict_types, BlockStructure, RootSubset, SubgroupLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Reduced sweeps; finishes in well under a minute.
    Fast,
    /// The full parameter ranges.
    Full,
}

/// Deliberate defects for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to one stored coefficient of `E_{1,2}` before the relation check.
    CorruptRaise,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {}: {} ({:.2}s)", self.id, self.name, self.detail, self.seconds)
    }
}

type Outcome = std::result::Result<String, String>;

pub const CRITERIA: [(usize, &str); 10] = [
    (1, "claim reproduction"),
    (2, "closed-form decay"),
    (3, "combinatorial identities"),
    (4, "norm specialization"),
    (5, "representation axioms"),
    (6, "dimension oracle"),
    (7, "branching consistency"),
    (8, "commuting projections"),
    (9, "property-based decay"),
    (10, "tensor finiteness"),
];

pub fn run_criterion(id: usize, scale: Scale, exec: Exec, fault: Option<Fault>) -> CriterionResult {
    let (_, name) = CRITERIA.iter().find(|(i, _)| *i == id).copied().unwrap_or((id, "unknown"));
    let start = Instant::now();
    let outcome = match id {
        1 => claim_reproduction(scale, exec),
        2 => closed_form_decay(scale, exec),
        3 => identities(scale, exec),
        4 => norm_specialization(scale, exec),
        5 => representation_axioms(scale, exec, fault),
        6 => dimension_oracle(scale, exec),
        7 => branching(scale, exec),
        8 => commuting(scale, exec),
        9 => property_decay(scale, exec),
        10 => tensor_finiteness(scale, exec),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_suite(scale: Scale, exec: Exec, fault: Option<Fault>) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, scale, exec, fault)).collect()
}

fn first_failure<T: Sync>(exec: Exec, items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Option<String> {
    exec.map(items, f).into_iter().flatten().next()
}

fn claim_reproduction(_: Scale, exec: Exec) -> Outcome {
    let cases: Vec<(usize, i64)> = (0..=8).map(|m| (3, m)).chain((0..=4).map(|m| (4, m))).collect();
    let counts = exec.map(&cases, |&(n, m)| -> std::result::Result<usize, String> {
        let direct = claim_direct(n, m).map_err(|e| format!("n={n} m={m}: {e}"))?;
        for (t, v) in &direct {
            let closed = claim_value_sq(n, m, t).map_err(|e| e.to_string())?;
            if *v != closed {
                return Err(format!("n={n} m={m} M={t}: direct {v} vs closed form {closed}"));
            }
        }
        Ok(direct.len())
    });
    let total: usize = counts.into_iter().collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    Ok(format!("{total} tuples M over n=3 (m<=8) and n=4 (m<=4) match exactly"))
}

fn closed_form_decay(scale: Scale, exec: Exec) -> Outcome {
    let caps = match scale {
        Scale::Fast => [(3, 8), (4, 4)],
        Scale::Full => [(3, 12), (4, 5)],
    };
    let mut rows = 0;
    for (n, m_max) in caps {
        let (s, t) = named_subgroups(n).map_err(|e| e.to_string())?;
        let (a, b) = (SubgroupLabel::trivial(&blocks_of(&s)), SubgroupLabel::trivial(&blocks_of(&t)));
        let out = decay_experiment(n, &s, &a, &t, &b, m_max, exec).map_err(|e| e.to_string())?;
        for r in &out {
            let bin = Rational::from_integer(binomial((r.m + n as i64 - 2) as u64, (n - 2) as u64));
            let expected = (&bin * &bin).recip();
            let br = &r.product.bracket;
            if br.lower != expected || br.upper != expected {
                return Err(format!("n={n} m={}: bracket [{}, {}] vs {expected}", r.m, br.lower, br.upper));
            }
        }
        rows += out.len();
    }
    let (c3, c4) = (caps[0].1, caps[1].1);
    Ok(format!("{rows} rows (n=3 m<={c3}, n=4 m<={c4}) with lower = upper = 1/binom(m+n-2,n-2)^2"))
}

fn identities(_: Scale, exec: Exec) -> Outcome {
    let comb: Vec<(usize, i64)> = (3..=8).flat_map(|n| (0..=25).map(move |m| (n, m))).collect();
    if let Some(bad) = first_failure(exec, &comb, |&(n, m)| match comb_identity_check(n, m) {
        Ok(c) if c.equal() => None,
        Ok(c) => Some(format!("combinatorial identity n={n} m={m}: {} vs {}", c.lhs, c.rhs)),
        Err(e) => Some(e.to_string()),
    }) {
        return Err(bad);
    }
    let id1: Vec<(i64, i64)> = (0..=6).flat_map(|p| (0..=30).map(move |m| (m, p))).collect();
    if let Some(bad) = first_failure(exec, &id1, |&(m, p)| match identity1_check(m, p) {
        Ok(c) if c.equal() => None,
        Ok(c) => Some(format!("identity1 m={m} p={p}: {} vs {}", c.lhs, c.rhs)),
        Err(e) => Some(e.to_string()),
    }) {
        return Err(bad);
    }
    Ok(format!("{} + {} cases equal", comb.len(), id1.len()))
}

fn norm_specialization(_: Scale, exec: Exec) -> Outcome {
    let cases: Vec<(usize, i64)> = (3..=5).flat_map(|n| (0..=6).map(move |m| (n, m))).collect();
    let counts = exec.map(&cases, |&(n, m)| -> std::result::Result<usize, String> {
        let ts = zero_weight_tuples(n, m).map_err(|e| e.to_string())?;
        for t in &ts {
            let closed = xim_norm_sq(n, t).map_err(|e| e.to_string())?;
            let direct = t.pattern().norm_sq();
            if closed != direct {
                return Err(format!("n={n} M={t}: closed form {closed} vs pattern norm {direct}"));
            }
        }
        Ok(ts.len())
    });
    let total: usize = counts.into_iter().collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    Ok(format!("{total} zero-weight patterns (n<=5, m<=6)"))
}

fn small_weights(scale: Scale, fast: u64, full: u64) -> Vec<HighestWeight> {
    let cap = if scale == Scale::Fast { fast } else { full };
    [3, 4].into_iter().flat_map(|n| highest_weights_up_to_dim(n, cap)).collect()
}

fn representation_axioms(scale: Scale, exec: Exec, fault: Option<Fault>) -> Outcome {
    let ws = small_weights(scale, 120, 300);
    if let Some(bad) = first_failure(exec, &ws, |hw| {
        let rep = Irrep::new(hw);
        let mut g = rep.generators().clone();
        if fault == Some(Fault::CorruptRaise) {
            let first = g.e(1, 2).entries().next().map(|(r, c, _)| (r, c));
            if let Some((r, c)) = first {
                g.perturb(1, 2, r, c, &int(1)).expect("in range");
            }
        }
        let report = check_relations(&g);
        if let Some((p, q, r, s)) = report.first_violation {
            return Some(format!("λ={hw}: [E_{p}{q}, E_{r}{s}] violates the gl(n) relation"));
        }
        adjointness_failure(&g, rep.gram()).map(|k| format!("λ={hw}: Gram adjoint of E_{k},{} is not E_{},{k}", k + 1, k + 1))
    }) {
        return Err(bad);
    }
    let cap = if scale == Scale::Fast { 120 } else { 300 };
    Ok(format!("{} weights (n=3,4; dim<={cap}) satisfy all relations and raise† = lower", ws.len()))
}

fn dimension_oracle(scale: Scale, exec: Exec) -> Outcome {
    let per_n = if scale == Scale::Fast { 20 } else { 50 };
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut samples = Vec::new();
    for n in 2..=5usize {
        let mut got = 0;
        while got < per_n {
            let mut v = vec![0i64; n];
            for i in (0..n - 1).rev() {
                v[i] = v[i + 1] + rng.gen_range(0..=6);
            }
            let shift = rng.gen_range(-3..=3);
            let hw = HighestWeight::new(v.iter().map(|x| x + shift).collect()).expect("dominant");
            if dimension(&hw) <= 2000 {
                samples.push(hw);
                got += 1;
            }
        }
    }
    if let Some(bad) = first_failure(exec, &samples, |hw| {
        let (count, weyl) = (enumerate_patterns(hw).len() as u64, dimension(hw));
        (count != weyl).then(|| format!("λ={hw}: {count} patterns vs Weyl dimension {weyl}"))
    }) {
        return Err(bad);
    }
    Ok(format!("{} sampled weights (n=2..5, dim<=2000)", samples.len()))
}

fn all_subsets(n: usize) -> Vec<RootSubset> {
    (0..1usize << (n - 1))
        .map(|mask| RootSubset::new(n, (1..n).filter(|i| mask >> (i - 1) & 1 == 1)).expect("valid"))
        .collect()
}

fn branching(scale: Scale, exec: Exec) -> Outcome {
    let ws = small_weights(scale, 120, 300);
    if let Some(bad) = first_failure(exec, &ws, |hw| {
        let rep = Irrep::new(hw);
        let n = hw.n();
        let chain = RootSubset::new(n, 1..n - 1).expect("valid");
        let mut expected: BTreeMap<SubgroupLabel, u64> = BTreeMap::new();
        for p in rep.patterns() {
            let label = SubgroupLabel::new(vec![p.row(n - 1).to_vec(), vec![p.top().sum() - p.row_sum(n - 1)]])
                .expect("rows are dominant");
            *expected.entry(label).or_default() += 1;
        }
        let got = restrict_types(&rep, &chain);
        if got.len() != expected.len() {
            return Some(format!("λ={hw}: {} chain labels vs {} GT rows", got.len(), expected.len()));
        }
        for (l, mult) in &got {
            if *mult != 1 || expected.get(l) != Some(&l.dim()) {
                return Some(format!("λ={hw}: label {l} has multiplicity {mult}, GT count {:?}", expected.get(l)));
            }
        }
        for s in all_subsets(n) {
            let total: u64 = restrict_types(&rep, &s).iter().map(|(l, m)| l.dim() * *m as u64).sum();
            if total != rep.dim() as u64 {
                return Some(format!("λ={hw}, S={s}: Σ mult·dim = {total} vs {}", rep.dim()));
            }
        }
        None
    }) {
        return Err(bad);
    }
    Ok(format!("{} weights: chain branching is multiplicity-free and matches GT rows; totals agree for all S", ws.len()))
}

/// Nontrivial blocks of `s` and `t` share no index.
fn disjoint_blocks(s: &RootSubset, t: &RootSubset) -> bool {
    let (a, b) = (blocks_of(s).nontrivial_blocks(), blocks_of(t).nontrivial_blocks());
    a.iter().all(|&(x0, x1)| b.iter().all(|&(y0, y1)| x1 < y0 || y1 < x0))
}

fn commuting(scale: Scale, exec: Exec) -> Outcome {
    let ws = small_weights(scale, 64, 200);
    let pairs_checked = exec.map(&ws, |hw| -> std::result::Result<usize, String> {
        let rep = Irrep::new(hw);
        let subsets = all_subsets(hw.n());
        let projections = subsets
            .iter()
            .map(|s| all_projections(&rep, s, Exec::Sequential).map_err(|e| format!("λ={hw} S={s}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut checked = 0;
        for (i, s) in subsets.iter().enumerate() {
            for (j, t) in subsets.iter().enumerate() {
                if i == j || !(t.is_subset(s) || (i < j && disjoint_blocks(s, t))) {
                    continue;
                }
                for a in &projections[i] {
                    for b in &projections[j] {
                        let ab = a.matrix.mul(&b.matrix).map_err(|e| e.to_string())?;
                        let ba = b.matrix.mul(&a.matrix).map_err(|e| e.to_string())?;
                        if ab != ba {
                            return Err(format!("λ={hw}: p_{} (S={s}) and p_{} (T={t}) do not commute", a.label, b.label));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    });
    let total: usize = pairs_checked.into_iter().collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    let cap = if scale == Scale::Fast { 64 } else { 200 };
    Ok(format!("{total} projection pairs over {} weights (dim<={cap}) commute", ws.len()))
}

fn property_decay(_: Scale, exec: Exec) -> Outcome {
    let m_max = 20;
    let s = RootSubset::new(3, [1]).expect("valid");
    let t = RootSubset::new(3, [2]).expect("valid");
    let sigma = SubgroupLabel::parse("1,0|-1").expect("valid");
    let tau = SubgroupLabel::parse("1|0,-1").expect("valid");
    let rows = decay_experiment(3, &s, &sigma, &t, &tau, m_max, exec).map_err(|e| e.to_string())?;
    for w in rows.windows(2).filter(|w| w[0].m >= 3) {
        if w[1].product.trace >= w[0].product.trace {
            return Err(format!("trace not decreasing: m={} {} -> m={} {}", w[0].m, w[0].product.trace, w[1].m, w[1].product.trace));
        }
    }
    let last = rows.last().expect("nonempty");
    let value = rational_to_f64(&last.product.trace);
    if value >= 0.01 {
        return Err(format!("trace at m={} is {} >= 0.01", last.m, last.product.trace));
    }
    Ok(format!("σ={sigma}, τ={tau}: traces decreasing for 3<=m<={m_max}; trace at m={} is {} ≈ {value:.5}", last.m, last.product.trace))
}

/// Weight multiset of the `K_S` irreducible whose highest weight is `w`.
fn block_character(blocks: &BlockStructure, w: &WeightVector) -> WeightMultiset {
    let mut acc: WeightMultiset = [(WeightVector(Vec::new()), 1)].into_iter().collect();
    for piece in blocks.split(&w.0) {
        let local = weight_multiset(&HighestWeight::new(piece).expect("block dominant"));
        let mut next = WeightMultiset::new();
        for (x, cx) in &acc {
            for (y, cy) in &local {
                let mut v = x.0.clone();
                v.extend_from_slice(&y.0);
                *next.entry(WeightVector(v)).or_insert(0) += cx * cy;
            }
        }
        acc = next;
    }
    acc
}

fn tensor_finiteness(scale: Scale, exec: Exec) -> Outcome {
    let per_n = if scale == Scale::Fast { 8 } else { 20 };
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut pairs = Vec::new();
    for n in [2usize, 3] {
        let pool = highest_weights_up_to_dim(n, 100);
        for _ in 0..per_n {
            let a = pool.choose(&mut rng).expect("nonempty").clone();
            let b = pool.choose(&mut rng).expect("nonempty").clone();
            pairs.push((a, b));
        }
    }
    let results = exec.map(&pairs, |(a, b)| -> std::result::Result<usize, String> {
        let parts = tensor_decompose(a, b).map_err(|e| e.to_string())?;
        let total: u64 = parts.iter().map(|(h, c)| c * dimension(h)).sum();
        if total != dimension(a) * dimension(b) {
            return Err(format!("{a}⊗{b}: Σ mult·dim = {total} vs {}", dimension(a) * dimension(b)));
        }
        let mut product = WeightMultiset::new();
        for (x, cx) in weight_multiset(a) {
            for (y, cy) in weight_multiset(b) {
                *product.entry(x.add(&y)).or_insert(0) += cx * cy;
            }
        }
        let mut labels = 0;
        for s in all_subsets(a.n()) {
            let blocks = blocks_of(&s);
            let brute: BTreeMap<WeightVector, u64> = peel_characters(product.clone(), |w| block_character(&blocks, w))
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            let mut via_irreps: BTreeMap<WeightVector, u64> = BTreeMap::new();
            for (nu, c) in &parts {
                let rep = Irrep::new(nu);
                for (l, m) in restrict_types(&rep, &s) {
                    let w = l.weight_in(nu).expect("label occurs");
                    *via_irreps.entry(w).or_default() += c * m as u64;
                }
            }
            if brute != via_irreps {
                return Err(format!("{a}⊗{b}, S={s}: {} labels by weights vs {} via irreducibles", brute.len(), via_irreps.len()));
            }
            labels += brute.len();
        }
        Ok(labels)
    });
    let total: usize = results.into_iter().collect::<std::result::Result<Vec<_>, _>>()?.iter().sum();
    Ok(format!("{} pairs (n=2,3; dims<=100): dimensions add up; {total} K_S-labels match the weight count", pairs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fault_is_detected() {
        let r = run_criterion(5, Scale::Fast, Exec::default(), Some(Fault::CorruptRaise));
        assert!(!r.passed, "{r}");
        assert!(r.to_string().starts_with("[FAIL]  5 representation axioms"));
    }

    #[test]
    fn disjointness() {
        let r = |m: &[usize]| RootSubset::new(4, m.iter().copied()).unwrap();
        assert!(disjoint_blocks(&r(&[1]), &r(&[3])));
        assert!(!disjoint_blocks(&r(&[1]), &r(&[2])));
        assert!(disjoint_blocks(&r(&[]), &r(&[1, 2, 3])));
    }

    #[test]
    fn block_character_of_standard_block() {
        let b = blocks_of(&RootSubset::new(3, [1]).unwrap());
        let ch = block_character(&b, &WeightVector(vec![1, 0, 0]));
        assert_eq!(ch.len(), 2);
        assert!(ch.contains_key(&WeightVector(vec![0, 1, 0])));
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(11, Scale::Fast, Exec::Sequential, None).passed);
    }
}
