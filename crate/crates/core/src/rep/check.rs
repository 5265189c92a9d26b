use serde::Serialize;

use super::generators::Generators;
use super::irrep::Irrep;
use crate::linalg::{GramForm, SparseMatrix};

/// Outcome of a full sweep of the `gl(n)` commutation relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepCheckReport {
    pub relations_checked: usize,
    /// First `(p, q, r, s)` with `[E_pq, E_rs] ≠ δ_qr E_ps - δ_sp E_rq`.
    pub first_violation: Option<(usize, usize, usize, usize)>,
}

impl RepCheckReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Verifies `[E_pq, E_rs] = δ_qr E_ps - δ_sp E_rq` exactly for every pair of
/// generators.
pub fn check_rep(rep: &Irrep) -> RepCheckReport {
    check_relations(rep.generators())
}

/// Relation sweep over an explicit generator set (which may have been
/// perturbed). Unordered pairs suffice since both sides are antisymmetric.
pub fn check_relations(g: &Generators) -> RepCheckReport {
    let n = g.n();
    let labels: Vec<(usize, usize)> = (1..=n).flat_map(|p| (1..=n).map(move |q| (p, q))).collect();
    let mut checked = 0;
    for (a, &(p, q)) in labels.iter().enumerate() {
        for &(r, s) in &labels[a..] {
            checked += 1;
            let lhs = g.e(p, q).commutator(g.e(r, s)).expect("square");
            let dim = lhs.n_rows();
            let mut rhs = SparseMatrix::zeros(dim, dim);
            if q == r {
                rhs = rhs.add(g.e(p, s)).expect("same shape");
            }
            if s == p {
                rhs = rhs.sub(g.e(r, q)).expect("same shape");
            }
            if lhs != rhs {
                return RepCheckReport { relations_checked: checked, first_violation: Some((p, q, r, s)) };
            }
        }
    }
    RepCheckReport { relations_checked: checked, first_violation: None }
}

/// Checks `⟨E_{k,k+1} u, v⟩_G = ⟨u, E_{k+1,k} v⟩_G` for all `k`, i.e. the
/// Gram adjoint of each raising matrix is the matching lowering matrix.
/// Returns the first failing `k`.
pub fn check_adjointness(rep: &Irrep) -> Option<usize> {
    adjointness_failure(rep.generators(), rep.gram())
}

pub fn adjointness_failure(g: &Generators, gram: &GramForm) -> Option<usize> {
    (1..g.n()).find(|&k| gram.adjoint(g.e(k, k + 1)).expect("square") != *g.e(k + 1, k))
}

/// Nonzero entries of `E_{k,k+1}` connect patterns whose weights differ by
/// `e_k - e_{k+1}`.
pub fn raise_preserves_grading(rep: &Irrep, k: usize) -> bool {
    let weight = |i: usize| rep.patterns()[i].weight();
    rep.e(k, k + 1).entries().all(|(r, c, _)| {
        let (wr, wc) = (weight(r), weight(c));
        (0..rep.n()).all(|j| {
            let expected = if j + 1 == k { 1 } else if j == k { -1 } else { 0 };
            wr.0[j] - wc.0[j] == expected
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::HighestWeight;
    use crate::linalg::int;

    fn irrep(v: &[i64]) -> Irrep {
        Irrep::new(&HighestWeight::new(v.to_vec()).unwrap())
    }

    #[test]
    fn small_reps_pass() {
        for hw in [vec![1, 0], vec![1, 0, -1], vec![2, 0, 0], vec![1, 1, 0, -1]] {
            let rep = irrep(&hw);
            let report = check_rep(&rep);
            assert!(report.passed(), "{hw:?}: {report:?}");
            assert_eq!(report.relations_checked, rep.n().pow(2) * (rep.n().pow(2) + 1) / 2);
            assert_eq!(check_adjointness(&rep), None);
            for k in 1..rep.n() {
                assert!(raise_preserves_grading(&rep, k));
            }
        }
    }

    #[test]
    fn corrupted_coefficient_is_reported() {
        let rep = irrep(&[1, 0, -1]);
        let mut g = rep.generators().clone();
        let (r, c, _) = g.e(1, 2).entries().next().map(|(r, c, v)| (r, c, v.clone())).unwrap();
        g.perturb(1, 2, r, c, &int(1)).unwrap();
        let report = check_relations(&g);
        let (p, q, rr, s) = report.first_violation.expect("corruption must be caught");
        assert!((p, q) == (1, 2) || (rr, s) == (1, 2), "violation names E_12: {:?}", (p, q, rr, s));
        assert_eq!(adjointness_failure(&g, rep.gram()), Some(1));
    }
}
