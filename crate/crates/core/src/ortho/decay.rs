use std::io::Write;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gt::HighestWeight;
use crate::linalg::{norm_bracket, NormBracket, Rational};
use crate::rep::Irrep;
use crate::subgroups::{isotypic_projection, RootSubset, SubgroupLabel};

/// `A = p_σ p_τ p_σ` on one irreducible: its exact trace and a bracket on its
/// largest eigenvalue (the squared norm of `p_τ p_σ`).
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionProduct {
    pub lambda: HighestWeight,
    pub dim: usize,
    pub trace: Rational,
    pub bracket: NormBracket,
}

pub fn projection_product(
    rep: &Irrep,
    s: &RootSubset,
    sigma: &SubgroupLabel,
    t: &RootSubset,
    tau: &SubgroupLabel,
) -> Result<ProjectionProduct> {
    let ps = isotypic_projection(rep, s, sigma)?.matrix;
    let pt = isotypic_projection(rep, t, tau)?.matrix;
    let a = ps.mul(&pt)?.mul(&ps)?;
    let bracket = norm_bracket(&a, rep.gram())?;
    Ok(ProjectionProduct { lambda: rep.hw().clone(), dim: rep.dim(), trace: bracket.upper.clone(), bracket })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub m: i64,
    pub product: ProjectionProduct,
}

pub const DECAY_CSV_HEADER: &str = "m,dim,trace_num_den,norm_est,lower,upper";

impl DecayRow {
    pub fn csv_line(&self) -> String {
        let p = &self.product;
        format!("{},{},{},{:e},{},{}", self.m, p.dim, p.trace, p.bracket.estimate, p.bracket.lower, p.bracket.upper)
    }

    pub fn to_json(&self) -> Value {
        let p = &self.product;
        json!({
            "m": self.m,
            "lambda": p.lambda.entries(),
            "dim": p.dim,
            "trace": p.trace.to_string(),
            "norm_est": p.bracket.estimate,
            "lower": p.bracket.lower.to_string(),
            "upper": p.bracket.upper.to_string(),
        })
    }
}

/// One row per `m = 0..=m_max` on `π_{(m,0,...,0,-m)}`.
pub fn decay_experiment(
    n: usize,
    s: &RootSubset,
    sigma: &SubgroupLabel,
    t: &RootSubset,
    tau: &SubgroupLabel,
    m_max: i64,
    exec: Exec,
) -> Result<Vec<DecayRow>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("decay experiments need n >= 3, got {n}")));
    }
    if s.n() != n || t.n() != n {
        return Err(Error::DimensionMismatch(format!("subgroups of SU({}) and SU({}) with n = {n}", s.n(), t.n())));
    }
    let ms: Vec<i64> = (0..=m_max).collect();
    exec.map(&ms, |&m| {
        let rep = Irrep::new(&HighestWeight::fixed_vector_family(n, m));
        Ok(DecayRow { m, product: projection_product(&rep, s, sigma, t, tau)? })
    })
    .into_iter()
    .collect()
}

pub fn write_decay_csv<W: Write>(rows: &[DecayRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{DECAY_CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{binomial, int, ratio};
    use crate::subgroups::{blocks_of, named_subgroups, restrict_types};

    fn trivial_pair(n: usize) -> (RootSubset, SubgroupLabel, RootSubset, SubgroupLabel) {
        let (s, t) = named_subgroups(n).unwrap();
        let (a, b) = (SubgroupLabel::trivial(&blocks_of(&s)), SubgroupLabel::trivial(&blocks_of(&t)));
        (s, a, t, b)
    }

    #[test]
    fn adjoint_rep_gives_a_quarter() {
        let (s, a, t, b) = trivial_pair(3);
        let rep = Irrep::new(&HighestWeight::new(vec![1, 0, -1]).unwrap());
        let p = projection_product(&rep, &s, &a, &t, &b).unwrap();
        assert_eq!(p.trace, ratio(1, 4));
        assert!(p.bracket.is_exact());
    }

    #[test]
    fn same_projection_has_norm_one() {
        let rep = Irrep::new(&HighestWeight::new(vec![2, 0, -1]).unwrap());
        let s = RootSubset::new(3, [1]).unwrap();
        for (l, mult) in restrict_types(&rep, &s) {
            let p = projection_product(&rep, &s, &l, &s, &l).unwrap();
            assert_eq!(p.trace, int((mult as u64 * l.dim()) as i64));
            assert_eq!(p.bracket.lower, int(1));
            assert!((p.bracket.estimate - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn disjoint_weights_give_zero() {
        let rep = Irrep::new(&HighestWeight::new(vec![1, 0, -1]).unwrap());
        let s = RootSubset::new(3, [1]).unwrap();
        let p = projection_product(&rep, &s, &SubgroupLabel::parse("1,1|0").unwrap(), &s, &SubgroupLabel::parse("1,0|1").unwrap())
            .unwrap();
        assert_eq!(p.trace, int(0));
        assert_eq!(p.bracket.upper, int(0));
        assert_eq!(p.bracket.estimate, 0.0);
    }

    #[test]
    fn trivial_decay_follows_closed_form() {
        for n in [3, 4] {
            let (s, a, t, b) = trivial_pair(n);
            let rows = decay_experiment(n, &s, &a, &t, &b, 3, Exec::default()).unwrap();
            for r in &rows {
                let bin = Rational::from_integer(binomial((r.m + n as i64 - 2) as u64, (n - 2) as u64));
                assert_eq!(r.product.trace, (&bin * &bin).recip(), "n={n} m={}", r.m);
                assert!(r.product.bracket.is_exact());
            }
            if n == 3 {
                // ‖p_τ p_σ‖ = sqrt(λ_max) = 1/(m+1)
                for r in &rows {
                    assert!((r.product.bracket.estimate.sqrt() - 1.0 / (r.m as f64 + 1.0)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let (s, a, t, b) = trivial_pair(3);
        let x = decay_experiment(3, &s, &a, &t, &b, 3, Exec::Sequential).unwrap();
        let y = decay_experiment(3, &s, &a, &t, &b, 3, Exec::Parallel).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn csv_output() {
        let (s, a, t, b) = trivial_pair(3);
        let rows = decay_experiment(3, &s, &a, &t, &b, 1, Exec::Sequential).unwrap();
        let mut buf = Vec::new();
        write_decay_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], DECAY_CSV_HEADER);
        assert_eq!(lines[1], "0,1,1,1e0,1,1");
        assert!(lines[2].starts_with("1,8,1/4,2.5e-1,1/4,1/4"));
    }

    #[test]
    fn rejects_small_n() {
        let s = RootSubset::empty(2);
        let l = SubgroupLabel::parse("0|0").unwrap();
        assert!(decay_experiment(2, &s, &l, &s, &l, 1, Exec::Sequential).is_err());
    }
}
