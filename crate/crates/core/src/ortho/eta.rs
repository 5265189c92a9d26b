use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gt::{zero_weight_tuples, HighestWeight, ZeroWeightTuple};
use crate::linalg::{binomial, factorial, int, ratio, Rational};
use crate::rep::Irrep;
use crate::subgroups::{fixed_vectors, named_subgroups};

fn check_nm(n: usize, m: i64) -> Result<()> {
    if n < 3 || m < 0 {
        return Err(Error::InvalidArgument(format!("need n >= 3 and m >= 0, got n={n}, m={m}")));
    }
    Ok(())
}

fn check_tuple(n: usize, m: i64, t: &ZeroWeightTuple) -> Result<()> {
    check_nm(n, m)?;
    if t.n() != n || t.m() != m {
        return Err(Error::InvalidArgument(format!("tuple {t} does not belong to n={n}, m={m}")));
    }
    Ok(())
}

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// `C(m) = (Π_{j=3}^{n} (m+j-3)!)² · (2m+n-2)!`.
pub fn c_normalizer(n: usize, m: i64) -> Rational {
    let p: Rational = (3..=n as i64).map(|j| fact(m + j - 3)).product();
    &p * &p * fact(2 * m + n as i64 - 2)
}

/// Coefficients `a_M` of the lower-right `U(n-1)`-fixed vector
/// `η_m = Σ_M a_M ξ_{Λ(M)}` in `π_{(m,0,...,0,-m)}`, unnormalised, with
/// `a_{(m,0,...,0)} = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedVectorCoeffs {
    pub n: usize,
    pub m: i64,
    pub coeffs: BTreeMap<ZeroWeightTuple, Rational>,
    pub normalizer: Rational,
}

impl FixedVectorCoeffs {
    pub fn get(&self, t: &ZeroWeightTuple) -> Option<&Rational> {
        self.coeffs.get(t)
    }

    /// `‖Σ a_M ξ_{Λ(M)}‖² = Σ a_M² ‖ξ_{Λ(M)}‖²`, using the closed-form norms.
    pub fn norm_sq(&self) -> Rational {
        self.coeffs.iter().map(|(t, a)| a * a * xim_norm_sq(self.n, t).expect("valid tuple")).sum()
    }
}

/// The factor relating `a_{M+e_k}` to `a_M`.
fn step_factor(k: i64, mk: i64) -> Rational {
    -ratio(mk + k - 1, mk + 1) * ratio(2 * mk + k + 1, 2 * mk + k - 1)
}

/// Solves the recurrence `a_{M+e_k} = -((m_k+k-1)/(m_k+1))·((2m_k+k+1)/(2m_k+k-1))·a_M`
/// from the seed. Tuples come in ascending order, so `M - e_k` (lowering the
/// lowest nonzero `m_k`) is always available.
pub fn eta_coefficients(n: usize, m: i64) -> Result<FixedVectorCoeffs> {
    check_nm(n, m)?;
    let mut coeffs: BTreeMap<ZeroWeightTuple, Rational> = BTreeMap::new();
    for t in zero_weight_tuples(n, m)? {
        let a = match (2..n).find(|&k| t.get(k) > 0) {
            None => Rational::one(),
            Some(k) => {
                let prev = t.step(k, -1).expect("lowering the lowest nonzero entry stays valid");
                step_factor(k as i64, t.get(k) - 1) * &coeffs[&prev]
            }
        };
        coeffs.insert(t, a);
    }
    Ok(FixedVectorCoeffs { n, m, coeffs, normalizer: c_normalizer(n, m) })
}

/// The product formula for `|a_M| / a_{(m,0,...,0)}` as printed, i.e.
/// `(1/(n-2)!) Π_{k=2}^{n-1} (m_k+k-2)!/m_k! · (2m_k+k-1)`. Agrees with the
/// recurrence only up to an `n`-dependent constant; see [`closed_form_ratio`].
pub fn eta_closed_form(t: &ZeroWeightTuple) -> Rational {
    let n = t.n() as i64;
    let p: Rational = (2..n)
        .map(|k| {
            let mk = t.get(k as usize);
            fact(mk + k - 2) / fact(mk) * int(2 * mk + k - 1)
        })
        .product();
    p / fact(n - 2)
}

/// The common value of `|a_M| / closed_form(M)` over all `M`, or an error if
/// the two are not proportional.
pub fn closed_form_ratio(n: usize, m: i64) -> Result<Rational> {
    let eta = eta_coefficients(n, m)?;
    let mut ratios = eta.coeffs.iter().map(|(t, a)| a.abs() / eta_closed_form(t));
    let first = ratios.next().expect("at least one tuple");
    match ratios.find(|r| *r != first) {
        None => Ok(first),
        Some(r) => Err(Error::Inconsistent(format!("ratios {first} and {r} differ"))),
    }
}

/// `(n-2)! / Π_{j=1}^{n-2} j!`, the value [`closed_form_ratio`] takes.
pub fn closed_form_scale(n: usize) -> Rational {
    let n = n as i64;
    (1..=n - 2).map(fact).product::<Rational>().recip() * fact(n - 2)
}

/// The lower-right `U(n-1)`-fixed vector of `π_{(m,0,...,0,-m)}` solved
/// directly as a joint kernel, scaled so its `Λ((m,0,...,0))` coefficient is
/// positive.
pub fn eta_direct(n: usize, m: i64) -> Result<(Irrep, Vec<Rational>)> {
    check_nm(n, m)?;
    let rep = Irrep::new(&HighestWeight::fixed_vector_family(n, m));
    let v = eta_direct_in(&rep)?;
    Ok((rep, v))
}

pub fn eta_direct_in(rep: &Irrep) -> Result<Vec<Rational>> {
    let (_, t) = named_subgroups(rep.n())?;
    let mut fixed = fixed_vectors(rep, &t);
    if fixed.len() != 1 {
        return Err(Error::Inconsistent(format!("fixed space of {} has dimension {}", rep.hw(), fixed.len())));
    }
    let mut v = fixed.pop().expect("one vector");
    let seed = ZeroWeightTuple::top(rep.n(), rep.hw().entries()[0]).pattern();
    let i = rep.index_of(&seed).ok_or_else(|| Error::Inconsistent(format!("{seed} not in {}", rep.hw())))?;
    if v[i].is_zero() {
        return Err(Error::Inconsistent("fixed vector vanishes at Λ((m,0,...,0))".into()));
    }
    if v[i].is_negative() {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(v)
}

/// `‖ξ_{Λ(M)}‖² = C(m) Π_{k=2}^{n-1} m_k!²/(m_k+k-2)!² · 1/(2m_k+k-1)`.
pub fn xim_norm_sq(n: usize, t: &ZeroWeightTuple) -> Result<Rational> {
    check_tuple(n, t.m(), t)?;
    let p: Rational = (2..n as i64)
        .map(|k| {
            let mk = t.get(k as usize);
            let r = fact(mk) / fact(mk + k - 2);
            &r * &r / int(2 * mk + k - 1)
        })
        .product();
    Ok(c_normalizer(n, t.m()) * p)
}

/// Square of the closed form for `⟨η_m, ξ_{Λ(M)}/‖ξ_{Λ(M)}‖⟩` with `η_m` a
/// unit vector: `binom(m+n-2, n-2)^{-2} · Π_{k=2}^{n-1}(2m_k+k-1) / (n-2)!`.
pub fn claim_value_sq(n: usize, m: i64, t: &ZeroWeightTuple) -> Result<Rational> {
    check_tuple(n, m, t)?;
    let b = Rational::from_integer(binomial((m + n as i64 - 2) as u64, (n - 2) as u64));
    let p: BigInt = (2..n).map(|k| BigInt::from(2 * t.get(k) + k as i64 - 1)).product();
    Ok(Rational::from_integer(p) / fact(n as i64 - 2) / (&b * &b))
}

/// `|⟨η, ξ_{Λ(M)}⟩|² / (‖η‖² ‖ξ_{Λ(M)}‖²)` for every `M`, from the directly
/// solved fixed vector and the Gram form of the representation.
pub fn claim_direct(n: usize, m: i64) -> Result<Vec<(ZeroWeightTuple, Rational)>> {
    let (rep, v) = eta_direct(n, m)?;
    let g = rep.gram();
    let eta_sq = g.inner(&v, &v);
    zero_weight_tuples(n, m)?
        .into_iter()
        .map(|t| {
            let i = rep.index_of(&t.pattern()).expect("Λ(M) lies in the representation");
            let val = &v[i] * &v[i] * g.get(i) / &eta_sq;
            Ok((t, val))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(v: &[i64]) -> ZeroWeightTuple {
        ZeroWeightTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn recurrence_examples() {
        let e = eta_coefficients(3, 1).unwrap();
        assert_eq!(e.get(&tuple(&[1, 0, 0])), Some(&int(1)));
        assert_eq!(e.get(&tuple(&[1, 1, 0])), Some(&int(-3)));
        assert_eq!(eta_coefficients(4, 3).unwrap().get(&tuple(&[3, 0, 0, 0])), Some(&int(1)));
        assert!(eta_coefficients(2, 1).is_err());
        assert!(eta_coefficients(3, -1).is_err());
    }

    #[test]
    fn sign_alternates() {
        for (n, m) in [(3, 4), (4, 3), (5, 2)] {
            for (t, a) in &eta_coefficients(n, m).unwrap().coeffs {
                let s: i64 = (2..n).map(|k| t.get(k)).sum();
                assert_eq!(a.is_negative(), s % 2 == 1, "{t}");
            }
        }
    }

    #[test]
    fn normalizer_values() {
        assert_eq!(c_normalizer(3, 1), int(6));
        assert_eq!(c_normalizer(3, 0), int(1));
        assert_eq!(c_normalizer(4, 1), int(1 * 2 * 1 * 2 * 24));
    }

    #[test]
    fn xim_examples() {
        assert_eq!(xim_norm_sq(3, &tuple(&[1, 0, 0])).unwrap(), int(6));
        assert_eq!(xim_norm_sq(3, &tuple(&[1, 1, 0])).unwrap(), int(2));
        for n in 3..=6 {
            assert_eq!(xim_norm_sq(n, &ZeroWeightTuple::top(n, 0)).unwrap(), int(1), "n={n}");
        }
        assert!(xim_norm_sq(4, &tuple(&[1, 0, 0])).is_err());
    }

    #[test]
    fn xim_matches_pattern_norms() {
        for n in 3..=5 {
            for m in 0..=3 {
                for t in zero_weight_tuples(n, m).unwrap() {
                    assert_eq!(xim_norm_sq(n, &t).unwrap(), t.pattern().norm_sq(), "{t}");
                }
            }
        }
    }

    #[test]
    fn claim_examples() {
        assert_eq!(claim_value_sq(3, 1, &tuple(&[1, 0, 0])).unwrap(), ratio(1, 4));
        assert_eq!(claim_value_sq(3, 1, &tuple(&[1, 1, 0])).unwrap(), ratio(3, 4));
        assert!(claim_value_sq(3, 2, &tuple(&[1, 0, 0])).is_err());
    }

    #[test]
    fn claim_parseval() {
        for n in 3..=6 {
            for m in 0..=4 {
                let total: Rational =
                    zero_weight_tuples(n, m).unwrap().iter().map(|t| claim_value_sq(n, m, t).unwrap()).sum();
                assert_eq!(total, int(1), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn recurrence_route_to_claim() {
        for (n, m) in [(3, 3), (4, 2), (5, 2)] {
            let e = eta_coefficients(n, m).unwrap();
            let norm = e.norm_sq();
            for (t, a) in &e.coeffs {
                assert_eq!(a * a * xim_norm_sq(n, t).unwrap() / &norm, claim_value_sq(n, m, t).unwrap());
            }
        }
    }

    #[test]
    fn direct_solution_matches_recurrence() {
        for (n, m) in [(3, 0), (3, 1), (3, 3), (4, 2)] {
            let (rep, v) = eta_direct(n, m).unwrap();
            let e = eta_coefficients(n, m).unwrap();
            let seed = v[rep.index_of(&ZeroWeightTuple::top(n, m).pattern()).unwrap()].clone();
            assert!(seed.is_positive());
            let mut support = 0;
            for (t, a) in &e.coeffs {
                assert_eq!(&v[rep.index_of(&t.pattern()).unwrap()] / &seed, *a, "{t}");
                support += 1;
            }
            assert_eq!(v.iter().filter(|x| !x.is_zero()).count(), support);
        }
    }

    #[test]
    fn direct_claim_small() {
        let got = claim_direct(3, 1).unwrap();
        assert_eq!(got, vec![(tuple(&[1, 0, 0]), ratio(1, 4)), (tuple(&[1, 1, 0]), ratio(3, 4))]);
        assert_eq!(claim_direct(3, 0).unwrap(), vec![(tuple(&[0, 0, 0]), int(1))]);
    }

    #[test]
    fn closed_form_is_proportional() {
        for n in 3..=7 {
            for m in 0..=3 {
                assert_eq!(closed_form_ratio(n, m).unwrap(), closed_form_scale(n), "n={n} m={m}");
            }
        }
        assert_eq!(closed_form_scale(4), int(1));
        assert_eq!(closed_form_scale(5), ratio(1, 2));
    }
}
