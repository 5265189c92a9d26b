use std::collections::BTreeMap;
use std::io::Write;

use gtkit::gt::enumerate_patterns;
use gtkit::linalg::rational_json;
use gtkit::ortho::{
    block_support, claim_direct, claim_value_sq, comb_identity_check, comb_identity_json, decay_experiment,
    eta_coefficients, eta_direct, identity1_check, identity1_json, write_decay_csv,
};
use gtkit::rep::{dimension, matrix_ekk, matrix_epq};
use gtkit::subgroups::{blocks_of, fixed_vectors, isotypic_projection, named_subgroups, restrict_types};
use gtkit::verify::{run_suite, Fault, Scale};
use gtkit::{Exec, HighestWeight, Irrep, Rational, RootSubset, SubgroupLabel, ZeroWeightTuple};
use serde_json::{json, Value};

use crate::{Command, Failure, OperatorKind, Suite};

type Out<'a> = &'a mut Vec<u8>;

fn emit(out: Out, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, v).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn hw(s: &str) -> Result<HighestWeight, Failure> {
    Ok(HighestWeight::parse(s)?)
}

fn label_for(s: &RootSubset, text: &str) -> Result<SubgroupLabel, Failure> {
    let l = SubgroupLabel::parse(text)?;
    let blocks = blocks_of(s);
    if !l.fits(&blocks) {
        return Err(usage(format!("label {text:?} does not match blocks {blocks} of S={s}")));
    }
    Ok(l)
}

fn check_nm(n: usize, m: i64) -> Result<(), Failure> {
    if n < 3 || m < 0 {
        return Err(usage(format!("need n >= 3 and m >= 0, got n={n}, m={m}")));
    }
    Ok(())
}

fn tuple_map(values: impl IntoIterator<Item = (ZeroWeightTuple, Rational)>) -> BTreeMap<String, String> {
    values.into_iter().map(|(t, v)| (t.to_string(), rational_json(&v))).collect()
}

pub fn run(command: &Command, exec: Exec, out: Out) -> Result<(), Failure> {
    match command {
        Command::Patterns { hw: h } => {
            let h = hw(h)?;
            let list: Vec<Value> = enumerate_patterns(&h)
                .iter()
                .map(|p| json!({"pattern": p, "weight": p.weight().entries(), "norm_sq": rational_json(&p.norm_sq())}))
                .collect();
            emit(out, &Value::Array(list))
        }
        Command::Dim { hw: h } => {
            let h = hw(h)?;
            emit(out, &json!({"lambda": h.entries(), "dim": dimension(&h), "patterns": enumerate_patterns(&h).len()}))
        }
        Command::Gen { hw: h, p, q } => {
            let h = hw(h)?;
            if *p == 0 || *q == 0 || *p > h.n() || *q > h.n() {
                return Err(usage(format!("generator indices must lie in 1..={}", h.n())));
            }
            let rep = Irrep::with_exec(&h, exec);
            let g = if p == q { matrix_ekk(&rep, *p)? } else { matrix_epq(&rep, *p, *q)? };
            emit(out, &g.to_json(&rep))
        }
        Command::Branch { hw: h, s } => {
            let h = hw(h)?;
            let s = RootSubset::parse(h.n(), s)?;
            let rep = Irrep::with_exec(&h, exec);
            let types: Vec<Value> = restrict_types(&rep, &s)
                .into_iter()
                .map(|(l, m)| json!({"sigma": l, "label": l.to_string(), "mult": m, "dim": l.dim()}))
                .collect();
            emit(out, &json!({"lambda": h.entries(), "S": s.to_vec(), "blocks": blocks_of(&s).to_string(), "types": types}))
        }
        Command::Project { hw: h, s, sigma } => {
            let h = hw(h)?;
            let s = RootSubset::parse(h.n(), s)?;
            let sigma = label_for(&s, sigma)?;
            let rep = Irrep::with_exec(&h, exec);
            let p = isotypic_projection(&rep, &s, &sigma)?;
            let mut v = p.to_json(&rep);
            v["rank"] = json!(p.rank);
            emit(out, &v)
        }
        Command::Fixed { hw: h, s } => {
            let h = hw(h)?;
            let s = RootSubset::parse(h.n(), s)?;
            let rep = Irrep::with_exec(&h, exec);
            let vectors: Vec<Vec<String>> =
                fixed_vectors(&rep, &s).iter().map(|v| v.iter().map(rational_json).collect()).collect();
            emit(out, &json!({"lambda": h.entries(), "S": s.to_vec(), "vectors": vectors}))
        }
        Command::Eta { n, m, direct } => {
            check_nm(*n, *m)?;
            let e = eta_coefficients(*n, *m)?;
            let mut v = json!({
                "n": n,
                "m": m,
                "normalizer": rational_json(&e.normalizer),
                "coefficients": tuple_map(e.coeffs.clone()),
            });
            if *direct {
                let (rep, vec) = eta_direct(*n, *m)?;
                let seed = &vec[rep.index_of(&ZeroWeightTuple::top(*n, *m).pattern()).expect("seed pattern")];
                let scaled: Vec<(ZeroWeightTuple, Rational)> = e
                    .coeffs
                    .keys()
                    .map(|t| (t.clone(), &vec[rep.index_of(&t.pattern()).expect("zero weight pattern")] / seed))
                    .collect();
                let agree = scaled.iter().all(|(t, x)| e.coeffs[t] == *x);
                v["direct"] = json!(tuple_map(scaled));
                v["match"] = json!(agree);
                emit(out, &v)?;
                if !agree {
                    return Err(Failure::Check("recurrence and direct solution disagree".into()));
                }
                return Ok(());
            }
            emit(out, &v)
        }
        Command::Claim { n, m, direct } => {
            check_nm(*n, *m)?;
            let tuples = gtkit::gt::zero_weight_tuples(*n, *m)?;
            let values = tuples.iter().map(|t| Ok((t.clone(), claim_value_sq(*n, *m, t)?))).collect::<Result<Vec<_>, Failure>>()?;
            let parseval: Rational = values.iter().map(|(_, v)| v.clone()).sum();
            let mut v = json!({"n": n, "m": m, "values": tuple_map(values.clone()), "parseval": rational_json(&parseval)});
            if *direct {
                let d = claim_direct(*n, *m)?;
                let agree = d == values;
                v["direct"] = json!(tuple_map(d));
                v["match"] = json!(agree);
                emit(out, &v)?;
                if !agree {
                    return Err(Failure::Check("closed form and direct values disagree".into()));
                }
                return Ok(());
            }
            emit(out, &v)
        }
        Command::Identities { n, m, p } => {
            if *n < 3 || *m < 0 || *p < 0 {
                return Err(usage(format!("need n >= 3 and m, p >= 0, got n={n}, m={m}, p={p}")));
            }
            let c = comb_identity_check(*n, *m)?;
            let i = identity1_check(*m, *p)?;
            emit(out, &json!({"combinatorial": comb_identity_json(*n, *m, &c), "identity1": identity1_json(*m, *p, &i)}))?;
            if !(c.equal() && i.equal()) {
                return Err(Failure::Check("identity check failed".into()));
            }
            Ok(())
        }
        Command::Decay { n, m_max, s, t, sigma, tau, json: as_json } => {
            check_nm(*n, *m_max)?;
            let (s0, t0) = named_subgroups(*n)?;
            let s = match s {
                Some(x) => RootSubset::parse(*n, x)?,
                None => s0,
            };
            let t = match t {
                Some(x) => RootSubset::parse(*n, x)?,
                None => t0,
            };
            let sigma = match sigma {
                Some(x) => label_for(&s, x)?,
                None => SubgroupLabel::trivial(&blocks_of(&s)),
            };
            let tau = match tau {
                Some(x) => label_for(&t, x)?,
                None => SubgroupLabel::trivial(&blocks_of(&t)),
            };
            let rows = decay_experiment(*n, &s, &sigma, &t, &tau, *m_max, exec)?;
            if *as_json {
                emit(out, &Value::Array(rows.iter().map(|r| r.to_json()).collect()))
            } else {
                Ok(write_decay_csv(&rows, out)?)
            }
        }
        Command::Support { hw: h, s, operator, p, q, t, tau } => {
            let h = hw(h)?;
            let s = RootSubset::parse(h.n(), s)?;
            let describe;
            let build: Box<dyn Fn(&Irrep) -> Result<gtkit::SparseMatrix, Failure>> = match operator {
                OperatorKind::Generator => {
                    let (Some(p), Some(q)) = (*p, *q) else {
                        return Err(usage("--operator generator needs --p and --q"));
                    };
                    if p == 0 || q == 0 || p > h.n() || q > h.n() {
                        return Err(usage(format!("generator indices must lie in 1..={}", h.n())));
                    }
                    describe = json!({"kind": "generator", "p": p, "q": q});
                    Box::new(move |rep| Ok(rep.e(p, q).clone()))
                }
                OperatorKind::Projection => {
                    let (Some(t), Some(tau)) = (t, tau) else {
                        return Err(usage("--operator projection needs --T and --tau"));
                    };
                    let t = RootSubset::parse(h.n(), t)?;
                    let tau = label_for(&t, tau)?;
                    describe = json!({"kind": "projection", "T": t.to_vec(), "tau": tau});
                    Box::new(move |rep| Ok(isotypic_projection(rep, &t, &tau)?.matrix))
                }
            };
            let rep = Irrep::with_exec(&h, exec);
            let a = build(&rep)?;
            let mut v = block_support(&rep, &a, &s, exec)?.to_json();
            v["lambda"] = json!(h.entries());
            v["operator"] = describe;
            emit(out, &v)
        }
        Command::Verify { suite, inject_fault } => {
            let scale = match suite {
                Suite::Fast => Scale::Fast,
                Suite::Full => Scale::Full,
            };
            let fault = inject_fault.then_some(Fault::CorruptRaise);
            let results = run_suite(scale, exec, fault);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} of {} criteria passed", results.len() - failed, results.len())?;
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} criteria failed")));
            }
            Ok(())
        }
    }
}
