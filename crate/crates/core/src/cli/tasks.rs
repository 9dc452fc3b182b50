use serde::Serialize;
use serde_json::{json, Value};

use super::{Failure, Instance, TaskResult, TaskSpec};
use crate::artinian::{ArtinianAlgebra, HilbertSeries};
use crate::error::Error;
use crate::gr::{
    gr_algebra, hilbert_triple_check, in_prime_ideal, normalize_z, verify_remark37, verify_theorem1,
};
use crate::groebner::IdealHandle;
use crate::jordan::{
    csm_decompose, jordan_profile, verify_cor48, verify_prop46, verify_prop66, verify_theorem2,
    CsmDecomposition,
};
use crate::lefschetz::{
    self, check, find_witness, verify_tensor_criterion, LefschetzVerdict, Property,
};
use crate::poly::{MonomialOrder, VariableSet};

/// Tasks run by `verify` when neither the manifest nor `--task` names any.
pub const DEFAULT_VERIFY: &[&str] = &[
    "hilbert-triple",
    "remark37",
    "theorem1",
    "prop46",
    "theorem2",
    "prop66",
    "cor48",
];

pub fn run_tasks(inst: &Instance, specs: &[TaskSpec]) -> Result<Vec<TaskResult>, Failure> {
    specs.iter().map(|s| run_task(inst, s)).collect()
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn computed(task: &str, result: Value) -> TaskResult {
    TaskResult {
        task: task.to_string(),
        passed: None,
        result,
    }
}

fn asserted(task: &str, passed: bool, result: Value) -> TaskResult {
    TaskResult {
        task: task.to_string(),
        passed: Some(passed),
        result,
    }
}

pub(crate) fn series_json(h: &HilbertSeries) -> Value {
    json!({ "series": h.to_string(), "offset": h.offset(), "coefficients": h.coeffs() })
}

/// Verdict with the witness rendered in the ring's variables.
pub(crate) fn verdict_json(v: &LefschetzVerdict, vars: &VariableSet) -> Value {
    let mut out = value(v);
    if let Some(g) = v.witness() {
        out["witness"] = json!(g.to_string_in(vars));
    }
    out
}

pub(crate) fn ideal_json(ideal: &IdealHandle) -> Value {
    json!({
        "groebner_basis": ideal.basis_strings(),
        "minimal_generators": ideal
            .minimal_generating_set()
            .iter()
            .map(|g| g.to_string_in(ideal.vars()))
            .collect::<Vec<_>>(),
    })
}

pub(crate) fn csm_json(dec: &CsmDecomposition, vars: &VariableSet) -> Value {
    let modules: Vec<Value> = dec
        .modules
        .iter()
        .map(|m| {
            let annihilator = m
                .module
                .annihilator()
                .map(|(shift, ann)| json!({ "shift": shift, "ideal": ideal_json(&ann) }));
            json!({
                "size": m.size,
                "multiplicity": m.multiplicity,
                "hilbert": series_json(&m.hilbert),
                "tilde_hilbert": series_json(&m.tilde_hilbert),
                "generator_count": m.module.generator_count(),
                "annihilator": annihilator,
            })
        })
        .collect();
    json!({
        "z": dec.z.to_string_in(vars),
        "profile": dec.profile,
        "modules": modules,
        "tilde_sum": series_json(&dec.tilde_sum()),
    })
}

fn algebra_json(a: &ArtinianAlgebra) -> Value {
    json!({
        "summary": a.summary(),
        "hilbert": a.hilbert().to_string(),
        "socle_dims": a.socle_dims(),
        "gorenstein": a.is_gorenstein(),
        "stats": lefschetz::stats(a.hilbert()),
    })
}

fn run_task(inst: &Instance, spec: &TaskSpec) -> Result<TaskResult, Failure> {
    let name = spec.name();
    let vars = &inst.vars;
    let z = &inst.z;
    let params = &inst.params;
    let res = match name {
        "hilbert" => computed(name, algebra_json(&inst.algebra()?)),
        "gb" => {
            let ideal = &inst.ideal;
            let gb = ideal.grevlex();
            computed(
                name,
                json!({
                    "groebner_basis": ideal.basis_strings(),
                    "leading_monomials": gb
                        .leading_monomials()
                        .iter()
                        .map(|m| crate::poly::Polynomial::monomial(m.clone(), num_traits::One::one()).to_string_in(vars))
                        .collect::<Vec<_>>(),
                    "minimal_generators": ideal_json(ideal)["minimal_generators"].clone(),
                    "minimal_generator_degrees": ideal.minimal_generators(),
                    "complete_intersection": ideal.minimal_generator_count() == vars.len(),
                }),
            )
        }
        "wlp" | "slp" => {
            let a = inst.algebra()?;
            let property = if name == "wlp" {
                Property::Wlp
            } else {
                Property::Slp
            };
            let v = find_witness(&a, property, params);
            let at_z = check(&a, property, z);
            computed(
                name,
                json!({
                    "search": verdict_json(&v, vars),
                    "z": inst.z_string(),
                    "at_z": verdict_json(&at_z, vars),
                }),
            )
        }
        "jordan" => {
            let a = inst.algebra()?;
            computed(
                name,
                json!({ "z": inst.z_string(), "profile": jordan_profile(&a, z)? }),
            )
        }
        "csm" => {
            let a = inst.algebra()?;
            computed(name, csm_json(&csm_decompose(&a, z)?, vars))
        }
        "gr" => {
            let a = inst.algebra()?;
            let gr = gr_algebra(&a, z)?;
            let rows: Vec<Vec<String>> = (0..vars.len())
                .map(|i| {
                    gr.change
                        .forward
                        .row(i)
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .collect();
            let same = verify_remark37(&a, z)?;
            computed(
                name,
                json!({
                    "z": inst.z_string(),
                    "substitution": rows,
                    "ideal": ideal_json(gr.algebra.ideal()),
                    "hilbert": gr.algebra.dims(),
                    "jordan_algebra": same.algebra,
                    "jordan_graded": same.graded,
                }),
            )
        }
        "inprime" => {
            let (normalized, change) = normalize_z(&inst.ideal, z)?;
            let initial = inst.ideal.leading_term_ideal(MonomialOrder::Grevlex);
            computed(
                name,
                json!({
                    "z": inst.z_string(),
                    "coordinates_changed": !change.is_identity(),
                    "initial": ideal_json(&initial),
                    "in_prime": ideal_json(&in_prime_ideal(&normalized)?),
                }),
            )
        }
        "hilbert-triple" => {
            let t = hilbert_triple_check(&inst.ideal, z)?;
            asserted(name, t.equal, value(&t))
        }
        "remark37" => {
            let r = verify_remark37(&inst.algebra()?, z)?;
            asserted(name, r.equal, value(&r))
        }
        "theorem1" => {
            let r = verify_theorem1(&inst.algebra()?, z, params)?;
            asserted(name, !r.has_contradiction(), value(&r))
        }
        "prop46" => {
            let r = verify_prop46(&inst.algebra()?, z)?;
            asserted(name, r.all_hold(), value(&r))
        }
        "theorem2" => {
            let r = verify_theorem2(&inst.algebra()?, z, params)?;
            asserted(name, r.consistent, value(&r))
        }
        "prop66" => match verify_prop66(&inst.algebra()?, z) {
            Ok(r) => asserted(name, r.all_principal, value(&r)),
            Err(Error::HypothesisFails { k, reason }) => asserted(
                name,
                true,
                json!({ "applicable": false, "hypothesis_fails": { "k": k, "reason": reason } }),
            ),
            Err(e) => return Err(e.into()),
        },
        "cor48" => {
            let r = verify_cor48(&inst.algebra()?, z, params)?;
            let ok = !r.hypothesis
                || (r.verdict.as_ref().is_some_and(LefschetzVerdict::is_witness)
                    && r.rank_criterion != Some(false));
            asserted(name, ok, value(&r))
        }
        "tensor" => {
            let r = verify_tensor_criterion(&inst.algebra()?, spec.alpha().unwrap_or(3), params)?;
            asserted(name, r.consistent, value(&r))
        }
        other => return Err(Failure::Malformed(format!("unknown task `{other}`"))),
    };
    Ok(res)
}
