//! Response rendering: deterministic JSON with both machine and display
//! forms for polynomials.

use serde_json::{json, Map, Value};

use momentsolve_core::nevanlinna;
use momentsolve_core::rational::format_rat;
use momentsolve_core::schur::{self, SchurChain};
use momentsolve_core::solver::{
    self, Classification, ParamDescriptor, SolutionReport, TauClass, TauCondition,
};
use momentsolve_core::{hankel, Polynomial, RationalFunction};

use crate::request::Command;

const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn input_error(message: &str) -> Value {
    json!({
        "version": VERSION,
        "status": "INPUT_ERROR",
        "error": message,
    })
}

/// Runs a validated command; returns the response document and exit code.
pub fn dispatch(command: &Command) -> (Value, u8) {
    match command {
        Command::Analyze { moments } => {
            let (cls, chain) = solver::classify_with_chain(moments);
            let alphas = hankel::recursive_generation(moments);
            let value = json!({
                "version": VERSION,
                "status": "OK",
                "classification": classification_json(&cls),
                "chain": chain_json(&chain),
                "recursively_generated": alphas.is_some(),
                "recursion": alphas.map(|a| a.iter().map(format_rat).collect::<Vec<_>>()),
            });
            (value, 0)
        }
        Command::Solve { instance } => {
            let report = solver::solve(instance);
            let code = if report.is_solvable() { 0 } else { 1 };
            (solve_json(&report), code)
        }
        Command::ApplyTau { instance, tau } => {
            let report = solver::solve(instance);
            match report.descriptor() {
                Err(_) => {
                    let value = json!({
                        "version": VERSION,
                        "status": "NOT_PARAMETRIZED",
                        "solve": solve_json(&report),
                    });
                    (value, 1)
                }
                Ok(desc) => {
                    let check = nevanlinna::check_parameter(tau, desc);
                    match desc.apply(tau) {
                        Err(e) => {
                            let value = json!({
                                "version": VERSION,
                                "status": "DEGENERATE_TRANSFORM",
                                "error": e.to_string(),
                            });
                            (value, 1)
                        }
                        Ok(phi) => {
                            let verdict = nevanlinna::verify_solution(
                                &instance.moments,
                                instance.kappa,
                                instance.kind,
                                &phi,
                            );
                            let code = if verdict.passed() { 0 } else { 1 };
                            let value = json!({
                                "version": VERSION,
                                "status": if verdict.passed() { "OK" } else { "PARAMETER_REJECTED" },
                                "phi": ratfun_json(&phi),
                                "parameter_check": check,
                                "verification": verdict,
                            });
                            (value, code)
                        }
                    }
                }
            }
        }
        Command::Verify { instance, phi } => {
            let verdict = nevanlinna::verify_solution(
                &instance.moments,
                instance.kappa,
                instance.kind,
                phi,
            );
            let code = if verdict.passed() { 0 } else { 1 };
            let value = json!({
                "version": VERSION,
                "status": if verdict.passed() { "PASS" } else { "FAIL" },
                "failed_check": verdict.failed_check,
                "detail": verdict.detail,
            });
            (value, code)
        }
        Command::Expand { phi, order } => match phi.laurent_expansion(*order) {
            Err(e) => (input_error(&format!("/phi: {e}")), 2),
            Ok(expansion) => {
                let coeffs: Vec<String> = expansion.coeffs().iter().map(format_rat).collect();
                let moments = if *order >= 1 {
                    expansion
                        .moments(order - 1)
                        .ok()
                        .map(|ms| ms.iter().map(format_rat).collect::<Vec<_>>())
                } else {
                    None
                };
                let value = json!({
                    "version": VERSION,
                    "status": "OK",
                    "coeffs": coeffs,
                    "moments": moments,
                });
                (value, 0)
            }
        },
    }
}

fn solve_json(report: &SolutionReport) -> Value {
    let mut doc = Map::new();
    doc.insert("version".into(), json!(VERSION));
    doc.insert("status".into(), json!(report.status_code()));
    match report {
        SolutionReport::Unique { phi } => {
            doc.insert("phi".into(), ratfun_json(phi));
        }
        SolutionReport::Parametrized { descriptor } => {
            doc.insert("descriptor".into(), descriptor_json(descriptor));
        }
        SolutionReport::Unsolvable { reason } => {
            doc.insert("reason".into(), serde_json::to_value(reason).expect("enum"));
        }
    }
    Value::Object(doc)
}

fn poly_json(p: &Polynomial) -> Value {
    json!({
        "coeffs": serde_json::to_value(p).expect("polynomial"),
        "display": p.display(),
    })
}

fn ratfun_json(phi: &RationalFunction) -> Value {
    json!({
        "num": poly_json(phi.num()),
        "den": poly_json(phi.den()),
        "display": phi.to_string(),
    })
}

fn descriptor_json(desc: &ParamDescriptor) -> Value {
    json!({
        "w": {
            "w11": poly_json(&desc.w.w11),
            "w12": poly_json(&desc.w.w12),
            "w21": poly_json(&desc.w.w21),
            "w22": poly_json(&desc.w.w22),
            "scale": format_rat(&desc.w.scale),
        },
        "tau_kappa": desc.tau_kappa,
        "tau_condition": match desc.tau_condition {
            TauCondition::E => "E",
            TauCondition::O => "O",
        },
        "tau_class": match desc.tau_class {
            TauClass::Plain => "PLAIN",
            TauClass::Subclass1 => "SUBCLASS_1",
        },
        "odd_shift": format_rat(&desc.odd_shift),
        "nu_candidates": desc.nu_candidates,
        "moment_scale": format_rat(&desc.moment_scale),
    })
}

fn classification_json(cls: &Classification) -> Value {
    json!({
        "category": serde_json::to_value(&cls.category).expect("enum"),
        "inertia": {
            "nu_plus": cls.inertia.nu_plus,
            "nu_zero": cls.inertia.nu_zero,
            "nu_minus": cls.inertia.nu_minus,
        },
        "normal_indices": cls.normal_indices.indices(),
        "rank_sn": cls.rank_sn,
        "hankel_rank": cls.hankel_rank,
        "residual": serde_json::to_value(&cls.residual).expect("sequence"),
        "m_res": cls.m_res,
        "nu0": cls.nu0,
    })
}

fn chain_json(chain: &SchurChain) -> Value {
    let steps: Vec<Value> = chain
        .steps
        .iter()
        .map(|st| {
            json!({
                "gap": st.gap,
                "p": poly_json(&st.p),
                "eps": st.eps,
                "a_sq": format_rat(&st.a_sq),
                "induced": serde_json::to_value(&st.induced).expect("sequence"),
            })
        })
        .collect();
    let resolvent = schur::resolvent(chain, chain.step_count()).expect("in range");
    json!({
        "steps": steps,
        "residual": serde_json::to_value(&chain.residual).expect("sequence"),
        "kappa_offsets": chain.kappa_offsets,
        "resolvent": {
            "w11": poly_json(&resolvent.w11),
            "w12": poly_json(&resolvent.w12),
            "w21": poly_json(&resolvent.w21),
            "w22": poly_json(&resolvent.w22),
            "scale": format_rat(&resolvent.scale),
        },
    })
}
