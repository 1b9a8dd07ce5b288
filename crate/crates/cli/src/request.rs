//! Request schema and validation.

use serde::Deserialize;

use momentsolve_core::rational::parse_rat;
use momentsolve_core::solver::{ProblemInstance, ProblemKind};
use momentsolve_core::{MomentSequence, Polynomial, RationalFunction};

/// Loose request as it arrives; field requirements depend on the command and
/// are checked in [`Request::validate`].
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    #[serde(default)]
    pub command: String,
    pub moments: Option<Vec<String>>,
    pub kappa: Option<usize>,
    pub kind: Option<String>,
    pub tau: Option<RatFunInput>,
    pub phi: Option<RatFunInput>,
    pub order: Option<usize>,
}

/// Rational function input: numerator and denominator, each either an
/// ascending coefficient list of rational strings or a polynomial string
/// like `"λ^2 - 2λ + 1"`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFunInput {
    pub num: PolyInput,
    pub den: PolyInput,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Coeffs(Vec<String>),
    Text(String),
}

/// A validated command, ready to run.
pub enum Command {
    Analyze {
        moments: MomentSequence,
    },
    Solve {
        instance: ProblemInstance,
    },
    ApplyTau {
        instance: ProblemInstance,
        tau: RationalFunction,
    },
    Verify {
        instance: ProblemInstance,
        phi: RationalFunction,
    },
    Expand {
        phi: RationalFunction,
        order: usize,
    },
}

pub fn split_csv(text: &str) -> Vec<String> {
    text.split(',').map(|p| p.trim().to_string()).collect()
}

pub fn ratfun_from_flags(
    num: Option<&str>,
    den: Option<&str>,
) -> Result<Option<RatFunInput>, String> {
    let as_input = |text: &str| {
        // a flag value containing the variable reads as polynomial text,
        // otherwise as a comma-separated coefficient list
        if text.chars().any(|c| matches!(c, 'λ' | 'x' | 'l' | 'L')) {
            PolyInput::Text(text.to_string())
        } else {
            PolyInput::Coeffs(split_csv(text))
        }
    };
    match (num, den) {
        (None, None) => Ok(None),
        (Some(n), Some(d)) => Ok(Some(RatFunInput {
            num: as_input(n),
            den: as_input(d),
        })),
        _ => Err("numerator and denominator flags must be given together".into()),
    }
}

fn parse_poly(input: &PolyInput, pointer: &str) -> Result<Polynomial, String> {
    match input {
        PolyInput::Coeffs(strings) => {
            let coeffs = strings
                .iter()
                .enumerate()
                .map(|(i, s)| parse_rat(s).map_err(|e| format!("{pointer}/{i}: {e}")))
                .collect::<Result<Vec<_>, String>>()?;
            Ok(Polynomial::new(coeffs))
        }
        PolyInput::Text(text) => {
            parse_poly_text(text).map_err(|e| format!("{pointer}: {e}"))
        }
    }
}

/// Parses polynomial text: terms like `λ^2`, `-3λ`, `1/2`, joined by + or -.
/// The variable may be written λ, x, l or L; exponents as `^k` or Unicode
/// superscripts.
pub fn parse_poly_text(text: &str) -> Result<Polynomial, String> {
    let superscripts = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut normalized = String::new();
    let mut in_superscript = false;
    for c in text.chars() {
        if let Some(d) = superscripts.iter().position(|s| *s == c) {
            if !in_superscript {
                normalized.push('^');
                in_superscript = true;
            }
            normalized.push(char::from_digit(d as u32, 10).unwrap());
            continue;
        }
        in_superscript = false;
        match c {
            '\u{2212}' => normalized.push('-'),
            'x' | 'l' | 'L' => normalized.push('λ'),
            _ => normalized.push(c),
        }
    }
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for c in normalized.chars() {
        if (c == '+' || c == '-') && !current.trim().is_empty() {
            terms.push(std::mem::take(&mut current));
        }
        if c == '+' || c == '-' || !c.is_whitespace() {
            current.push(c);
        }
    }
    if !current.trim().is_empty() {
        terms.push(current);
    }
    if terms.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<momentsolve_core::Rat> = Vec::new();
    for raw in &terms {
        let term = raw.trim_start_matches('+');
        let (coeff_text, exp) = match term.find('λ') {
            None => (term, 0usize),
            Some(pos) => {
                let after = &term[pos + 'λ'.len_utf8()..];
                let exp = if after.is_empty() {
                    1
                } else {
                    let digits = after.trim_start_matches('^');
                    digits
                        .parse::<usize>()
                        .map_err(|_| format!("bad exponent {after:?} in {raw:?}"))?
                };
                (term[..pos].trim_end_matches('*'), exp)
            }
        };
        let coeff = match coeff_text {
            "" => parse_rat("1"),
            "-" => parse_rat("-1"),
            other => parse_rat(other),
        }
        .map_err(|e| format!("bad coefficient in {raw:?}: {e}"))?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, momentsolve_core::Rat::from_integer(0.into()));
        }
        coeffs[exp] = coeffs[exp].clone() + coeff;
    }
    Ok(Polynomial::new(coeffs))
}

fn parse_ratfun(input: &RatFunInput, pointer: &str) -> Result<RationalFunction, String> {
    let num = parse_poly(&input.num, &format!("{pointer}/num"))?;
    let den = parse_poly(&input.den, &format!("{pointer}/den"))?;
    RationalFunction::new(num, den).map_err(|e| format!("{pointer}: {e}"))
}

impl Request {
    fn moments(&self) -> Result<MomentSequence, String> {
        let strings = self
            .moments
            .as_ref()
            .ok_or_else(|| "/moments: required".to_string())?;
        let entries = strings
            .iter()
            .enumerate()
            .map(|(i, s)| parse_rat(s).map_err(|e| format!("/moments/{i}: {e}")))
            .collect::<Result<Vec<_>, String>>()?;
        MomentSequence::new(entries).map_err(|e| format!("/moments: {e}"))
    }

    fn kind(&self) -> Result<ProblemKind, String> {
        match self.kind.as_deref() {
            None | Some("MP") | Some("mp") => Ok(ProblemKind::Mp),
            Some("IP") | Some("ip") => Ok(ProblemKind::Ip),
            Some(other) => Err(format!("/kind: expected MP or IP, got {other:?}")),
        }
    }

    fn instance(&self) -> Result<ProblemInstance, String> {
        Ok(ProblemInstance {
            moments: self.moments()?,
            kappa: self.kappa.ok_or_else(|| "/kappa: required".to_string())?,
            kind: self.kind()?,
        })
    }

    pub fn validate(&self) -> Result<Command, String> {
        match self.command.as_str() {
            "analyze" => Ok(Command::Analyze {
                moments: self.moments()?,
            }),
            "solve" => Ok(Command::Solve {
                instance: self.instance()?,
            }),
            "apply-tau" => {
                let tau_input = self
                    .tau
                    .as_ref()
                    .ok_or_else(|| "/tau: required".to_string())?;
                Ok(Command::ApplyTau {
                    instance: self.instance()?,
                    tau: parse_ratfun(tau_input, "/tau")?,
                })
            }
            "verify" => {
                let phi_input = self
                    .phi
                    .as_ref()
                    .ok_or_else(|| "/phi: required".to_string())?;
                Ok(Command::Verify {
                    instance: self.instance()?,
                    phi: parse_ratfun(phi_input, "/phi")?,
                })
            }
            "expand" => {
                let phi_input = self
                    .phi
                    .as_ref()
                    .ok_or_else(|| "/phi: required".to_string())?;
                Ok(Command::Expand {
                    phi: parse_ratfun(phi_input, "/phi")?,
                    order: self.order.ok_or_else(|| "/order: required".to_string())?,
                })
            }
            "" => Err("/command: required".into()),
            other => Err(format!(
                "/command: unknown command {other:?} (expected analyze, solve, apply-tau, verify or expand)"
            )),
        }
    }
}
