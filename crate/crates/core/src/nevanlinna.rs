//! Real rational functions as generalized Nevanlinna functions.
//!
//! A real rational function always has a finite negative index kappa: the
//! number of negative squares of its Nevanlinna kernel. By Kronecker's
//! theorem it can be read off exactly as nu_minus of the Hankel matrix built
//! from the function's expansion at infinity, once the Hankel size reaches
//! the degree of the function.
//!
//! The negative squares sit at the poles in the open upper half-plane and at
//! real points or infinity that are generalized poles of nonpositive type
//! (GPNT). For a real rational function the defining nontangential limit
//! conditions collapse to an inspection of the local leading term
//! c (z - a)^k (evaluated symbolically along z = a + iy): an even-order pole
//! carries multiplicity k/2 regardless of sign, an odd-order pole carries
//! (k-1)/2 or (k+1)/2 according to the sign of c. Generalized zeros of
//! nonpositive type (GZNT) are the GPNTs of -1/phi and follow dual rules.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hankel::{HankelMatrix, MomentSequence};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::rational::{format_rat, sign_of, Rat};
use crate::schur::PolyMatrix2x2;
use crate::solver::{ParamDescriptor, ProblemKind, TauCondition};

/// A real point or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Rat),
    Infinity,
}

/// Index data of a rational function: total negative index and the
/// generalized pole/zero multiplicities at 0 and at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnIndexReport {
    pub kappa: usize,
    pub pi_inf: usize,
    pub kappa_inf: usize,
    pub kappa_0: usize,
    pub pi_0: usize,
}

/// Negative index of a strictly proper rational function by Kronecker's
/// theorem: expand to order 2n + 1 with n = deg den, build the Hankel matrix
/// of the moments and count its negative eigenvalues.
pub fn kronecker_kappa(phi: &RationalFunction) -> Result<usize> {
    if phi.is_zero() {
        return Ok(0);
    }
    if !phi.is_strictly_proper() {
        return Err(Error::ImproperFunction {
            num_deg: phi.num().degree(),
            den_deg: phi.den().degree(),
        });
    }
    let n = phi.den().degree() as usize;
    let expansion = phi.laurent_expansion(2 * n + 1)?;
    let moments = expansion.moments(2 * n)?;
    let s = MomentSequence::from_entries(moments);
    Ok(HankelMatrix::full(&s)?.inertia().nu_minus)
}

/// Total negative index of an arbitrary real rational function: the
/// Kronecker index of its strictly proper part plus the GPNT multiplicity at
/// infinity carried by the polynomial part.
pub fn negative_index(phi: &RationalFunction) -> usize {
    if phi.is_zero() {
        return 0;
    }
    let (_, rem) = phi.num().divrem(phi.den()).expect("nonzero denominator");
    let proper =
        RationalFunction::new(rem, phi.den().clone()).expect("denominator unchanged");
    let from_infinity = gpnt_multiplicity(phi, &Point::Infinity);
    kronecker_kappa(&proper).expect("strictly proper by construction") + from_infinity
}

/// GPNT multiplicity of phi at a real point or infinity; 0 when the point is
/// a positive-type pole or not a pole at all.
pub fn gpnt_multiplicity(phi: &RationalFunction, point: &Point) -> usize {
    match point {
        Point::Finite(alpha) => {
            let Some((ord, lead)) = phi.leading_at(alpha) else {
                return 0;
            };
            if ord >= 0 {
                return 0;
            }
            let p = (-ord) as usize;
            if p.is_multiple_of(2) {
                p / 2
            } else if sign_of(&lead) < 0 {
                (p - 1) / 2
            } else {
                p.div_ceil(2)
            }
        }
        Point::Infinity => {
            let Some((deg, lead)) = phi.leading_at_infinity() else {
                return 0;
            };
            if deg <= 0 {
                return 0;
            }
            let d = deg as usize;
            if d.is_multiple_of(2) {
                d / 2
            } else if sign_of(&lead) > 0 {
                (d - 1) / 2
            } else {
                d.div_ceil(2)
            }
        }
    }
}

/// GZNT multiplicity of phi at a real point or infinity; equals the GPNT
/// multiplicity of -1/phi there.
pub fn gznt_multiplicity(phi: &RationalFunction, point: &Point) -> usize {
    match point {
        Point::Finite(beta) => {
            let Some((ord, lead)) = phi.leading_at(beta) else {
                return 0;
            };
            if ord <= 0 {
                return 0;
            }
            let k = ord as usize;
            if k.is_multiple_of(2) {
                k / 2
            } else if sign_of(&lead) > 0 {
                (k - 1) / 2
            } else {
                k.div_ceil(2)
            }
        }
        Point::Infinity => {
            let Some((deg, lead)) = phi.leading_at_infinity() else {
                return 0;
            };
            if deg >= 0 {
                return 0;
            }
            let d = (-deg) as usize;
            if d.is_multiple_of(2) {
                d / 2
            } else if sign_of(&lead) < 0 {
                (d - 1) / 2
            } else {
                d.div_ceil(2)
            }
        }
    }
}

/// Index data at 0 and infinity together with the total negative index.
pub fn index_report(phi: &RationalFunction) -> GnIndexReport {
    let zero = Point::Finite(Rat::zero());
    GnIndexReport {
        kappa: negative_index(phi),
        pi_inf: gznt_multiplicity(phi, &Point::Infinity),
        kappa_inf: gpnt_multiplicity(phi, &Point::Infinity),
        kappa_0: gpnt_multiplicity(phi, &zero),
        pi_0: gznt_multiplicity(phi, &zero),
    }
}

/// Applies the linear fractional transform of a 2x2 polynomial matrix:
/// (w11 tau + w12) / (w21 tau + w22), reduced to canonical form.
pub fn apply_lft(w: &PolyMatrix2x2, tau: &RationalFunction) -> Result<RationalFunction> {
    let num = &(&w.w11 * tau.num()) + &(&w.w12 * tau.den());
    let den = &(&w.w21 * tau.num()) + &(&w.w22 * tau.den());
    if den.is_zero() {
        return Err(Error::DegenerateTransform);
    }
    RationalFunction::new(num, den)
}

/// Growth and class data of a parameter candidate, relative to a
/// parametrization descriptor.
///
/// The descriptor's odd-case condition constrains tau + odd_shift, so the
/// growth flags are evaluated on the shifted function; the negative index is
/// unaffected by a constant shift. For rational parameters membership in the
/// kappa-prime subclass reduces to properness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterCheck {
    pub kappa_tau: usize,
    pub satisfies_e: bool,
    pub satisfies_o: bool,
    pub in_subclass_1: bool,
}

impl ParameterCheck {
    /// True when tau meets the descriptor's growth condition and has exactly
    /// the required negative index.
    pub fn admissible_for(&self, desc: &ParamDescriptor) -> bool {
        let growth = match desc.tau_condition {
            TauCondition::E => self.satisfies_e,
            TauCondition::O => self.satisfies_o,
        };
        growth && self.kappa_tau == desc.tau_kappa
    }
}

pub fn check_parameter(tau: &RationalFunction, desc: &ParamDescriptor) -> ParameterCheck {
    let shifted = if desc.odd_shift.is_zero() {
        tau.clone()
    } else {
        tau.add(&RationalFunction::constant(desc.odd_shift.clone()))
    };
    ParameterCheck {
        kappa_tau: negative_index(&shifted),
        satisfies_e: shifted.is_proper(),
        satisfies_o: shifted.is_strictly_proper(),
        in_subclass_1: shifted.is_proper(),
    }
}

/// Outcome of verifying a candidate solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub status: VerificationStatus,
    /// Which check failed first: "properness", "moments" or "kappa".
    pub failed_check: Option<String>,
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerificationStatus {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Pass
    }

    fn pass() -> Self {
        VerificationReport {
            status: VerificationStatus::Pass,
            failed_check: None,
            detail: None,
        }
    }

    fn fail(check: &str, detail: String) -> Self {
        VerificationReport {
            status: VerificationStatus::Fail,
            failed_check: Some(check.to_string()),
            detail: Some(detail),
        }
    }
}

/// Checks that phi solves the moment (or interpolation) problem for
/// (s, kappa): phi vanishes at infinity, its expansion reproduces every
/// prescribed moment, and its negative index is exactly kappa.
///
/// For rational candidates the subclass constraints that separate the moment
/// problem from the interpolation problem in the odd case hold automatically,
/// so the verdict does not depend on `kind`; it is accepted to mirror the
/// problem statement.
pub fn verify_solution(
    s: &MomentSequence,
    kappa: usize,
    kind: ProblemKind,
    phi: &RationalFunction,
) -> VerificationReport {
    let _ = kind;
    if !phi.is_zero() && !phi.is_strictly_proper() {
        return VerificationReport::fail(
            "properness",
            format!(
                "deg num = {} must be < deg den = {}",
                phi.num().degree(),
                phi.den().degree()
            ),
        );
    }
    let ell = s.ell() as usize;
    let expansion = match phi.laurent_expansion(ell + 1) {
        Ok(e) => e,
        Err(e) => return VerificationReport::fail("properness", e.to_string()),
    };
    let moments = expansion.moments(ell).expect("constant term vanishes");
    for (j, (got, want)) in moments.iter().zip(s.entries()).enumerate() {
        if got != want {
            return VerificationReport::fail(
                "moments",
                format!(
                    "moment {} mismatch: expansion gives {}, prescribed {}",
                    j,
                    format_rat(got),
                    format_rat(want)
                ),
            );
        }
    }
    let actual = kronecker_kappa(phi).expect("checked proper");
    if actual != kappa {
        return VerificationReport::fail(
            "kappa",
            format!("negative index is {actual}, required {kappa}"),
        );
    }
    VerificationReport::pass()
}

/// Helper for building simple rational functions in tests and callers:
/// lambda as a function.
pub fn lambda() -> RationalFunction {
    RationalFunction::from_poly(Polynomial::monomial(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::solver::{self, ProblemInstance};

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(num), Polynomial::from_ints(den)).unwrap()
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_kappa(&rf(&[-1], &[-1, 1])).unwrap(), 0);
        assert_eq!(kronecker_kappa(&rf(&[1], &[0, 1])).unwrap(), 1);
        assert_eq!(kronecker_kappa(&rf(&[0, -1], &[-1, 0, 1])).unwrap(), 0);
        assert_eq!(kronecker_kappa(&RationalFunction::zero()).unwrap(), 0);
        assert!(kronecker_kappa(&rf(&[1, 1], &[0, 1])).is_err());
    }

    #[test]
    fn kronecker_sees_upper_half_plane_poles() {
        // 1/(lambda^2 + 1) has one pole in the upper half-plane
        assert_eq!(kronecker_kappa(&rf(&[-1], &[1, 0, 1])).unwrap(), 1);
        assert_eq!(kronecker_kappa(&rf(&[1], &[1, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn gpnt_examples() {
        let zero = Point::Finite(int(0));
        assert_eq!(gpnt_multiplicity(&rf(&[1], &[0, 1]), &zero), 1);
        assert_eq!(gpnt_multiplicity(&rf(&[-1], &[0, 1]), &zero), 0);
        assert_eq!(
            gpnt_multiplicity(&rf(&[0, 0, 0, 1], &[1]), &Point::Infinity),
            1
        );
        // even-order pole counts half its order, sign-independent
        assert_eq!(gpnt_multiplicity(&rf(&[1], &[0, 0, 1]), &zero), 1);
        assert_eq!(gpnt_multiplicity(&rf(&[-1], &[0, 0, 1]), &zero), 1);
        // not a pole
        assert_eq!(gpnt_multiplicity(&rf(&[1, 1], &[2]), &zero), 0);
        // -lambda grows like a negative odd power: one negative square
        assert_eq!(
            gpnt_multiplicity(&rf(&[0, -1], &[1]), &Point::Infinity),
            1
        );
        assert_eq!(gpnt_multiplicity(&rf(&[0, 1], &[1]), &Point::Infinity), 0);
    }

    #[test]
    fn gznt_examples() {
        let zero = Point::Finite(int(0));
        assert_eq!(
            gznt_multiplicity(&rf(&[-1], &[0, 0, 0, 1]), &Point::Infinity),
            1
        );
        assert_eq!(
            gznt_multiplicity(&rf(&[-1], &[0, 1]), &Point::Infinity),
            0
        );
        assert_eq!(gznt_multiplicity(&rf(&[0, 0, 0, 1], &[1]), &zero), 1);
        assert_eq!(gznt_multiplicity(&rf(&[1], &[0, 1]), &Point::Infinity), 1);
        // zero of even order
        assert_eq!(gznt_multiplicity(&rf(&[0, 0, 1], &[1]), &zero), 1);
    }

    #[test]
    fn gznt_is_gpnt_of_negated_reciprocal() {
        let points = [
            Point::Finite(int(0)),
            Point::Finite(int(1)),
            Point::Finite(int(-2)),
            Point::Infinity,
        ];
        let functions = [
            rf(&[1], &[0, 1]),
            rf(&[0, 0, 0, 1], &[1, 1]),
            rf(&[-1, 0, 2], &[0, 0, 1]),
            rf(&[0, 5], &[-1, 0, 1]),
            rf(&[1, -2, 1], &[0, 3, 1]),
        ];
        for phi in &functions {
            let inv = phi.neg_reciprocal().unwrap();
            for pt in &points {
                assert_eq!(
                    gznt_multiplicity(phi, pt),
                    gpnt_multiplicity(&inv, pt),
                    "phi = {phi}, point = {pt:?}"
                );
            }
        }
    }

    #[test]
    fn negative_index_handles_polynomial_part() {
        // lambda is Nevanlinna, kappa = 0
        assert_eq!(negative_index(&rf(&[0, 1], &[1])), 0);
        // lambda^2 and -lambda^2 both carry one negative square at infinity
        assert_eq!(negative_index(&rf(&[0, 0, 1], &[1])), 1);
        assert_eq!(negative_index(&rf(&[0, 0, -1], &[1])), 1);
        // lambda^3 carries one, -lambda^3 two
        assert_eq!(negative_index(&rf(&[0, 0, 0, 1], &[1])), 1);
        assert_eq!(negative_index(&rf(&[0, 0, 0, -1], &[1])), 2);
        // mixed: lambda + 1/lambda has kappa = 1 from the pole at 0
        assert_eq!(negative_index(&rf(&[1, 0, 1], &[0, 1])), 1);
        // constant offset does not change the index
        assert_eq!(negative_index(&rf(&[1, -1], &[-1, 1])), 0);
    }

    #[test]
    fn index_report_shape() {
        let phi = rf(&[1], &[0, 0, 0, 1]); // 1/lambda^3
        let report = index_report(&phi);
        assert_eq!(report.kappa, 2);
        assert_eq!(report.kappa_0, 2); // pole of order 3, positive leading
        assert_eq!(report.pi_inf, 2); // dual zero at infinity
        assert_eq!(report.kappa_inf, 0);
        assert_eq!(report.pi_0, 0);
        assert!(report.kappa >= report.kappa_inf.max(report.kappa_0));
    }

    #[test]
    fn apply_lft_examples() {
        let w = PolyMatrix2x2 {
            w11: Polynomial::zero(),
            w12: Polynomial::one(),
            w21: Polynomial::from_ints(&[-1]),
            w22: Polynomial::from_ints(&[0, 1]),
            scale: int(1),
        };
        let phi = apply_lft(&w, &RationalFunction::zero()).unwrap();
        assert_eq!(phi, rf(&[1], &[0, 1]));

        let id = PolyMatrix2x2::identity();
        let tau = rf(&[1, 2], &[3, 0, 1]);
        assert_eq!(apply_lft(&id, &tau).unwrap(), tau);

        let w2 = PolyMatrix2x2 {
            w11: Polynomial::from_ints(&[-1]),
            w12: Polynomial::from_ints(&[0, 0, 0, -1]),
            w21: Polynomial::from_ints(&[0, 1]),
            w22: Polynomial::from_ints(&[0, 0, -1, 0, 1]),
            scale: int(1),
        };
        assert_eq!(
            apply_lft(&w2, &RationalFunction::zero()).unwrap(),
            rf(&[0, -1], &[-1, 0, 1])
        );

        // degenerate: w21 tau + w22 identically zero
        let w3 = PolyMatrix2x2 {
            w11: Polynomial::one(),
            w12: Polynomial::one(),
            w21: Polynomial::one(),
            w22: Polynomial::from_ints(&[-1]),
            scale: int(1),
        };
        assert!(matches!(
            apply_lft(&w3, &RationalFunction::constant(int(1))),
            Err(Error::DegenerateTransform)
        ));
    }

    #[test]
    fn check_parameter_examples() {
        // a descriptor with even condition and no shift
        let inst = ProblemInstance {
            moments: MomentSequence::from_ints(&[-1, 0]),
            kappa: 1,
            kind: ProblemKind::Mp,
        };
        let report = solver::solve(&inst);
        let desc = report.descriptor().unwrap();

        let tau = rf(&[-1], &[0, 1]);
        let chk = check_parameter(&tau, desc);
        assert_eq!(chk.kappa_tau, 0);
        assert!(chk.satisfies_e && chk.satisfies_o && chk.in_subclass_1);

        let tau = rf(&[0, 1], &[1]); // lambda
        let chk = check_parameter(&tau, desc);
        assert!(!chk.satisfies_e && !chk.satisfies_o);

        let chk = check_parameter(&RationalFunction::zero(), desc);
        assert_eq!(chk.kappa_tau, 0);
        assert!(chk.satisfies_e && chk.satisfies_o && chk.in_subclass_1);
        assert!(chk.admissible_for(desc));
    }

    #[test]
    fn verify_solution_examples() {
        let s = MomentSequence::from_ints(&[1, 0, 1, 0, 1]);
        let good = rf(&[0, -1], &[-1, 0, 1]);
        assert!(verify_solution(&s, 0, ProblemKind::Mp, &good).passed());

        let bad = rf(&[-1], &[-1, 1]);
        let report = verify_solution(&s, 0, ProblemKind::Mp, &bad);
        assert!(!report.passed());
        assert_eq!(report.failed_check.as_deref(), Some("moments"));
        assert!(report.detail.unwrap().contains("moment 1"));

        let s2 = MomentSequence::from_ints(&[0, 0, 1]);
        let phi2 = rf(&[-1], &[0, 0, 0, 1]);
        assert!(verify_solution(&s2, 1, ProblemKind::Mp, &phi2).passed());
        // wrong kappa
        let report = verify_solution(&s2, 0, ProblemKind::Mp, &phi2);
        assert_eq!(report.failed_check.as_deref(), Some("kappa"));
        // improper candidate
        let report = verify_solution(&s2, 0, ProblemKind::Ip, &rf(&[0, 1], &[1]));
        assert_eq!(report.failed_check.as_deref(), Some("properness"));
    }
}
