//! Classification and solution of truncated indefinite moment problems.
//!
//! A problem instance is a moment sequence s_0, ..., s_l together with the
//! required negative index kappa and a flavour tag: the moment problem (MP)
//! asks for a solution in the subclass carrying the full integrability
//! constraints, the interpolation problem (IP) only for the asymptotic
//! expansion within the kappa class. For even l the two coincide; for
//! rational solutions the solvability criteria coincide in the odd case as
//! well, and only the parameter class reported in a parametrization differs.
//!
//! Classification, with n = floor(l/2) and S_n the Hankel matrix:
//!
//! * NONDEGENERATE: det S_n != 0. Solvable iff kappa >= nu_minus(S_n);
//!   solutions are a linear fractional family driven by the full Schur chain.
//! * ZERO: s_j = 0 for all j <= 2n. Solvable for kappa = 0 (unique solution
//!   phi = 0; an odd problem additionally needs s_l = 0) and for every
//!   kappa >= nu_zero(S_n) = n + 1.
//! * DEGENERATE A: det S_n = 0 and the Schur residual vanishes through its
//!   own square part (equivalently rank S_n equals the largest normal
//!   index). At kappa = nu_minus the problem is rigid: the unique solution is
//!   the ratio -Qtilde_N / Ptilde_N of the chain's second and first kind
//!   polynomials (an odd problem additionally needs the residual's trailing
//!   moment to vanish). Between nu_minus and nu_minus + nu_zero nothing is
//!   solvable; from nu_minus + nu_zero on, solutions form a family again.
//! * DEGENERATE B: det S_n = 0 with a nonzero residual entry in the square
//!   part (rank S_n exceeds the largest normal index). Unsolvable below
//!   nu_minus + nu_zero, a family from there on.
//!
//! Input sequences are normalized internally so the first nonzero moment has
//! modulus one; solutions scale linearly with the data, so unique solutions
//! are rescaled back and parametrization descriptors carry the scale factor.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hankel::{
    self, HankelMatrix, Inertia, MomentSequence, NormalIndexSet, Parity,
};
use crate::nevanlinna;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::rational::{sign_of, Rat};
use crate::schur::{self, PolyMatrix2x2, SchurChain};
use crate::toeplitz;

/// Which problem is being solved; identical criteria for rational data, the
/// tag is carried into the descriptor's parameter class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProblemKind {
    #[serde(rename = "MP")]
    Mp,
    #[serde(rename = "IP")]
    Ip,
}

/// A truncated moment/interpolation problem instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub moments: MomentSequence,
    pub kappa: usize,
    pub kind: ProblemKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Category {
    Nondegenerate,
    DegenerateA,
    DegenerateB,
    Zero,
}

/// Structural analysis of a moment sequence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub category: Category,
    /// Inertia of S_n.
    pub inertia: Inertia,
    pub normal_indices: NormalIndexSet,
    /// Matrix rank of S_n (= nu_plus + nu_minus).
    pub rank_sn: usize,
    /// Hankel rank of the sequence (largest normal index in the degenerate
    /// case, n + 1 otherwise).
    pub hankel_rank: usize,
    /// Residual sequence after the full Schur chain.
    pub residual: MomentSequence,
    /// First nonzero index of the residual (category B only).
    pub m_res: Option<usize>,
    /// nu_zero(S_n).
    pub nu0: usize,
}

/// Why an instance is unsolvable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UnsolvableReason {
    /// kappa < nu_minus(S_n).
    KappaTooSmall,
    /// nu_minus < kappa < nu_minus + nu_zero in a degenerate problem.
    GapRegime,
    /// Degenerate at kappa = nu_minus but the sequence is not recursively
    /// generated (category B).
    NotRecursivelyGenerated,
    /// Odd degenerate problem at its rigid kappa with a nonzero trailing
    /// residual moment.
    OddTrailingNonzero,
}

/// Growth condition the parameter must satisfy at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TauCondition {
    /// tau = o(z): any proper rational function (even problems).
    E,
    /// tau = o(1): any strictly proper rational function (odd problems).
    O,
}

/// Class the parameter ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TauClass {
    /// The plain kappa' class.
    Plain,
    /// The kappa' subclass with the extra integrability constraint; only
    /// distinguishable from `Plain` for odd moment problems, and automatic
    /// for rational parameters.
    Subclass1,
}

/// Complete description of the solution family of a solvable instance:
/// solutions are `moment_scale * (w11 tau + w12) / (w21 tau + w22)` as tau
/// ranges over rational functions with negative index `tau_kappa` satisfying
/// the growth condition (applied to `tau + odd_shift` in the odd case).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParamDescriptor {
    pub w: PolyMatrix2x2,
    /// Required negative index of the parameter, computed with the generic
    /// index-cancellation reading (see `nu_candidates`).
    pub tau_kappa: usize,
    pub tau_condition: TauCondition,
    pub tau_class: TauClass,
    /// Constant entering the odd-case condition: the growth constraint
    /// applies to tau + odd_shift. Zero whenever the trailing residual
    /// moment is absorbed by the parametrization matrix.
    #[serde(with = "crate::rational::serde_rat")]
    pub odd_shift: Rat,
    /// Endpoints of the index amount a parameter's pole structure at the
    /// origin can cancel against the lambda^(2 nu0) factor: [nu_zero, 0].
    /// `tau_kappa` uses the first (generic) value; the verifier decides
    /// concrete parameters exactly, so nothing is gated on this.
    pub nu_candidates: [usize; 2],
    /// Positive factor the input was divided by; solutions scale back up.
    #[serde(with = "crate::rational::serde_rat")]
    pub moment_scale: Rat,
}

impl ParamDescriptor {
    /// Produces the solution attached to a parameter: the linear fractional
    /// image of tau, rescaled to the original (unnormalized) data.
    pub fn apply(&self, tau: &RationalFunction) -> Result<RationalFunction> {
        Ok(nevanlinna::apply_lft(&self.w, tau)?.scale(&self.moment_scale))
    }
}

/// Outcome of `solve`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum SolutionReport {
    #[serde(rename = "OK_UNIQUE")]
    Unique { phi: RationalFunction },
    #[serde(rename = "OK_PARAMETRIZED")]
    Parametrized { descriptor: ParamDescriptor },
    #[serde(rename = "UNSOLVABLE")]
    Unsolvable { reason: UnsolvableReason },
}

impl SolutionReport {
    pub fn is_solvable(&self) -> bool {
        !matches!(self, SolutionReport::Unsolvable { .. })
    }

    pub fn status_code(&self) -> &'static str {
        match self {
            SolutionReport::Unique { .. } => "OK_UNIQUE",
            SolutionReport::Parametrized { .. } => "OK_PARAMETRIZED",
            SolutionReport::Unsolvable { .. } => "UNSOLVABLE",
        }
    }

    pub fn unique_solution(&self) -> Option<&RationalFunction> {
        match self {
            SolutionReport::Unique { phi } => Some(phi),
            _ => None,
        }
    }

    pub fn descriptor(&self) -> Result<&ParamDescriptor> {
        match self {
            SolutionReport::Parametrized { descriptor } => Ok(descriptor),
            _ => Err(Error::NotParametrized),
        }
    }
}

/// Classifies a sequence; see the module documentation for the case split.
pub fn classify(s: &MomentSequence) -> Classification {
    classify_with_chain(s).0
}

/// Classification together with the Schur chain it is derived from.
pub fn classify_with_chain(s: &MomentSequence) -> (Classification, SchurChain) {
    assert!(!s.is_empty(), "classify requires a nonempty sequence");
    let chain = schur::schur_chain(s);
    let inertia = HankelMatrix::full(s).expect("nonempty").inertia();
    let normal_indices = hankel::normal_indices(s);
    let n = s.n();
    let nn = normal_indices.largest();
    let residual = chain.residual.clone();
    let category = if normal_indices.contains(n + 1) {
        Category::Nondegenerate
    } else if s.is_zero_through(2 * n) {
        Category::Zero
    } else if residual.is_zero_through(2 * (n - nn)) {
        Category::DegenerateA
    } else {
        Category::DegenerateB
    };
    let m_res = match category {
        Category::DegenerateB => residual.first_nonzero(),
        _ => None,
    };
    let cls = Classification {
        category,
        rank_sn: inertia.rank(),
        hankel_rank: hankel::hankel_rank(s),
        nu0: inertia.nu_zero,
        inertia,
        normal_indices,
        residual,
        m_res,
    };
    (cls, chain)
}

/// Parametrization matrix for the classification's solvable family regime.
///
/// Nondegenerate problems use the full resolvent; degenerate type A (and the
/// zero sequence) append the diag(1, lambda^(2 nu0)) factor; type B appends
/// the basic-problem block built from the monic inverter of the shifted
/// residual.
pub fn param_matrix(cls: &Classification, chain: &SchurChain) -> PolyMatrix2x2 {
    let w = schur::resolvent(chain, chain.step_count()).expect("step count in range");
    match cls.category {
        Category::Nondegenerate => w,
        Category::Zero | Category::DegenerateA => mul_right_diag(&w, 2 * cls.nu0),
        Category::DegenerateB => {
            let r = &cls.residual;
            let m_res = cls.m_res.expect("category B has a residual entry");
            let eps_hat = sign_of(&r.entries()[m_res]);
            debug_assert_eq!(
                cls.nu0,
                m_res - (r.ell() as usize) / 2,
                "nu_zero must match the residual gap"
            );
            let shifted = MomentSequence::from_entries(
                r.entries()[2 * cls.nu0..].to_vec(),
            );
            let m_hat = m_res - 2 * cls.nu0;
            let p_hat = toeplitz::monic_inverter(&shifted, m_hat, None)
                .expect("residual structure checked");
            mul_right_basic_b(&w, eps_hat, &p_hat, 2 * cls.nu0)
        }
    }
}

/// W * diag(1, lambda^k).
fn mul_right_diag(w: &PolyMatrix2x2, k: usize) -> PolyMatrix2x2 {
    PolyMatrix2x2 {
        w11: w.w11.clone(),
        w12: w.w12.mul_xpow(k),
        w21: w.w21.clone(),
        w22: w.w22.mul_xpow(k),
        scale: w.scale.clone(),
    }
}

/// W * [[0, -eps], [eps lambda^k, p lambda^k]].
fn mul_right_basic_b(w: &PolyMatrix2x2, eps: i8, p: &Polynomial, k: usize) -> PolyMatrix2x2 {
    let eps = crate::rational::int(eps as i64);
    PolyMatrix2x2 {
        w11: w.w12.scale(&eps).mul_xpow(k),
        w12: &(-&w.w11.scale(&eps)) + &(&w.w12 * p).mul_xpow(k),
        w21: w.w22.scale(&eps).mul_xpow(k),
        w22: &(-&w.w21.scale(&eps)) + &(&w.w22 * p).mul_xpow(k),
        scale: w.scale.clone(),
    }
}

/// Decides solvability and produces the unique solution or the complete
/// parametrization. Unsolvability is a report, not an error.
pub fn solve(inst: &ProblemInstance) -> SolutionReport {
    let s = &inst.moments;
    assert!(!s.is_empty(), "solve requires a nonempty sequence");
    let scale = match s.first_nonzero() {
        Some(m) => s.entries()[m].abs(),
        None => Rat::one(),
    };
    let normalized = s.scaled(&(Rat::one() / &scale));
    let (cls, chain) = classify_with_chain(&normalized);
    let kappa = inst.kappa;
    let nu_minus = cls.inertia.nu_minus;
    let nu0 = cls.nu0;
    let parity = normalized.parity();

    if kappa < nu_minus {
        return SolutionReport::Unsolvable {
            reason: UnsolvableReason::KappaTooSmall,
        };
    }
    match cls.category {
        Category::Nondegenerate => SolutionReport::Parametrized {
            descriptor: descriptor(&cls, &chain, inst, scale),
        },
        Category::Zero | Category::DegenerateA => {
            if kappa == nu_minus {
                // rigid regime; odd problems also need the trailing residual
                // moment to vanish
                let trailing_ok = match parity {
                    Parity::Even => true,
                    Parity::Odd => cls.residual.is_all_zero(),
                };
                if !trailing_ok {
                    return SolutionReport::Unsolvable {
                        reason: UnsolvableReason::OddTrailingNonzero,
                    };
                }
                let (p, q) = schur::pq_polynomials(&chain);
                let last = chain.step_count();
                let phi = RationalFunction::new(-&q[last], p[last].clone())
                    .expect("first-kind polynomial is monic")
                    .scale(&scale);
                SolutionReport::Unique { phi }
            } else if kappa < nu_minus + nu0 {
                SolutionReport::Unsolvable {
                    reason: UnsolvableReason::GapRegime,
                }
            } else {
                SolutionReport::Parametrized {
                    descriptor: descriptor(&cls, &chain, inst, scale),
                }
            }
        }
        Category::DegenerateB => {
            if kappa == nu_minus {
                SolutionReport::Unsolvable {
                    reason: UnsolvableReason::NotRecursivelyGenerated,
                }
            } else if kappa < nu_minus + nu0 {
                SolutionReport::Unsolvable {
                    reason: UnsolvableReason::GapRegime,
                }
            } else {
                SolutionReport::Parametrized {
                    descriptor: descriptor(&cls, &chain, inst, scale),
                }
            }
        }
    }
}

fn descriptor(
    cls: &Classification,
    chain: &SchurChain,
    inst: &ProblemInstance,
    scale: Rat,
) -> ParamDescriptor {
    let w = param_matrix(cls, chain);
    let parity = inst.moments.parity();
    let nondegenerate = matches!(cls.category, Category::Nondegenerate);
    let tau_kappa = if nondegenerate {
        inst.kappa - cls.inertia.nu_minus
    } else {
        inst.kappa - cls.inertia.nu_minus - cls.nu0
    };
    let odd_shift = match (parity, cls.category) {
        (Parity::Odd, Category::Zero | Category::DegenerateA) => cls
            .residual
            .entries()
            .last()
            .cloned()
            .unwrap_or_else(Rat::zero),
        _ => Rat::zero(),
    };
    // determinant identity: det W = scale * lambda^(2 nu0) in the degenerate
    // parametrizations, det W = scale for the nondegenerate one
    let expected = if nondegenerate {
        Polynomial::constant(w.scale.clone())
    } else {
        Polynomial::constant(w.scale.clone()).mul_xpow(2 * cls.nu0)
    };
    assert_eq!(w.det(), expected, "parametrization determinant identity");
    ParamDescriptor {
        w,
        tau_kappa,
        tau_condition: match parity {
            Parity::Even => TauCondition::E,
            Parity::Odd => TauCondition::O,
        },
        tau_class: match (parity, inst.kind) {
            (Parity::Odd, ProblemKind::Mp) => TauClass::Subclass1,
            _ => TauClass::Plain,
        },
        odd_shift,
        nu_candidates: if nondegenerate { [0, 0] } else { [cls.nu0, 0] },
        moment_scale: scale,
    }
}
