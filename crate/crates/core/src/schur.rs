//! The Schur-Chebyshev reduction chain.
//!
//! One step takes a sequence whose Hankel matrix has a first normal index
//! n_1 (equivalently, first nonzero moment at index n_1 - 1 <= n) and
//! rewrites any solution phi of its moment problem as
//!
//!   phi = -s_{n_1 - 1} / (p + eps * a^2 * phi_1),
//!
//! where p is the monic inverter polynomial of degree n_1, eps the sign of
//! s_{n_1 - 1}, and phi_1 solves the induced problem of length l - 2 n_1
//! whose moment sequence is normalized (first nonzero entry of modulus one)
//! by the choice of a^2 > 0. Iterating through all normal indices yields the
//! chain; the residual sequence left at the end has no normal indices and
//! pins the degenerate structure of the original problem.
//!
//! The classical first/second kind polynomials P_j, Q_j of the associated
//! difference equation involve 1/a_j with a_j = sqrt(a_j^2) possibly
//! irrational. We work throughout with the rescaled versions
//! Ptilde_j = (a_1 ... a_j) P_j and likewise for Q: only a_j^2 enters their
//! recurrence
//!
//!   u_j = p_j u_{j-1} - eps_{j-1} eps_j a_{j-1}^2 u_{j-2},
//!
//! so all arithmetic stays rational, and the linear fractional transform
//! defined by the resolvent matrix is projective, so the common factor
//! cancels. The rescaled resolvent then has determinant equal to the product
//! of the a_j^2 as an exact polynomial identity.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hankel::{self, MomentSequence};
use crate::poly::Polynomial;
use crate::rational::{int, Rat};
use crate::toeplitz;

/// One reduction step.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchurStep {
    /// Normal-index increment n_j - n_{j-1}; the degree of `p`.
    pub gap: usize,
    /// Monic polynomial of degree `gap`.
    pub p: Polynomial,
    /// Sign of the leading moment driving the step.
    pub eps: i8,
    /// Positive normalization factor a_j^2.
    #[serde(with = "crate::rational::serde_rat")]
    pub a_sq: Rat,
    /// Induced moment sequence, normalized; may be empty on the final step.
    pub induced: MomentSequence,
}

/// The full reduction chain of a sequence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchurChain {
    pub steps: Vec<SchurStep>,
    /// What is left after all normal indices are consumed. Empty for
    /// nondegenerate sequences, all of `s` for basic (stepless) ones.
    pub residual: MomentSequence,
    /// kappa_j = nu_minus(S_{n_j - 1}) for each normal index n_j.
    pub kappa_offsets: Vec<usize>,
}

impl SchurChain {
    /// Cumulative normal index n_j after step j (1-based); n_0 = 0.
    pub fn normal_index(&self, j: usize) -> usize {
        self.steps[..j].iter().map(|st| st.gap).sum()
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Product of the a_i^2 over the first j steps.
    pub fn scale_through(&self, j: usize) -> Rat {
        self.steps[..j]
            .iter()
            .fold(Rat::one(), |acc, st| acc * &st.a_sq)
    }
}

/// 2x2 matrix of polynomials with constant nonzero determinant `scale`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix2x2 {
    pub w11: Polynomial,
    pub w12: Polynomial,
    pub w21: Polynomial,
    pub w22: Polynomial,
    /// Determinant of the resolvent form; the product of the step a_j^2.
    #[serde(with = "crate::rational::serde_rat")]
    pub scale: Rat,
}

impl PolyMatrix2x2 {
    pub fn identity() -> Self {
        PolyMatrix2x2 {
            w11: Polynomial::one(),
            w12: Polynomial::zero(),
            w21: Polynomial::zero(),
            w22: Polynomial::one(),
            scale: Rat::one(),
        }
    }

    pub fn det(&self) -> Polynomial {
        &(&self.w11 * &self.w22) - &(&self.w12 * &self.w21)
    }

    /// Matrix product; scales multiply.
    pub fn mul(&self, rhs: &PolyMatrix2x2) -> PolyMatrix2x2 {
        PolyMatrix2x2 {
            w11: &(&self.w11 * &rhs.w11) + &(&self.w12 * &rhs.w21),
            w12: &(&self.w11 * &rhs.w12) + &(&self.w12 * &rhs.w22),
            w21: &(&self.w21 * &rhs.w11) + &(&self.w22 * &rhs.w21),
            w22: &(&self.w21 * &rhs.w12) + &(&self.w22 * &rhs.w22),
            scale: &self.scale * &rhs.scale,
        }
    }
}

/// One Schur step on a sequence with a normal index.
///
/// Fails with `NoNormalIndex` when every leading principal minor of S_n
/// vanishes (basic problems), i.e. when the first nonzero moment sits past
/// index n.
pub fn schur_step(s: &MomentSequence) -> Result<SchurStep> {
    if s.is_empty() {
        return Err(Error::NoNormalIndex);
    }
    let Some(m) = s.first_nonzero() else {
        return Err(Error::NoNormalIndex);
    };
    if m > s.n() {
        return Err(Error::NoNormalIndex);
    }
    let inv = toeplitz::invert_expansion(s, m)?;
    let (a_sq, induced) = match inv.tail {
        None => (Rat::one(), MomentSequence::from_entries(Vec::new())),
        Some(tail) => {
            match tail.iter().find(|v| !v.is_zero()) {
                None => (Rat::one(), MomentSequence::from_entries(tail)),
                Some(first) => {
                    let a_sq = first.abs();
                    let inv_a = Rat::one() / &a_sq;
                    let induced = tail.iter().map(|v| v * &inv_a).collect();
                    (a_sq, MomentSequence::from_entries(induced))
                }
            }
        }
    };
    Ok(SchurStep {
        gap: m + 1,
        p: inv.p,
        eps: inv.eps,
        a_sq,
        induced,
    })
}

/// Runs the chain through all normal indices.
///
/// Basic problems (no normal index) yield an empty chain with the input as
/// residual. The step data is invariant under positive scaling of `s`, so
/// callers may feed unnormalized sequences; only the transform back to the
/// solution carries the scale.
pub fn schur_chain(s: &MomentSequence) -> SchurChain {
    let mut steps = Vec::new();
    let mut current = s.clone();
    loop {
        let done = current.is_empty()
            || match current.first_nonzero() {
                None => true,
                Some(m) => m > current.n(),
            };
        if done {
            break;
        }
        let step = schur_step(&current).expect("normal index checked");
        current = step.induced.clone();
        steps.push(step);
    }
    let mut kappa_offsets = Vec::with_capacity(steps.len());
    let mut cum = 0usize;
    for step in &steps {
        cum += step.gap;
        // nu_minus of S_{n_j - 1}, a matrix of size n_j
        let h = hankel::HankelMatrix::new(s, cum).expect("normal index within range");
        kappa_offsets.push(h.inertia().nu_minus);
    }
    SchurChain {
        steps,
        residual: current,
        kappa_offsets,
    }
}

/// Rescaled first and second kind polynomials Ptilde_0..Ptilde_N,
/// Qtilde_0..Qtilde_N of the chain's difference equation.
pub fn pq_polynomials(chain: &SchurChain) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let n = chain.steps.len();
    let mut p = Vec::with_capacity(n + 1);
    let mut q = Vec::with_capacity(n + 1);
    p.push(Polynomial::one());
    q.push(Polynomial::zero());
    if n == 0 {
        return (p, q);
    }
    p.push(chain.steps[0].p.clone());
    q.push(Polynomial::constant(int(chain.steps[0].eps as i64)));
    for j in 2..=n {
        let step = &chain.steps[j - 1];
        let prev = &chain.steps[j - 2];
        let coupling = prev.a_sq.clone() * int((prev.eps * step.eps) as i64);
        let next = |u: &Vec<Polynomial>| -> Polynomial {
            &(&step.p * &u[j - 1]) - &u[j - 2].scale(&coupling)
        };
        p.push(next(&p));
        q.push(next(&q));
    }
    (p, q)
}

/// Rescaled resolvent matrix of the first j steps:
///
///   [[ -eps_j a_j^2 Qtilde_{j-1},  -Qtilde_j ],
///    [  eps_j a_j^2 Ptilde_{j-1},   Ptilde_j ]]
///
/// with determinant a_1^2 ... a_j^2 (asserted). j = 0 gives the identity.
pub fn resolvent(chain: &SchurChain, j: usize) -> Result<PolyMatrix2x2> {
    if j > chain.steps.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: chain.steps.len(),
        });
    }
    if j == 0 {
        return Ok(PolyMatrix2x2::identity());
    }
    let (p, q) = pq_polynomials(chain);
    let step = &chain.steps[j - 1];
    let factor = step.a_sq.clone() * int(step.eps as i64);
    let w = PolyMatrix2x2 {
        w11: -&q[j - 1].scale(&factor),
        w12: -&q[j],
        w21: p[j - 1].scale(&factor),
        w22: p[j].clone(),
        scale: chain.scale_through(j),
    };
    debug_assert_eq!(w.det(), Polynomial::constant(w.scale.clone()));
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i64]) -> MomentSequence {
        MomentSequence::from_ints(entries)
    }

    #[test]
    fn step_two_atom_sequence() {
        let st = schur_step(&seq(&[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(st.gap, 1);
        assert_eq!(st.p, Polynomial::from_ints(&[0, 1]));
        assert_eq!(st.eps, 1);
        assert_eq!(st.a_sq, int(1));
        assert_eq!(st.induced, seq(&[1, 0, 0]));
    }

    #[test]
    fn step_constant_sequence() {
        let st = schur_step(&seq(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(st.gap, 1);
        assert_eq!(st.p, Polynomial::from_ints(&[-1, 1]));
        assert_eq!(st.eps, 1);
        assert_eq!(st.a_sq, int(1));
        assert_eq!(st.induced, seq(&[0, 0, 0]));
    }

    #[test]
    fn step_gap_two_odd_termination() {
        let st = schur_step(&seq(&[0, 1, 0, 1])).unwrap();
        assert_eq!(st.gap, 2);
        assert_eq!(st.p, Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(st.eps, 1);
        assert_eq!(st.a_sq, int(1));
        assert!(st.induced.is_empty());
    }

    #[test]
    fn step_requires_normal_index() {
        assert!(matches!(schur_step(&seq(&[0, 0, 0])), Err(Error::NoNormalIndex)));
        // first nonzero past n: basic type B
        assert!(matches!(schur_step(&seq(&[0, 0, 1])), Err(Error::NoNormalIndex)));
    }

    #[test]
    fn chain_two_atoms() {
        let chain = schur_chain(&seq(&[1, 0, 1, 0, 1]));
        assert_eq!(chain.step_count(), 2);
        for st in &chain.steps {
            assert_eq!(st.gap, 1);
            assert_eq!(st.p, Polynomial::from_ints(&[0, 1]));
            assert_eq!(st.eps, 1);
            assert_eq!(st.a_sq, int(1));
        }
        assert_eq!(chain.residual, seq(&[0]));
        assert_eq!(chain.kappa_offsets, vec![0, 0]);
    }

    #[test]
    fn chain_constant() {
        let chain = schur_chain(&seq(&[1, 1, 1, 1, 1]));
        assert_eq!(chain.step_count(), 1);
        assert_eq!(chain.steps[0].p, Polynomial::from_ints(&[-1, 1]));
        assert_eq!(chain.residual, seq(&[0, 0, 0]));
    }

    #[test]
    fn chain_basic_problems_are_stepless() {
        let chain = schur_chain(&seq(&[0, 0, 0]));
        assert!(chain.steps.is_empty());
        assert_eq!(chain.residual, seq(&[0, 0, 0]));

        let chain = schur_chain(&seq(&[0, 0, 1]));
        assert!(chain.steps.is_empty());
        assert_eq!(chain.residual, seq(&[0, 0, 1]));
    }

    #[test]
    fn pq_examples() {
        let chain = schur_chain(&seq(&[1, 0, 1, 0, 1]));
        let (p, q) = pq_polynomials(&chain);
        assert_eq!(
            p,
            vec![
                Polynomial::one(),
                Polynomial::from_ints(&[0, 1]),
                Polynomial::from_ints(&[-1, 0, 1])
            ]
        );
        assert_eq!(
            q,
            vec![
                Polynomial::zero(),
                Polynomial::one(),
                Polynomial::from_ints(&[0, 1])
            ]
        );

        let chain = schur_chain(&seq(&[1, 1, 1, 1, 1]));
        let (p, q) = pq_polynomials(&chain);
        assert_eq!(p, vec![Polynomial::one(), Polynomial::from_ints(&[-1, 1])]);
        assert_eq!(q, vec![Polynomial::zero(), Polynomial::one()]);

        let chain = schur_chain(&seq(&[0, 0, 0]));
        let (p, q) = pq_polynomials(&chain);
        assert_eq!(p, vec![Polynomial::one()]);
        assert_eq!(q, vec![Polynomial::zero()]);
    }

    #[test]
    fn resolvent_examples() {
        let chain = schur_chain(&seq(&[1, 0, 1, 0, 1]));
        let w = resolvent(&chain, 2).unwrap();
        assert_eq!(w.w11, Polynomial::from_ints(&[-1]));
        assert_eq!(w.w12, Polynomial::from_ints(&[0, -1]));
        assert_eq!(w.w21, Polynomial::from_ints(&[0, 1]));
        assert_eq!(w.w22, Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(w.scale, int(1));
        assert_eq!(w.det(), Polynomial::one());

        let chain = schur_chain(&seq(&[-1, 0]));
        let w = resolvent(&chain, 1).unwrap();
        assert_eq!(w.w11, Polynomial::zero());
        assert_eq!(w.w12, Polynomial::one());
        assert_eq!(w.w21, Polynomial::from_ints(&[-1]));
        assert_eq!(w.w22, Polynomial::from_ints(&[0, 1]));
        assert_eq!(w.scale, int(1));

        let id = resolvent(&chain, 0).unwrap();
        assert_eq!(id, PolyMatrix2x2::identity());

        assert!(matches!(
            resolvent(&chain, 5),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    /// The resolvent must equal the product of the per-step matrices
    /// [[0, -eps_i], [eps_i a_i^2, p_i]].
    #[test]
    fn resolvent_matches_step_matrix_product() {
        for entries in [
            vec![1, 0, 1, 0, 1],
            vec![1, 1, 1, 1, 1],
            vec![1, 2, 3, 4, 5, 6, 7],
            vec![0, 1, 0, 1, 2, -3],
            vec![-1, 0, 2, 5, -7, 11, 2, 1],
        ] {
            let chain = schur_chain(&seq(&entries));
            for j in 0..=chain.step_count() {
                let mut product = PolyMatrix2x2::identity();
                for st in &chain.steps[..j] {
                    let eps = int(st.eps as i64);
                    let wj = PolyMatrix2x2 {
                        w11: Polynomial::zero(),
                        w12: Polynomial::constant(-eps.clone()),
                        w21: Polynomial::constant(eps * &st.a_sq),
                        w22: st.p.clone(),
                        scale: st.a_sq.clone(),
                    };
                    product = product.mul(&wj);
                }
                assert_eq!(resolvent(&chain, j).unwrap(), product);
            }
        }
    }

    #[test]
    fn chain_is_scale_invariant() {
        let s = seq(&[2, 0, 2, 0, 2]);
        let t = seq(&[1, 0, 1, 0, 1]);
        let cs = schur_chain(&s);
        let ct = schur_chain(&t);
        assert_eq!(cs.step_count(), ct.step_count());
        for (a, b) in cs.steps.iter().zip(&ct.steps) {
            assert_eq!(a.p, b.p);
            assert_eq!(a.eps, b.eps);
            assert_eq!(a.a_sq, b.a_sq);
            assert_eq!(a.induced, b.induced);
        }
    }
}
