//! Upper triangular Toeplitz algebra for truncated asymptotic expansions.
//!
//! A tuple (c_0, ..., c_n) stands both for the expansion
//! c_0 + c_1/z + ... + c_n/z^n and for the (n+1) x (n+1) upper triangular
//! Toeplitz matrix T(c_0, ..., c_n) with entries t_{i,j} = c_{j-i}. Products
//! of such matrices are truncated Cauchy products of the expansions, and
//! inverting the matrix is power-series reciprocation.
//!
//! The central construction: for a sequence with s_j = 0 below index m and
//! s_m != 0, there is a unique monic polynomial p of degree m + 1 whose
//! coefficients solve
//!
//!   T(p_{m+1}, ..., p_1) T(s_m, ..., s_{2m}) = s_m I,
//!
//! the constant coefficient being fixed by the next term s_{2m+1} (a free
//! choice when the sequence stops at 2m). Extending the same triangular solve
//! past the polynomial block inverts the whole expansion: -s_m / phi(z) =
//! p(z) + eps * tau(z) with eps = sgn s_m, where tau carries the induced
//! moments read off the continued solve.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hankel::MomentSequence;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::rational::{sign_of, Rat};

/// Upper triangular Toeplitz matrix, stored by its first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperToeplitz {
    first_row: Vec<Rat>,
}

impl UpperToeplitz {
    pub fn new(first_row: Vec<Rat>) -> Self {
        UpperToeplitz { first_row }
    }

    pub fn first_row(&self) -> &[Rat] {
        &self.first_row
    }

    pub fn size(&self) -> usize {
        self.first_row.len()
    }

    /// Materializes the dense matrix (for identity checks in tests).
    pub fn to_matrix(&self) -> Matrix {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            if j >= i {
                self.first_row[j - i].clone()
            } else {
                Rat::zero()
            }
        })
    }

    /// Matrix product; same as the truncated product of the expansions.
    pub fn mul(&self, rhs: &UpperToeplitz) -> Result<UpperToeplitz> {
        Ok(UpperToeplitz::new(expansion_product(
            &self.first_row,
            &rhs.first_row,
        )?))
    }
}

/// Truncated Cauchy product: the first row of T(c) * T(d).
pub fn expansion_product(c: &[Rat], d: &[Rat]) -> Result<Vec<Rat>> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            left: c.len(),
            right: d.len(),
        });
    }
    let n = c.len();
    let mut out = vec![Rat::zero(); n];
    for (i, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in d.iter().enumerate().take(n - i) {
            out[i + j] = &out[i + j] + a * b;
        }
    }
    Ok(out)
}

/// Solves T(x) T(c) = c_0 I for the first row x by back substitution;
/// `len` coefficients are produced, padding c with zeros past its end.
/// Requires c_0 != 0.
fn triangular_solve(c: &[Rat], len: usize) -> Vec<Rat> {
    let c0 = c[0].clone();
    assert!(!c0.is_zero());
    let mut x = vec![Rat::zero(); len];
    x[0] = Rat::one();
    for j in 1..len {
        let mut acc = Rat::zero();
        for k in 0..j {
            if let Some(cjk) = c.get(j - k) {
                if !cjk.is_zero() {
                    acc += &x[k] * cjk;
                }
            }
        }
        x[j] = -acc / &c0;
    }
    // x solves sum_k x_k c_{j-k} = delta_{0j} * c_0 with x_0 = 1
    x
}

/// Which regime the inverted expansion falls into, by the length of the
/// sequence relative to its first nonzero index m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InversionRegime {
    /// l = 2m: the remainder term is merely o(z).
    EvenE,
    /// l = 2m + 1: the remainder term is o(1).
    OddO,
    /// l > 2m + 1: the remainder carries induced moments.
    Tail,
}

/// Result of inverting an expansion: -s_m / phi = p + eps * tau.
#[derive(Clone, Debug)]
pub struct ExpansionInversion {
    pub p: Polynomial,
    pub eps: i8,
    pub regime: InversionRegime,
    /// Induced moments of tau in the `Tail` regime.
    pub tail: Option<Vec<Rat>>,
}

fn check_leading_structure(s: &MomentSequence, m: usize) -> Result<()> {
    if s.first_nonzero() != Some(m) {
        return Err(Error::NotNormalizable);
    }
    if (s.ell() as usize) < 2 * m {
        return Err(Error::IndexOutOfRange {
            index: 2 * m,
            len: s.len(),
        });
    }
    Ok(())
}

/// The monic polynomial p of degree m + 1 with
/// T(p_{m+1}, ..., p_1) T(s_m, ..., s_{2m}) = s_m I.
///
/// Requires s_j = 0 for j < m, s_m != 0 and l >= 2m. The constant
/// coefficient involves s_{2m+1}; when the sequence stops at 2m that value is
/// free and is taken from `s_odd_choice` (default 0).
pub fn monic_inverter(
    s: &MomentSequence,
    m: usize,
    s_odd_choice: Option<&Rat>,
) -> Result<Polynomial> {
    check_leading_structure(s, m)?;
    let mut c: Vec<Rat> = (m..=2 * m).map(|j| s.entries()[j].clone()).collect();
    match s.get(2 * m + 1) {
        Some(v) => c.push(v.clone()),
        None => c.push(s_odd_choice.cloned().unwrap_or_else(Rat::zero)),
    }
    let x = triangular_solve(&c, m + 2);
    // x_k is the coefficient of lambda^{m+1-k}
    let coeffs: Vec<Rat> = x.into_iter().rev().collect();
    Ok(Polynomial::new(coeffs))
}

/// Inverts the expansion of a sequence with first nonzero moment s_m:
/// -s_m / phi = p + eps * tau, classifying the remainder tau and solving for
/// its induced moments when the sequence is long enough to carry any.
pub fn invert_expansion(s: &MomentSequence, m: usize) -> Result<ExpansionInversion> {
    check_leading_structure(s, m)?;
    let ell = s.ell() as usize;
    let eps = sign_of(&s.entries()[m]);
    let regime = match ell {
        l if l == 2 * m => InversionRegime::EvenE,
        l if l == 2 * m + 1 => InversionRegime::OddO,
        _ => InversionRegime::Tail,
    };
    let mut c: Vec<Rat> = (m..=ell).map(|j| s.entries()[j].clone()).collect();
    if matches!(regime, InversionRegime::EvenE) {
        // free odd coefficient, fixed to 0
        c.push(Rat::zero());
    }
    let x = triangular_solve(&c, c.len());
    let p = Polynomial::new(x[..m + 2].iter().rev().cloned().collect());
    let tail = if matches!(regime, InversionRegime::Tail) {
        let eps_rat = crate::rational::int(eps as i64);
        Some(x[m + 2..].iter().map(|v| -(v * &eps_rat)).collect())
    } else {
        None
    };
    Ok(ExpansionInversion {
        p,
        eps,
        regime,
        tail,
    })
}
