//! Reduced rational functions and their Laurent expansions at infinity.
//!
//! A `RationalFunction` is kept in canonical form: numerator and denominator
//! coprime, denominator monic. Equal functions therefore have identical
//! representations and `==` is function equality.
//!
//! The Laurent expansion of a proper function phi at infinity,
//!
//!   phi(z) = c_0 + c_1/z + c_2/z^2 + ... ,
//!
//! is computed by exact long division in the variable t = 1/z, and the moment
//! sequence of a function vanishing at infinity is read off as s_j = -c_{j+1}.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rat;

/// Rational function in reduced form: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Initial segment `c_0, c_1/z, ..., c_K/z^K` of an expansion at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentExpansion {
    coeffs: Vec<Rat>,
}

impl RationalFunction {
    /// Canonicalizes `num/den`: cancels the gcd and makes the denominator
    /// monic. Fails on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let lead = den.leading();
        let inv = Rat::one() / lead;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; the order of growth at infinity. `None` for zero.
    pub fn degree_at_infinity(&self) -> Option<isize> {
        if self.is_zero() {
            None
        } else {
            Some(self.num.degree() - self.den.degree())
        }
    }

    /// Proper: bounded at infinity (`deg num <= deg den`).
    pub fn is_proper(&self) -> bool {
        self.num.degree() <= self.den.degree()
    }

    /// Strictly proper: vanishes at infinity (`deg num < deg den`).
    pub fn is_strictly_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    /// Nontangential limit at infinity, when bounded there.
    pub fn value_at_infinity(&self) -> Option<Rat> {
        if self.num.degree() < self.den.degree() {
            Some(Rat::zero())
        } else if self.num.degree() == self.den.degree() {
            Some(self.num.leading() / self.den.leading())
        } else {
            None
        }
    }

    /// Leading behaviour `c * z^d` at infinity: `(d, c)`. `None` for zero.
    pub fn leading_at_infinity(&self) -> Option<(isize, Rat)> {
        if self.is_zero() {
            None
        } else {
            Some((
                self.num.degree() - self.den.degree(),
                self.num.leading() / self.den.leading(),
            ))
        }
    }

    /// Leading behaviour `c * (z - x0)^k` at a finite point: `(k, c)` with
    /// `c != 0`. `None` for the zero function.
    pub fn leading_at(&self, x0: &Rat) -> Option<(isize, Rat)> {
        if self.is_zero() {
            return None;
        }
        let linear = Polynomial::new(vec![-x0.clone(), Rat::one()]);
        let mn = self.num.root_multiplicity(x0);
        let md = self.den.root_multiplicity(x0);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for _ in 0..mn {
            num = num.divrem(&linear).expect("nonzero divisor").0;
        }
        for _ in 0..md {
            den = den.divrem(&linear).expect("nonzero divisor").0;
        }
        Some((mn as isize - md as isize, num.eval(x0) / den.eval(x0)))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `-1/phi`, the basic involution of the generalized Nevanlinna classes.
    pub fn neg_reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(-&self.den, self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    /// Evaluates at a rational point; `None` on a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// First `order + 1` coefficients of the expansion at infinity.
    ///
    /// Requires a proper function (`deg num <= deg den`); the expansion is
    /// obtained by power-series division in `t = 1/z`.
    pub fn laurent_expansion(&self, order: usize) -> Result<LaurentExpansion> {
        if !self.is_proper() {
            return Err(Error::ImproperFunction {
                num_deg: self.num.degree(),
                den_deg: self.den.degree(),
            });
        }
        if self.is_zero() {
            return Ok(LaurentExpansion {
                coeffs: vec![Rat::zero(); order + 1],
            });
        }
        // num(1/t)/den(1/t) = t^(deg den - deg num) * rev(num)(t) / rev(den)(t)
        let shift = (self.den.degree() - self.num.degree()) as usize;
        let mut a = vec![Rat::zero(); order + 1];
        for (i, c) in self.num.coeffs().iter().rev().enumerate() {
            let k = shift + i;
            if k > order {
                break;
            }
            a[k] = c.clone();
        }
        let b: Vec<Rat> = self.den.coeffs().iter().rev().cloned().collect();
        // series division a(t)/b(t), b(0) = leading(den) != 0
        let b0 = b[0].clone();
        let mut coeffs = vec![Rat::zero(); order + 1];
        for k in 0..=order {
            let mut acc = a[k].clone();
            for j in 1..=k.min(b.len() - 1) {
                acc -= &b[j] * &coeffs[k - j];
            }
            coeffs[k] = acc / &b0;
        }
        Ok(LaurentExpansion { coeffs })
    }
}

impl LaurentExpansion {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        LaurentExpansion { coeffs }
    }

    /// Highest expansion order K carried (coefficients c_0 ... c_K).
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Moments s_j = -c_{j+1} for j = 0..=ell.
    ///
    /// Fails with `NonzeroConstantTerm` when `c_0 != 0` (the function does
    /// not vanish at infinity, so it prescribes no moment sequence).
    pub fn moments(&self, ell: usize) -> Result<Vec<Rat>> {
        if self.coeffs.is_empty() || ell + 1 > self.order() {
            return Err(Error::IndexOutOfRange {
                index: ell + 1,
                len: self.coeffs.len(),
            });
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(self.coeffs[1..=ell + 1].iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
