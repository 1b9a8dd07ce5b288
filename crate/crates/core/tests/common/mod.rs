//! Shared generators and independent oracles for the integration tests.
//!
//! Everything here deliberately avoids the library's own computation paths:
//! determinants come from cofactor expansion, inertia from the sign-variation
//! count of the characteristic polynomial, Hankel rank from the raw span
//! definition, and expansions are checked by series multiplication rather
//! than division.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use momentsolve_core::matrix::Matrix;
use momentsolve_core::rational::{int, rat, Rat};
use momentsolve_core::{MomentSequence, Polynomial, RationalFunction};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Small random rational with numerator in [-bound, bound] and denominator
/// in {1, 2, 3}.
pub fn rand_rat(rng: &mut StdRng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn rand_nonzero_rat(rng: &mut StdRng, bound: i64) -> Rat {
    loop {
        let r = rand_rat(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rand_sequence(rng: &mut StdRng, len: usize, bound: i64) -> MomentSequence {
    MomentSequence::from_entries((0..len).map(|_| rand_rat(rng, bound)).collect())
}

/// Random symmetric rational matrix.
pub fn rand_symmetric(rng: &mut StdRng, size: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(size, size);
    for i in 0..size {
        for j in 0..=i {
            let v = rand_rat(rng, bound);
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// Random atomic measure: distinct rational positions in [-5, 5] with
/// weights in (0, 5].
pub fn rand_atoms(rng: &mut StdRng, count: usize) -> Vec<(Rat, Rat)> {
    let mut positions: Vec<Rat> = Vec::new();
    while positions.len() < count {
        let d = rng.gen_range(1..=2i64);
        let t = rat(rng.gen_range(-5 * d..=5 * d), d);
        if !positions.contains(&t) {
            positions.push(t);
        }
    }
    positions
        .into_iter()
        .map(|t| {
            let d = rng.gen_range(1..=2i64);
            let w = rat(rng.gen_range(1..=5 * d), d);
            (w, t)
        })
        .collect()
}

/// Moments s_j = sum_i w_i t_i^j for j = 0..=ell.
pub fn atomic_moments(atoms: &[(Rat, Rat)], ell: usize) -> MomentSequence {
    let mut entries = Vec::with_capacity(ell + 1);
    let mut powers: Vec<Rat> = atoms.iter().map(|(w, _)| w.clone()).collect();
    for _ in 0..=ell {
        entries.push(powers.iter().fold(Rat::zero(), |acc, p| acc + p));
        for (p, (_, t)) in powers.iter_mut().zip(atoms) {
            *p = &*p * t;
        }
    }
    MomentSequence::from_entries(entries)
}

/// The associated function sum_i w_i / (t_i - lambda) of an atomic measure.
pub fn atomic_function(atoms: &[(Rat, Rat)]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (w, t) in atoms {
        let num = Polynomial::constant(w.clone());
        let den = Polynomial::new(vec![t.clone(), -Rat::one()]);
        acc = acc.add(&RationalFunction::new(num, den).expect("linear denominator"));
    }
    acc
}

/// Characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier
/// trace recursion; exact over rationals.
pub fn char_poly(a: &Matrix) -> Polynomial {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let trace = |m: &Matrix| -> Rat {
        let mut acc = Rat::zero();
        for i in 0..m.rows() {
            acc = acc + &m[(i, i)];
        }
        acc
    };
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = a.clone();
    let mut c = -trace(&m);
    if n >= 1 {
        coeffs[n - 1] = c.clone();
    }
    for k in 2..=n {
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[(i, i)] = &shifted[(i, i)] + &c;
        }
        m = a.mul(&shifted);
        c = -(trace(&m) / int(k as i64));
        coeffs[n - k] = c.clone();
    }
    Polynomial::new(coeffs)
}

/// Sign variations in a coefficient list, zeros skipped.
fn sign_variations(coeffs: &[Rat]) -> usize {
    let mut last: Option<bool> = None;
    let mut variations = 0;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let positive = c.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                variations += 1;
            }
        }
        last = Some(positive);
    }
    variations
}

/// Inertia of a symmetric matrix via Descartes' rule on the characteristic
/// polynomial (exact because all roots are real): nu_plus is the variation
/// count of p(lambda), nu_minus of p(-lambda), nu_zero the multiplicity of
/// the zero root.
pub fn inertia_via_char_poly(a: &Matrix) -> (usize, usize, usize) {
    let p = char_poly(a);
    let coeffs = p.coeffs();
    let nu_zero = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("characteristic polynomial is monic");
    let reduced: Vec<Rat> = coeffs[nu_zero..].to_vec();
    let nu_plus = sign_variations(&reduced);
    let flipped: Vec<Rat> = reduced
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let nu_minus = sign_variations(&flipped);
    (nu_plus, nu_zero, nu_minus)
}

/// Hankel rank straight from the span definition: the smallest r with
/// column (s_r, ..., s_{r+n}) in the span of the previous columns, or n + 1
/// when the columns of S_n are independent.
pub fn span_hankel_rank(s: &MomentSequence) -> usize {
    let n = s.n();
    let column = |j: usize| -> Vec<Rat> {
        (0..=n)
            .map(|i| s.entries()[i + j].clone())
            .collect()
    };
    for r in 0..=n {
        // rank of [v_0 .. v_{r-1}] equals rank of [v_0 .. v_r]?
        let with = Matrix::from_fn(n + 1, r + 1, |i, j| column(j)[i].clone());
        let without = Matrix::from_fn(n + 1, r, |i, j| column(j)[i].clone());
        if with.rank() == without.rank() {
            return r;
        }
    }
    n + 1
}

/// Checks an expansion by multiplication: num(z) = (sum_j c_j z^-j) * den(z)
/// on every power of z the truncation determines.
pub fn expansion_checks_by_multiplication(
    phi: &RationalFunction,
    coeffs: &[Rat],
) -> bool {
    let den = phi.den();
    let num = phi.num();
    let deg_den = den.degree();
    let order = coeffs.len() as isize - 1;
    for k in (deg_den - order)..=deg_den {
        let mut acc = Rat::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let i = k + j as isize;
            if i >= 0 && i <= deg_den {
                acc = acc + &den.coeffs()[i as usize] * c;
            }
        }
        let expected = if k >= 0 { num.coeff(k as usize) } else { Rat::zero() };
        if acc != expected {
            return false;
        }
    }
    true
}

/// Random rational function with known negative index: a sum of simple real
/// poles with `neg` negative and `pos` positive weights, plus an optional
/// constant. The negative index equals `neg` by Kronecker's theorem.
///
/// With `avoid_origin` the poles stay away from 0; callers that also need a
/// nonzero value at the origin check that themselves.
pub fn rand_parameter(
    rng: &mut StdRng,
    pos: usize,
    neg: usize,
    constant: Option<Rat>,
    avoid_origin: bool,
) -> RationalFunction {
    let base = match &constant {
        Some(c) => RationalFunction::constant(c.clone()),
        None => RationalFunction::zero(),
    };
    if pos + neg == 0 {
        return base;
    }
    loop {
        let atoms = rand_atoms(rng, pos + neg);
        if avoid_origin && atoms.iter().any(|(_, t)| t.is_zero()) {
            continue;
        }
        let mut f = base.clone();
        for (i, (w, t)) in atoms.into_iter().enumerate() {
            let signed = if i < neg { -w } else { w };
            let num = Polynomial::constant(signed);
            let den = Polynomial::new(vec![t, -Rat::one()]);
            f = f.add(&RationalFunction::new(num, den).expect("linear denominator"));
        }
        return f;
    }
}

/// Moments of a strictly proper rational function through index ell.
pub fn moments_of(phi: &RationalFunction, ell: usize) -> MomentSequence {
    let expansion = phi.laurent_expansion(ell + 1).expect("proper");
    MomentSequence::from_entries(expansion.moments(ell).expect("vanishes at infinity"))
}
