//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational, always stored reduced with a
//! positive denominator, so equality is structural. Scalars serialize as
//! `"p/q"` (or just `"p"` for integers).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Rational from an integer pair; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `"p"` or `"p/q"`. Accepts an ASCII `-` or a Unicode minus sign.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let cleaned: String = text
        .trim()
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let mut parts = cleaned.splitn(2, '/');
    let num_text = parts.next().unwrap().trim();
    let num: BigInt = num_text
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num_text:?}")))?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(den_text) => {
            let den_text = den_text.trim();
            let den: BigInt = den_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {den_text:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Formats as `"p"` when integral, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter for `Rat` fields: `"p/q"` strings on the wire.
pub mod serde_rat {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        parse_rat(&text).map_err(|e| D::Error::custom(e.to_string()))
    }
}
