//! Exact rational literals.
//!
//! Documents carry exact numbers as strings: either a fraction `"p/q"` or a
//! plain decimal `"-0.25"`. Both parse to a [`BigRational`] without rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_DIGITS: usize = 4096;

fn fail(literal: &str, reason: &'static str) -> Error {
    Error::Rational {
        literal: literal.to_owned(),
        reason,
    }
}

fn parse_digits(literal: &str, digits: &str) -> Result<BigInt> {
    if digits.is_empty() {
        return Err(fail(literal, "missing digits"));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(fail(literal, "unexpected character"));
    }
    BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| fail(literal, "unexpected character"))
}

/// Parses `"p/q"`, `"-p/q"`, `"12"`, `"-0.125"` into an exact rational.
pub fn parse_rational(literal: &str) -> Result<BigRational> {
    let s = literal.trim();
    if s.len() > MAX_DIGITS {
        return Err(fail(literal, "literal too long"));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(literal, num)?;
        let den = parse_digits(literal, den)?;
        if den.is_zero() {
            return Err(fail(literal, "zero denominator"));
        }
        BigRational::new(num, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        if int.is_empty() && frac.is_empty() {
            return Err(fail(literal, "missing digits"));
        }
        let int = if int.is_empty() { BigInt::zero() } else { parse_digits(literal, int)? };
        let frac_val = if frac.is_empty() { BigInt::zero() } else { parse_digits(literal, frac)? };
        let scale = num_traits::pow(BigInt::from(10u8), frac.len());
        BigRational::new(int * &scale + frac_val, scale)
    } else {
        BigRational::from_integer(parse_digits(literal, body)?)
    };
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact conversion; every finite `f64` is a dyadic rational.
pub fn from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn is_nonnegative(r: &BigRational) -> bool {
    !r.is_negative()
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
