//! Exact rational scalars and small parsing/formatting helpers.
//!
//! Cut points, breakpoints and densities are all reduced fractions of
//! arbitrary-precision integers. The wire format is the string `"p/q"`
//! (or just `"p"` for integers).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number: reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Builds `p/q` from machine integers.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer rational `p`.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"`, rejecting zero denominators.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidValue(format!("malformed rational {s:?}")))?;
    let q: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::InvalidValue(format!("malformed rational {s:?}")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::InvalidValue(format!(
            "zero denominator in rational {s:?}"
        )));
    }
    Ok(Rational::new(p, q))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_strictly_between_zero_and_one(r: &Rational) -> bool {
    r.is_positive() && r < &int(1)
}

pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && r <= &int(1)
}
