//! Exact rational scalars.
//!
//! Every structure constant handled by this crate is an element of the
//! rationals. Canonical text form is `p` for integers and `p/q` otherwise,
//! with `q > 0` and `gcd(p, q) = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p` or `p/q` (optional leading `-` on `p`). Non-reduced input
/// such as `2/4` is accepted and reduced.
pub fn parse(text: &str) -> Result<Scalar, Error> {
    let bad = || {
        Error::Format(format!(
            "`{text}` is not a rational number of the form p or p/q"
        ))
    };
    let digits = |s: &str, signed: bool| {
        let body = if signed {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) if digits(q, false) => q.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Format(format!("`{text}` has a zero denominator")));
    }
    Ok(BigRational::new(p, q))
}

pub fn format(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Integer value of `value` when it is an integer that fits an `i64`.
pub fn as_small_int(value: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    if value.is_integer() {
        value.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse("0/7").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1.5", "a", "1/-2", "--1", "1/", "/2", " 1"] {
            assert!(parse(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format(&ratio(6, -4)), "-3/2");
        assert_eq!(format(&int(-7)), "-7");
        assert_eq!(format(&int(0)), "0");
    }
}
