//! Rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which keeps the reduced form with a
//! positive denominator. The helpers here cover parsing from the `p/q` text
//! form, serde as strings, perfect-square tests and float conversion.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or an integer. Decimal notation is rejected.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational `p/q` or integer: {text:?}"));
    if s.is_empty() || s.contains(['.', 'e', 'E', ' ']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(num, den))
}

/// True iff `r` is the square of a rational (negative values never are).
pub fn is_rational_square(r: &Rat) -> bool {
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let root = n.sqrt();
        &root * &root == *n
    };
    is_sq(r.numer()) && is_sq(r.denom())
}

/// max(|numerator|, denominator)
pub fn height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    if n > *r.denom() {
        n
    } else {
        r.denom().clone()
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Best rational approximation with denominator at most `max_den`,
/// by continued fractions.
pub fn approximate(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let sign = if x < 0.0 { -1i64 } else { 1 };
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e18 {
            break;
        }
        let a = a as u128;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        if q2 > max_den as u128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a as f64;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let num = BigInt::from(p1) * BigInt::from(sign);
    Some(Rat::new(num, BigInt::from(q1)))
}

/// serde helpers: rationals travel as `"p/q"` strings.
pub mod serde_rat {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        parse_rat(&text).map_err(de::Error::custom)
    }
}

pub mod serde_rat_vec {
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    use super::{parse_rat, Rat};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rat(t).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(parse_rat("2/-4").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1e3").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn canonical_display() {
        assert_eq!(ratio(6, -8).to_string(), "-3/4");
        assert_eq!(ratio(0, 5).to_string(), "0");
        assert_eq!(rat(7).to_string(), "7");
    }

    #[test]
    fn squares() {
        assert!(is_rational_square(&rat(16)));
        assert!(is_rational_square(&ratio(9, 4)));
        assert!(is_rational_square(&rat(0)));
        assert!(!is_rational_square(&rat(-4)));
        assert!(!is_rational_square(&rat(8)));
        assert!(!is_rational_square(&ratio(4, 3)));
    }

    #[test]
    fn continued_fraction_recovery() {
        assert_eq!(approximate(1.5, 1000).unwrap(), ratio(3, 2));
        assert_eq!(approximate(-2.0 / 3.0, 1000).unwrap(), ratio(-2, 3));
        assert_eq!(approximate(4.0, 10).unwrap(), rat(4));
        assert_eq!(approximate(0.0, 10).unwrap(), rat(0));
    }
}
