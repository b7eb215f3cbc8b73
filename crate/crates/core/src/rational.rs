//! Exact rational values and their JSON form.
//!
//! Every weight and measure value in the crate is a [`Rational`]. On the wire a
//! rational is `{"num": a, "den": b, "decimal": f}` with `den > 0` and the
//! fraction in lowest terms; `decimal` is informational and ignored on input.
//! Numerators or denominators that do not fit in an `i64` are written as
//! decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"a/b"` or a bare integer. Rejects zero denominators.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| format!("bad numerator in {text:?}: {e}"))?;
    let den = BigInt::from_str(den).map_err(|e| format!("bad denominator in {text:?}: {e}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(num, den))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

fn int_to_json(value: &BigInt) -> serde_json::Value {
    match value.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(value.to_string()),
    }
}

fn int_from_json(value: &serde_json::Value) -> Result<BigInt, String> {
    match value {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| format!("non-integer rational component {n}")),
        serde_json::Value::String(s) => BigInt::from_str(s).map_err(|e| e.to_string()),
        other => Err(format!("expected integer, found {other}")),
    }
}

pub fn to_json(value: &Rational) -> serde_json::Value {
    serde_json::json!({
        "num": int_to_json(value.numer()),
        "den": int_to_json(value.denom()),
        "decimal": to_f64(value),
    })
}

pub fn from_json(value: &serde_json::Value) -> Result<Rational, String> {
    let obj = value
        .as_object()
        .ok_or_else(|| format!("expected rational object, found {value}"))?;
    let num = int_from_json(obj.get("num").ok_or("rational missing \"num\"")?)?;
    let den = int_from_json(obj.get("den").ok_or("rational missing \"den\"")?)?;
    if den.is_zero() {
        return Err("rational with zero denominator".into());
    }
    Ok(Rational::new(num, den))
}

/// `#[serde(with = "crate::rational::serde_rational")]`
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        to_json(value).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let raw = serde_json::Value::deserialize(deserializer)?;
        from_json(&raw).map_err(D::Error::custom)
    }
}

/// Same as [`serde_rational`] for `Option<Rational>` (`null` when absent).
pub mod serde_opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Rational>, serializer: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => to_json(v).serialize(serializer),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<Rational>, D::Error> {
        let raw = serde_json::Value::deserialize(deserializer)?;
        if raw.is_null() {
            return Ok(None);
        }
        from_json(&raw).map(Some).map_err(D::Error::custom)
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    from_int((1..=n as u64).fold(BigInt::one(), |acc, k| acc * k))
}

pub fn pow(base: &Rational, exp: i32) -> Rational {
    num_traits::pow::Pow::pow(base, exp)
}

pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("4/5").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational(" 6 / 8 ").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("2").unwrap(), from_int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn json_round_trip_keeps_lowest_terms() {
        let value = ratio(10, 26);
        let json = to_json(&value);
        assert_eq!(json["num"], 5);
        assert_eq!(json["den"], 13);
        assert_eq!(from_json(&json).unwrap(), value);
    }

    #[test]
    fn huge_components_travel_as_strings() {
        let big = from_int(BigInt::from(u64::MAX) * 7u32) / from_int(3);
        let json = to_json(&big);
        assert!(json["num"].is_string());
        assert_eq!(from_json(&json).unwrap(), big);
    }
}
