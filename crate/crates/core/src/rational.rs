//! Exact rational numbers.
//!
//! Every weight, LP value and allocation entry is a [`Rational`]. Values are
//! rendered as `p/q`, or as a bare integer when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `-p` or `p/q`. Zero denominators and anything else are rejected.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid_digits = |s: &str, allow_sign: bool| {
        let body = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_digits(numer, true) || !valid_digits(denom, false) {
        return None;
    }
    let numer = BigInt::from_str(numer).ok()?;
    let denom = BigInt::from_str(denom).ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

pub fn format(value: &Rational) -> String {
    // num-rational prints the bare numerator for integral values
    value.to_string()
}

pub fn is_half_integral(value: &Rational) -> bool {
    let doubled = value * int(2);
    doubled.is_integer()
}

pub fn is_nonnegative(value: &Rational) -> bool {
    !value.is_negative()
}

pub fn ceil_half(count: usize) -> Rational {
    int(count.div_ceil(2) as i64)
}

/// Serde adapter storing rationals as `"p/q"` strings.
pub mod as_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&super::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        super::parse(&text).ok_or_else(|| D::Error::custom(format!("invalid rational `{text}`")))
    }
}

pub mod opt_as_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<Rational>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&super::format(v)),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(deserializer)?;
        text.map(|t| {
            super::parse(&t).ok_or_else(|| D::Error::custom(format!("invalid rational `{t}`")))
        })
        .transpose()
    }
}

pub mod vec_as_string {
    use super::Rational;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&super::format(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .into_iter()
            .map(|t| {
                super::parse(&t).ok_or_else(|| D::Error::custom(format!("invalid rational `{t}`")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("5/2"), Some(ratio(5, 2)));
        assert_eq!(parse("4/8"), Some(ratio(1, 2)));
        assert_eq!(parse("-1/3"), Some(ratio(-1, 3)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("1.5"), None);
        assert_eq!(parse("1/-2"), None);
        assert_eq!(parse(""), None);
        assert_eq!(parse("+2"), None);
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&ratio(4, 2)), "2");
        assert_eq!(format(&ratio(0, 7)), "0");
        assert_eq!(format(&ratio(1, -3)), "-1/3");
    }

    #[test]
    fn half_integrality() {
        assert!(is_half_integral(&ratio(3, 2)));
        assert!(is_half_integral(&int(1)));
        assert!(!is_half_integral(&ratio(1, 3)));
        assert_eq!(ceil_half(3), int(2));
        assert_eq!(ceil_half(4), int(2));
    }
}
