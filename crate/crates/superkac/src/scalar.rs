//! Exact scalars.
//!
//! Everything in this crate is computed over the rationals; no floating
//! point enters any code path.  JSON carries rationals as `"p/q"` strings
//! (the `/q` part is omitted for integers) so that round-trips are lossless.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type used throughout: arbitrary-precision rationals.
pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// True if `q` is an integer.
pub fn q_is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

/// True if `q` is a nonnegative integer.
pub fn q_is_nonneg_integer(q: &Q) -> bool {
    q_is_integer(q) && !q.is_negative()
}

/// Render as `p/q`, or just `p` when the denominator is one.
pub fn q_to_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `p` or `p/q` into an exact rational.
pub fn q_from_str(s: &str) -> Result<Q> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Domain(format!("invalid rational literal: {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(parse_int(p)?, den))
        }
    }
}

/// Serde adapter for a single rational as a `"p/q"` string.
pub mod qjson {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q_to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        q_from_str(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter for a vector of rationals.
pub mod qjson_vec {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|q| q_to_string(q)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| q_from_str(s).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "22/7"] {
            let q = q_from_str(s).unwrap();
            assert_eq!(q_to_string(&q), s);
        }
        // non-reduced input normalizes
        assert_eq!(q_to_string(&q_from_str("4/2").unwrap()), "2");
        assert!(q_from_str("1/0").is_err());
        assert!(q_from_str("abc").is_err());
    }
}
