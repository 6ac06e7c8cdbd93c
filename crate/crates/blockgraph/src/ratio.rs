//! Exact rationals as `"p/q"` strings at all serialization boundaries.
//!
//! Reports and wire formats never contain floats; a rational always
//! round-trips bit-exactly through its reduced `p/q` form.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, BigRational, One};

use crate::graph::Vertex;

/// Formats a rational in canonical `p/q` form (always with the denominator,
/// reduced, denominator positive). `2` becomes `"2/1"`.
pub fn format_pq(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Formats a rational compactly: integers without the `/1` suffix.
pub fn format_compact(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format_pq(r)
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serde adapter for `BTreeMap<Vertex, BigRational>` fields: JSON objects with
/// stringified vertex keys and `"p/q"` values.
pub mod rat_map {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<Vertex, BigRational>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        ser.collect_map(map.iter().map(|(v, r)| (v.to_string(), format_pq(r))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<Vertex, BigRational>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(de)?;
        let mut map = BTreeMap::new();
        for (k, v) in raw {
            let vertex: Vertex = k.parse().map_err(|_| D::Error::custom(format!("bad vertex key {k:?}")))?;
            let value = parse(&v).map_err(D::Error::custom)?;
            map.insert(vertex, value);
        }
        Ok(map)
    }
}

/// Serde adapter for `Vec<BigRational>` fields serialized as `"p/q"` strings.
pub mod rat_vec {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(format_pq))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter().map(|s| parse(s).map_err(D::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_roundtrip() {
        for s in ["2/1", "-3/2", "0/1", "355/113"] {
            assert_eq!(format_pq(&parse(s).unwrap()), s);
        }
        assert_eq!(format_pq(&parse("4/6").unwrap()), "2/3");
        assert_eq!(format_pq(&parse("-7").unwrap()), "-7/1");
        assert_eq!(format_pq(&parse("3/-2").unwrap()), "-3/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn compact_form() {
        assert_eq!(format_compact(&int(-2)), "-2");
        assert_eq!(format_compact(&rat(-3, 2)), "-3/2");
    }
}
