//! Exact rational helpers and their JSON form `{ "num": .., "den": .. }`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_u128(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// The integer value of `q`, if it is an integer fitting in `i64`.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Integer `n`-th root floor of a non-negative big integer.
pub fn floor_root(x: &BigInt, n: u32) -> BigInt {
    assert!(!x.is_negative());
    if x.is_zero() || n == 1 {
        return x.clone();
    }
    x.nth_root(n)
}

/// Serializable wrapper around an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub BigRational);

#[derive(Serialize, Deserialize)]
struct Pair {
    num: IntJson,
    den: IntJson,
}

/// Integers serialize as JSON numbers when they fit in `i64`, else as strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntJson {
    Small(i64),
    Big(String),
}

fn to_json_int(x: &BigInt) -> IntJson {
    match x.to_i64() {
        Some(v) => IntJson::Small(v),
        None => IntJson::Big(x.to_string()),
    }
}

fn from_json_int(x: IntJson) -> Result<BigInt, String> {
    match x {
        IntJson::Small(v) => Ok(BigInt::from(v)),
        IntJson::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Pair { num: to_json_int(self.0.numer()), den: to_json_int(self.0.denom()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = Pair::deserialize(d)?;
        let num = from_json_int(p.num).map_err(D::Error::custom)?;
        let den = from_json_int(p.den).map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Exact(BigRational::new(num, den)))
    }
}

impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_form() {
        let q = Exact(ratio(-5, 10));
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"num":-1,"den":2}"#);
        let back: Exact = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        let big = Exact(BigRational::from_integer(factorial(30)));
        let s = serde_json::to_string(&big).unwrap();
        assert!(s.contains('"'));
        assert_eq!(serde_json::from_str::<Exact>(&s).unwrap(), big);
    }

    #[test]
    fn roots() {
        assert_eq!(floor_root(&BigInt::from(27), 3), BigInt::from(3));
        assert_eq!(floor_root(&BigInt::from(26), 3), BigInt::from(2));
    }
}
