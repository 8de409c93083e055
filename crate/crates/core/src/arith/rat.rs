use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exact rational scalar. `BigRational` keeps numerator and denominator coprime
/// with a positive denominator.
pub type Rat = BigRational;

pub fn ri(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    if let Some((a, b)) = t.split_once('/') {
        let p: BigInt = a.trim().parse().map_err(|_| bad())?;
        let q: BigInt = b.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(p, q))
    } else {
        let p: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(p))
    }
}

/// Canonical string: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_int(r: &Rat) -> bool {
    r.is_integer()
}

/// Total order key used for sorting root multisets.
pub fn cmp(a: &Rat, b: &Rat) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

pub fn to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    let n = r.numer();
    i64::try_from(n.clone()).ok()
}

pub mod serde_rat {
    //! serde adapters writing rationals as strings.
    use super::{parse_rat, rat_str, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_str(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::super::{parse_rat, rat_str, Rat};
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(rat_str))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter().map(|s| parse_rat(s).map_err(serde::de::Error::custom)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3", "1/2", "-7/3", "12/8"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&rat_str(&r)).unwrap(), r);
        }
        assert_eq!(rat_str(&parse_rat("12/8").unwrap()), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn sign_parity() {
        assert_eq!(sign(3), ri(-1));
        assert_eq!(sign(-2), ri(1));
    }
}
