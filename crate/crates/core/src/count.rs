//! Exact integer helpers shared by the counting engines.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Every count in this crate is an arbitrary-precision non-negative integer.
pub type ExactCount = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Burnside numerator {numerator} is not divisible by {denominator}")]
pub struct NonIntegral {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

/// `numerator / denominator`, refusing to round.
pub fn exact_div(numerator: &BigUint, denominator: &BigUint) -> Result<BigUint, NonIntegral> {
    let (q, r) = if denominator.is_zero() {
        (BigUint::zero(), BigUint::one())
    } else {
        numerator.div_rem(denominator)
    };
    if r.is_zero() {
        Ok(q)
    } else {
        Err(NonIntegral {
            numerator: numerator.clone(),
            denominator: denominator.clone(),
        })
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn pow(base: &BigUint, exp: usize) -> BigUint {
    num_traits::pow(base.clone(), exp)
}

/// Decimal-string serde adapter so machine output does not depend on the
/// big-integer crate's internal digit layout.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10).ok_or_else(|| D::Error::custom("bad decimal"))
    }

    pub mod vec {
        use num_bigint::BigUint;
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|x| x.to_str_radix(10)))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
            Vec::<String>::deserialize(d)?
                .into_iter()
                .map(|t| {
                    BigUint::parse_bytes(t.as_bytes(), 10)
                        .ok_or_else(|| D::Error::custom("bad decimal"))
                })
                .collect()
        }
    }
}
