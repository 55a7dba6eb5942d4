//! Exact univariate series arithmetic over ℚ.
//!
//! [`PowerSeries`] carries an explicit truncation order: coefficients of
//! `t^0..=t^order` are exact, nothing beyond is claimed. Binary operations
//! keep the smaller of the two orders.

mod polynomial;
mod power_series;
mod rational_function;

pub use polynomial::Polynomial;
pub use power_series::{coeffwise_leq, Comparison, PowerSeries};
pub use rational_function::RationalFunction;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational coefficient. Always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rats(xs: &[i64]) -> Vec<Rational> {
    xs.iter().copied().map(rat).collect()
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Parses a comma separated list such as `"1,-2,1/3"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(parse_rational).collect()
}

/// `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapters storing rationals as exact `"p/q"` strings.
///
/// Deserialisation also accepts bare JSON integers so that hand-written
/// input files can say `[1, -2, 1]`.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::de::{self, Deserializer, Visitor};
    use serde::ser::Serializer;
    use serde::{Deserialize, Serialize};
    use std::fmt;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }

    struct RationalVisitor;

    impl<'de> Visitor<'de> for RationalVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a rational as \"p/q\" or an integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(super::rat(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from_integer(v.into()))
        }
    }

    /// Wrapper used to (de)serialise rationals inside containers.
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct Exact(pub Rational);

    impl Serialize for Exact {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize(&self.0, s)
        }
    }

    impl<'de> Deserialize<'de> for Exact {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            deserialize(d).map(Exact)
        }
    }

    pub mod vec {
        use super::{Exact, Rational};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let wrapped: Vec<Exact> = v.iter().cloned().map(Exact).collect();
            wrapped.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let wrapped = Vec::<Exact>::deserialize(d)?;
            Ok(wrapped.into_iter().map(|e| e.0).collect())
        }
    }

    pub mod option {
        use super::{Exact, Rational};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            v.clone().map(Exact).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Ok(Option::<Exact>::deserialize(d)?.map(|e| e.0))
        }
    }
}

/// Serde adapters for arbitrary-precision integers.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Deserializer, Visitor};
    use serde::{Deserialize, Serialize, Serializer};
    use std::fmt;

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct Exact(pub BigInt);

    impl Serialize for Exact {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize(&self.0, s)
        }
    }

    impl<'de> Deserialize<'de> for Exact {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            d.deserialize_any(IntVisitor).map(Exact)
        }
    }

    struct IntVisitor;

    impl<'de> Visitor<'de> for IntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            v.trim().parse().map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(v.into())
        }
    }

    /// Integers that fit in an `i64` are written as JSON numbers, larger
    /// ones as decimal strings.
    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Exact::deserialize(d).map(|e| e.0)
    }

    pub mod vec {
        use super::Exact;
        use num_bigint::BigInt;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let wrapped: Vec<Exact> = v.iter().cloned().map(Exact).collect();
            wrapped.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Ok(Vec::<Exact>::deserialize(d)?.into_iter().map(|e| e.0).collect())
        }
    }
}
