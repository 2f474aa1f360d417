//! Exact rational scalars.
//!
//! Every endpoint handled by the interval machinery is an exact rational;
//! no floating point enters the order-theoretic decisions. Values render as
//! `"p/q"` (the `/q` omitted when the denominator is one) and parse back
//! bit-exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::Parse("denominator must be nonzero".into()));
        }
        Ok(ExactScalar(BigRational::new(numerator.into(), den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExactScalar(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        ExactScalar((&self.0 + &other.0) / BigRational::from_integer(2.into()))
    }

    /// The point a fraction `t` of the way from `self` to `other`.
    pub fn lerp(&self, other: &Self, t: &Self) -> Self {
        ExactScalar(&self.0 + (&other.0 - &self.0) * &t.0)
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Lossy conversion for reporting only; never used in order decisions.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub(crate) fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num)
            .map_err(|e| Error::Parse(format!("bad numerator {:?}: {}", num, e)))?;
        let den = BigInt::from_str(den)
            .map_err(|e| Error::Parse(format!("bad denominator {:?}: {}", den, e)))?;
        ExactScalar::new(num, den)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::integer(n)
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Div for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar(self.0 / rhs.0)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

/// Convenience used pervasively in tests: `rat("3/2")`.
pub fn rat(s: &str) -> ExactScalar {
    s.parse().expect("literal rational")
}

pub fn compare(a: &ExactScalar, b: &ExactScalar) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let x = ExactScalar::new(4, 6).unwrap();
        assert_eq!(x.to_string(), "2/3");
        let y = ExactScalar::new(3, -6).unwrap();
        assert_eq!(y.to_string(), "-1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/2", "-22/7", "1000000000000000001/3"] {
            let x: ExactScalar = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn integer_display_omits_denominator() {
        assert_eq!(rat("8/4").to_string(), "2");
    }

    #[test]
    fn midpoint_is_exact() {
        assert_eq!(rat("0").midpoint(&rat("3")), rat("3/2"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ExactScalar::new(1, 0).is_err());
    }
}
