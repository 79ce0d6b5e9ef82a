//! The commutative ring contract and the two scalar rings ℤ and ℚ.
//!
//! Rings are values: every operation goes through a ring object so that
//! rings carrying configuration (such as the truncation order of a power
//! series ring) fit the same interface as ℚ.

use std::fmt::Debug;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type RationalScalar = BigRational;

/// A commutative ring with decidable, exact equality.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Exact division `a / b`, when the ring supports it and the quotient
    /// exists.
    fn exact_div(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Image of an integer under the canonical map ℤ → R.
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// Short identifier used in reports, e.g. `rational` or `qseries:8`.
    fn name(&self) -> String;

    /// JSON form of an element.
    fn to_json(&self, a: &Self::Elem) -> Value;
}

/// The integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() || !(a % b).is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn name(&self) -> String {
        "integer".into()
    }
    fn to_json(&self, a: &BigInt) -> Value {
        Value::String(a.to_string())
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = RationalScalar;

    fn zero(&self) -> RationalScalar {
        RationalScalar::zero()
    }
    fn one(&self) -> RationalScalar {
        RationalScalar::one()
    }
    fn add(&self, a: &RationalScalar, b: &RationalScalar) -> RationalScalar {
        a + b
    }
    fn neg(&self, a: &RationalScalar) -> RationalScalar {
        -a
    }
    fn mul(&self, a: &RationalScalar, b: &RationalScalar) -> RationalScalar {
        a * b
    }
    fn is_zero(&self, a: &RationalScalar) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &RationalScalar, b: &RationalScalar) -> Option<RationalScalar> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn from_int(&self, n: i64) -> RationalScalar {
        RationalScalar::from_integer(BigInt::from(n))
    }
    fn name(&self) -> String {
        "rational".into()
    }
    fn to_json(&self, a: &RationalScalar) -> Value {
        Value::String(format_rational(a))
    }
}

pub fn rational(num: i64, den: i64) -> RationalScalar {
    RationalScalar::new(BigInt::from(num), BigInt::from(den))
}

/// `m^(-k)` as an exact rational; `m` must be positive.
pub fn inverse_power(m: u64, k: i64) -> RationalScalar {
    let base = BigInt::from(m);
    let p = num::pow(base, k.unsigned_abs() as usize);
    if k >= 0 {
        RationalScalar::new(BigInt::one(), p)
    } else {
        RationalScalar::from_integer(p)
    }
}

/// Formats as `num/den`, omitting the denominator when it is 1.
pub fn format_rational(r: &RationalScalar) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den`.
pub fn parse_rational(s: &str) -> Result<RationalScalar> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    if d.is_negative() {
        return Ok(RationalScalar::new(-n, -d));
    }
    Ok(RationalScalar::new(n, d))
}
