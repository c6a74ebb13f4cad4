//! Scalar abstraction over the two arithmetic modes: exact rationals and `f64`.
//!
//! Exact mode is used to certify identities (a zero is a proof); float mode is
//! used by the optimizer and the random sweeps. Conversion is one-way:
//! rational structures can be lowered to floats, never the reverse.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::ToPrimitive;
use num::{BigRational, One, Signed, Zero};

/// Exact rational scalar (arbitrary precision).
pub type Rat = BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and zero tests are decisive.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact embedding of a finite double (dyadic rational).
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    /// Square root when representable in this scalar type.
    fn sqrt(&self) -> Option<Self>;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(f64::sqrt(*self))
        }
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_int(v: i64) -> Self {
        Rat::from_integer(v.into())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(num.into(), den.into())
    }
    fn from_f64(v: f64) -> Self {
        Rat::from_float(v).expect("finite float")
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn sqrt(&self) -> Option<Self> {
        None
    }
}

/// Zero test: exact in rational mode, `|x| <= tol` in float mode.
pub fn approx_zero<S: Scalar>(x: &S, tol: f64) -> bool {
    if S::EXACT {
        x.is_zero()
    } else {
        x.to_f64().abs() <= tol
    }
}

/// Sum of a slice of scalars in slice order.
pub fn sum<S: Scalar>(values: &[S]) -> S {
    let mut acc = S::zero();
    for v in values {
        acc = acc + v.clone();
    }
    acc
}
