//! Coefficient fields.
//!
//! Everything symbolic in this crate is generic over [`Scalar`]. The exact
//! instantiation [`crate::Rational`] is what the pipelines use; floating point
//! types satisfy the bound too but axiom checks compare with `==`.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};

pub trait Scalar:
    Clone + Debug + Display + FromStr + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + FromStr + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

pub fn from_int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("scalar type cannot represent a small integer")
}

pub fn half<T: Scalar>() -> T {
    T::one() / from_int(2)
}

pub fn parse_scalar<T: Scalar>(s: &str) -> crate::Result<T> {
    s.trim().parse::<T>().map_err(|_| crate::Error::Parse(format!("invalid scalar {s:?}")))
}
