//! Scalar traits the linear-algebra layers are generic over.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An exact field: the coefficient domain for subspaces, derivations and the
/// cocycle systems.
pub trait Field: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> {
    fn from_int(x: i64) -> Self;
}

impl Field for BigRational {
    fn from_int(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
}

impl Field for Ratio<i64> {
    fn from_int(x: i64) -> Self {
        Ratio::from_integer(x)
    }
}

impl Field for Ratio<i128> {
    fn from_int(x: i64) -> Self {
        Ratio::from_integer(i128::from(x))
    }
}

/// A Euclidean ring of integers, used for Hermite normal forms.
pub trait IntegerRing: Clone + Debug + Display + Integer + Signed + From<i64> {}

impl<T> IntegerRing for T where T: Clone + Debug + Display + Integer + Signed + From<i64> {}
