//! Exact scalar fields.
//!
//! Every computation in this crate is exact, so the scalar abstraction is a
//! field with decidable equality and a notion of integrality. It is
//! implemented for [`num_rational::Ratio`] over any signed machine or
//! arbitrary-precision integer. Floating point types are intentionally not
//! implementors: kernels, ranks and equality tests need exact arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact field suitable for symbolic linear algebra.
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Lossless conversion of structure constants. Panics if the value does
    /// not fit the underlying integer type.
    fn from_i128(v: i128) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn is_integer(&self) -> bool;

    /// The value as an `i64`, when it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64>;

    /// Parse `"p/q"`, `"-p/q"` or an integer literal.
    fn parse_exact(s: &str) -> Option<Self>;

    /// True when `2 * self` is an integer.
    fn is_half_integer_multiple(&self) -> bool {
        (self.clone() + self.clone()).is_integer()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Debug
        + Display
        + Integer
        + Signed
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer does not fit scalar type"))
    }

    fn from_i128(v: i128) -> Self {
        Ratio::from_integer(T::from_i128(v).expect("integer does not fit scalar type"))
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if Ratio::is_integer(self) {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: T = num.parse().ok()?;
        let den: T = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }
}

/// An integer as a scalar.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n)
}

/// `a/b` as a scalar.
pub fn frac<S: Scalar>(a: i64, b: i64) -> S {
    S::from_frac(a, b)
}

/// Arbitrary precision rationals, the default scalar of the crate.
pub type BigQ = Ratio<BigInt>;
