//! Scalar abstraction shared by every elimination routine.
//!
//! The linear algebra in this crate is written once against [`Field`] and
//! instantiated for exact rationals, real quadratic numbers and, for
//! cross-checks only, `f64`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A totally ordered field with a decidable sign.
///
/// For the exact implementations `sign` is exact. The `f64` implementation
/// treats anything within [`FLOAT_ZERO_TOLERANCE`] of zero as zero and must
/// never be used to decide a certificate.
pub trait Field:
    Clone + Debug + PartialEq + Zero + One + Neg<Output = Self> + FieldOps + for<'a> FieldOps<&'a Self>
{
    /// Sign of `self` relative to zero.
    fn sign(&self) -> Ordering;

    fn from_i64(v: i64) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    fn to_float(&self) -> f64;

    fn is_zero_exact(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Exact comparison through the sign of the difference.
    fn cmp_field(&self, other: &Self) -> Ordering {
        (self.clone() - other).sign()
    }
}

/// The four field operations with right-hand side `Rhs`.
pub trait FieldOps<Rhs = Self, Output = Self>:
    Add<Rhs, Output = Output> + Sub<Rhs, Output = Output> + Mul<Rhs, Output = Output> + Div<Rhs, Output = Output>
{
}

impl<T, Rhs, Output> FieldOps<Rhs, Output> for T where
    T: Add<Rhs, Output = Output> + Sub<Rhs, Output = Output> + Mul<Rhs, Output = Output> + Div<Rhs, Output = Output>
{
}

pub const FLOAT_ZERO_TOLERANCE: f64 = 1e-9;

impl Field for BigRational {
    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if Signed::is_positive(self) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_float(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    fn sign(&self) -> Ordering {
        if self.abs() <= FLOAT_ZERO_TOLERANCE {
            Ordering::Equal
        } else if *self > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_float(&self) -> f64 {
        *self
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Prints a rational as `a` or `a/b`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sign_and_order() {
        assert_eq!(ratio(-1, 3).sign(), Ordering::Less);
        assert_eq!(rat(0).sign(), Ordering::Equal);
        assert_eq!(ratio(7, 3).cmp_field(&rat(2)), Ordering::Greater);
    }

    #[test]
    fn float_sign_uses_tolerance() {
        assert_eq!(1e-12_f64.sign(), Ordering::Equal);
        assert_eq!((-0.5_f64).sign(), Ordering::Less);
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_rational(&ratio(7, 4)), "7/4");
        assert_eq!(fmt_rational(&rat(-3)), "-3");
    }
}
