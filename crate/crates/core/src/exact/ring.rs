//! Minimal algebra traits shared by rationals, number-field elements and
//! polynomials.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::error::ExactError;
use super::rational::Rational;

/// A commutative ring with identity whose values are immutable.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A ring in which exact quotients can be computed (an integral domain, or
/// something close enough that the subresultant algorithm only ever divides
/// exactly).
pub trait Domain: Ring {
    fn div_exact(&self, rhs: &Self) -> Result<Self, ExactError>;
}

/// A field of characteristic zero. Inversion is fallible because quotient
/// rings by reducible moduli are allowed to stand in for fields.
pub trait Field: Domain {
    fn inv(&self) -> Result<Self, ExactError>;
    fn from_rational(q: &Rational) -> Self;

    /// `Some(q)` when the value is known to lie in the prime field.
    fn as_rational(&self) -> Option<Rational>;

    fn div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self.clone() * &rhs.inv()?)
    }
}
