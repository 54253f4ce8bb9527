//! Exact scalar and Laurent-polynomial arithmetic.
//!
//! Everything downstream works over [`Rational`] or the quadratic extension
//! [`QSqrtQ`], so identities like perfect reconstruction can be checked by
//! plain equality.

mod euclid;
mod laurent;
mod qsqrt;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use euclid::{extended_euclid, factor_multiplicity, Bezout};
pub(crate) use euclid::div_rem as euclid_div_rem;
pub use laurent::LaurentPoly;
pub use qsqrt::QSqrtQ;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("cannot evaluate a Laurent polynomial at zero")]
    EvalAtZero,
    #[error("the zero polynomial has infinite multiplicity")]
    ZeroPolynomial,
    #[error("factor must be a non-unit, non-zero polynomial")]
    UnitFactor,
    #[error("values over Q(√{left}) and Q(√{right}) cannot be combined")]
    MismatchedRadicand { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("extended Euclid needs at least one non-zero argument")]
    BothZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Coefficient ring for [`LaurentPoly`].
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
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
    fn from_rational(r: Rational) -> Self;
    fn to_f64(&self) -> f64;
}

/// A [`Scalar`] with multiplicative inverses for non-zero elements.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

impl Scalar for QSqrtQ {
    fn zero() -> Self {
        QSqrtQ::rational(Rational::zero())
    }
    fn one() -> Self {
        QSqrtQ::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.rat().is_zero() && self.irr().is_zero()
    }
    fn from_rational(r: Rational) -> Self {
        QSqrtQ::rational(r)
    }
    fn to_f64(&self) -> f64 {
        QSqrtQ::to_f64(self)
    }
}

impl Field for QSqrtQ {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}
