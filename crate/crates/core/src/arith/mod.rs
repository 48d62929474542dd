//! Exact scalars and dense linear algebra over them.
//!
//! Two scalar types are provided: [`Rational`] (arbitrary precision) and
//! [`Cyclotomic`], an element of some cyclotomic field stored in the raw power
//! basis. Both implement [`Field`], which is what [`Matrix`] is generic over.

mod cyclotomic;
mod matrix;
mod rational;

pub use cyclotomic::{cyc_real_cos, Cyclotomic, ParseCyclotomicError};
pub use matrix::{Matrix, NotRational};
pub use rational::{rational_sqrt, Rational};

use std::fmt::Debug;

/// Exact field arithmetic used by [`Matrix`].
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Embedding into the cyclotomic numbers, used for characters.
    fn to_cyclotomic(&self) -> Cyclotomic;
    /// Complex conjugate.
    fn conj(&self) -> Self;

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let step = if n < 0 { Self::one().neg() } else { Self::one() };
        for _ in 0..n.unsigned_abs() {
            acc = acc.add(&step);
        }
        acc
    }
}

impl Field for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }

    fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::from_rational(self.clone())
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }

    fn one() -> Self {
        Cyclotomic::one()
    }

    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self)
    }

    fn to_cyclotomic(&self) -> Cyclotomic {
        self.clone()
    }

    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }

    fn from_int(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}
