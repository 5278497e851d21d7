//! Exact scalar arithmetic and the small linear algebra the geometry is built on.
//!
//! Everything above this module is generic over [`Field`]. Three backends are
//! provided: [`Rational`] (arbitrary precision), [`QuadExt`] (elements of a
//! single quadratic extension `Q(sqrt d)`), and [`Real`] (double precision,
//! used only for plotting and for cross-checking exact chains).

mod matrix;
mod poly;
mod quadratic;
mod rational;
mod real;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use matrix::{cross, dot, Mat2, Mat3};
pub use poly::{pn_polynomial, Polynomial};
pub use quadratic::QuadExt;
pub use rational::{parse_rational, rational, Rational};
pub use real::{Real, Tolerance, REAL_ZERO_EPS};

/// A commutative ring with unit into which the rationals embed.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }
}

/// A field backend for projective computations.
pub trait Field: Ring + Div<Output = Self> {
    /// Square root inside this field, if one exists.
    ///
    /// [`QuadExt`] adjoins a root on demand when the value is rational and no
    /// extension has been fixed yet.
    fn sqrt(&self) -> Option<Self>;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Rescale a homogeneous vector to its canonical representative.
    /// The vector must not be zero.
    fn canonicalize(coords: &mut [Self]) {
        divide_by_first_nonzero(coords);
    }

    /// Projective equality of two homogeneous vectors of equal length.
    /// Exact backends ignore the tolerance.
    fn proportional(a: &[Self], b: &[Self], _tol: Tolerance) -> bool {
        exact_proportional(a, b)
    }

    /// Zero test used by the floating backend's tolerance-aware predicates.
    fn is_negligible(&self, _scale: &Self, _tol: Tolerance) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64;
}

pub(crate) fn divide_by_first_nonzero<F: Field>(coords: &mut [F]) {
    if let Some(pivot) = coords.iter().find(|c| !c.is_zero()).cloned() {
        for c in coords.iter_mut() {
            *c = c.clone() / pivot.clone();
        }
    }
}

pub(crate) fn exact_proportional<R: Ring>(a: &[R], b: &[R]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let minor = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if !minor.is_zero() {
                return false;
            }
        }
    }
    true
}
