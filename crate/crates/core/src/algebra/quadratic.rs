use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::rational::{exact_isqrt, exact_rational_sqrt, split_square};
use super::{divide_by_first_nonzero, Field, Rational, Ring};
use crate::error::AlgebraError;

/// An element `a + b*sqrt(d)` of a quadratic extension of the rationals.
///
/// `d` is a non-square integer fixed when the extension is first adjoined (by
/// [`QuadExt::sqrt`] or [`QuadExt::new`]). A value with `b == 0` carries no
/// `d` and combines with elements of any extension, which is the exact
/// embedding of the rationals. Combining elements of two different
/// extensions panics in the operators; use the `checked_*` methods to get an
/// [`AlgebraError::MixedExtension`] instead.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Option<BigInt>,
}

impl QuadExt {
    /// `a + b*sqrt(d)`. `d` must not be a perfect square.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        assert!(
            exact_isqrt(&d).is_none(),
            "sqrt({d}) is rational; use QuadExt::rational"
        );
        Self::normalized(a, b, Some(d))
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero(), d: None }
    }

    /// `sqrt(d)` for a non-square integer `d`.
    pub fn sqrt_of(d: i64) -> Self {
        Self::new(Rational::zero(), Rational::one(), d.into())
    }

    fn normalized(a: Rational, b: Rational, d: Option<BigInt>) -> Self {
        if b.is_zero() {
            Self { a, b, d: None }
        } else {
            Self { a, b, d }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    /// The radicand of the extension this element lives in, if it is irrational.
    pub fn radicand(&self) -> Option<&BigInt> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::normalized(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => self.a.clone() * self.a.clone(),
            Some(d) => {
                self.a.clone() * self.a.clone()
                    - Rational::from_integer(d.clone()) * self.b.clone() * self.b.clone()
            }
        }
    }

    /// Rewrite both operands over a common radicand.
    fn align(&self, other: &Self) -> Result<(Self, Self), AlgebraError> {
        match (&self.d, &other.d) {
            (Some(d1), Some(d2)) if d1 != d2 => {
                // Q(sqrt d1) = Q(sqrt d2) iff d1*d2 is a square k^2;
                // then sqrt d2 = (k/d1) sqrt d1.
                let k = exact_isqrt(&(d1 * d2)).ok_or_else(|| AlgebraError::MixedExtension {
                    left: d1.to_string(),
                    right: d2.to_string(),
                })?;
                let scale = Rational::new(k, d1.clone());
                let moved = Self::normalized(other.a.clone(), other.b.clone() * scale, Some(d1.clone()));
                Ok((self.clone(), moved))
            }
            _ => Ok((self.clone(), other.clone())),
        }
    }

    fn common_d(x: &Self, y: &Self) -> Option<BigInt> {
        x.d.clone().or_else(|| y.d.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (x, y) = self.align(other)?;
        let d = Self::common_d(&x, &y);
        Ok(Self::normalized(x.a + y.a, x.b + y.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (x, y) = self.align(other)?;
        let d = Self::common_d(&x, &y);
        let dd = d.clone().map(Rational::from_integer).unwrap_or_else(Rational::zero);
        let a = x.a.clone() * y.a.clone() + x.b.clone() * y.b.clone() * dd;
        let b = x.a * y.b + x.b * y.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        let norm = other.norm();
        if norm.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let scaled = self.checked_mul(&other.conjugate())?;
        Ok(Self::normalized(scaled.a / norm.clone(), scaled.b / norm, scaled.d))
    }

    fn expect<T>(r: Result<T, AlgebraError>) -> T {
        match r {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl From<Rational> for QuadExt {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        match self.align(other) {
            Ok((x, y)) => x.a == y.a && x.b == y.b,
            // distinct fields only share their rational elements
            Err(_) => false,
        }
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::expect(self.checked_add(&rhs))
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::expect(self.checked_sub(&rhs))
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::expect(self.checked_mul(&rhs))
    }
}

impl Div for QuadExt {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::expect(self.checked_div(&rhs))
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::normalized(-self.a, -self.b, self.d)
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn one() -> Self {
        Self::rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

impl Field for QuadExt {
    fn sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            if let Some(r) = exact_rational_sqrt(&self.a) {
                return Some(Self::rational(r));
            }
            let (k, d) = split_square(&self.a);
            return match &self.d {
                None => Some(Self::normalized(Rational::zero(), k, Some(d))),
                Some(_) => None,
            };
        }
        // (x + y sqrt d)^2 = a + b sqrt d  <=>  x^2 + d y^2 = a, 2xy = b
        let d = self.d.clone()?;
        let s = exact_rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for cand in [(self.a.clone() + s.clone()) / two.clone(), (self.a.clone() - s.clone()) / two.clone()] {
            if let Some(x) = exact_rational_sqrt(&cand) {
                if x.is_zero() {
                    continue;
                }
                let y = self.b.clone() / (two.clone() * x.clone());
                let root = Self::normalized(x, y, Some(d.clone()));
                if root.square() == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    fn canonicalize(coords: &mut [Self]) {
        divide_by_first_nonzero(coords);
        if coords.iter().all(QuadExt::is_rational) {
            let mut rats: Vec<Rational> = coords.iter().map(|c| c.a.clone()).collect();
            Rational::canonicalize(&mut rats);
            for (c, r) in coords.iter_mut().zip(rats) {
                *c = Self::rational(r);
            }
        }
    }

    fn to_f64(&self) -> f64 {
        let a = self.a.to_f64();
        match &self.d {
            None => a,
            Some(d) => {
                let d = Rational::from_integer(d.clone()).to_f64();
                if d < 0.0 {
                    f64::NAN
                } else {
                    a + self.b.to_f64() * d.sqrt()
                }
            }
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            None => write!(f, "{}", self.a),
            Some(d) => {
                if !self.a.is_zero() {
                    write!(f, "{}", self.a)?;
                    if self.b.is_positive() {
                        write!(f, "+")?;
                    }
                }
                if self.b == -Rational::one() {
                    write!(f, "-")?;
                } else if !self.b.is_one() {
                    write!(f, "{}*", self.b)?;
                }
                write!(f, "sqrt({d})")
            }
        }
    }
}
