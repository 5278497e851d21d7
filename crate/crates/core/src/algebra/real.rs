use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Field, Rational, Ring};

/// Absolute threshold below which a [`Real`] counts as zero in generic code.
/// Homogeneous vectors are scaled to unit max-norm, so this is relative to 1.
pub const REAL_ZERO_EPS: f64 = 1e-12;

/// Relative tolerance for projective equality in the floating backend.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { rel: 1e-9 }
    }
}

/// Double-precision scalar. A convenience view of exact data, never the
/// source of truth for a verdict.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Real(pub f64);

impl Real {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

impl Add for Real {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Real(self.0 + rhs.0)
    }
}

impl Sub for Real {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Real(self.0 - rhs.0)
    }
}

impl Mul for Real {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Real(self.0 * rhs.0)
    }
}

impl Div for Real {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Real(self.0 / rhs.0)
    }
}

impl Neg for Real {
    type Output = Self;
    fn neg(self) -> Self {
        Real(-self.0)
    }
}

impl Ring for Real {
    fn zero() -> Self {
        Real(0.0)
    }

    fn one() -> Self {
        Real(1.0)
    }

    fn is_zero(&self) -> bool {
        self.0.abs() <= REAL_ZERO_EPS
    }

    fn from_rational(r: &Rational) -> Self {
        Real(r.to_f64())
    }
}

impl Field for Real {
    fn sqrt(&self) -> Option<Self> {
        if self.0 >= 0.0 {
            Some(Real(self.0.sqrt()))
        } else if self.is_zero() {
            Some(Real(0.0))
        } else {
            None
        }
    }

    fn canonicalize(coords: &mut [Self]) {
        let pivot = coords
            .iter()
            .copied()
            .max_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
            .unwrap_or_default();
        if pivot.0 != 0.0 {
            for c in coords.iter_mut() {
                *c = Real(c.0 / pivot.0);
            }
        }
    }

    fn proportional(a: &[Self], b: &[Self], tol: Tolerance) -> bool {
        let norm = |v: &[Self]| v.iter().map(|x| x.0 * x.0).sum::<f64>().sqrt();
        let mut wedge = 0.0;
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                let m = a[i].0 * b[j].0 - a[j].0 * b[i].0;
                wedge += m * m;
            }
        }
        wedge.sqrt() <= tol.rel * norm(a) * norm(b)
    }

    fn is_negligible(&self, scale: &Self, tol: Tolerance) -> bool {
        self.0.abs() <= tol.rel * scale.0.abs().max(REAL_ZERO_EPS)
    }

    fn to_f64(&self) -> f64 {
        self.0
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
