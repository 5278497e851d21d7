use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{Field, Rational, Ring};

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation in any ring the rationals embed into.
    pub fn eval<R: Ring>(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + R::from_rational(c))
    }

    /// Divide by `(x - r)`, assuming `r` is a root.
    fn deflate(&self, r: &Rational) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::default();
        }
        let mut out = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (1..n).rev() {
            carry = self.coeffs[k].clone() + carry * r.clone();
            out[k - 1] = carry.clone();
        }
        Self::new(out)
    }

    /// Distinct rational roots, ascending. Returns `None` when the integer
    /// coefficients are too large to enumerate divisor candidates.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.degree().is_none_or(|d| d == 0) {
            return Some(roots);
        }
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            while p.coeffs.first().is_some_and(Ring::is_zero) {
                p.coeffs.remove(0);
            }
        }
        if p.degree().is_some_and(|d| d > 0) {
            let ints = p.integer_coefficients();
            let lead = divisors(ints.last()?)?;
            let tail = divisors(ints.first()?)?;
            for q in &lead {
                for num in &tail {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(BigInt::from(sign) * num, q.clone());
                        if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    /// Roots split into exact rational ones and floating approximations of the
    /// remaining simple real roots.
    pub fn real_roots(&self) -> Option<(Vec<Rational>, Vec<f64>)> {
        let exact = self.rational_roots()?;
        let mut rest = self.clone();
        for r in &exact {
            while rest.degree().is_some_and(|d| d > 0) && rest.eval(r).is_zero() {
                rest = rest.deflate(r);
            }
        }
        Some((exact, rest.approximate_real_roots()))
    }

    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    /// Sign-change scan plus bisection inside the Cauchy bound.
    fn approximate_real_roots(&self) -> Vec<f64> {
        let Some(deg) = self.degree() else { return Vec::new() };
        if deg == 0 {
            return Vec::new();
        }
        let c: Vec<f64> = self.coeffs.iter().map(Field::to_f64).collect();
        let lead = c[deg];
        let bound = 1.0 + c[..deg].iter().map(|x| (x / lead).abs()).fold(0.0, f64::max);
        let f = |x: f64| c.iter().rev().fold(0.0, |acc, k| acc * x + k);
        let steps = 4000 * deg;
        let h = 2.0 * bound / steps as f64;
        let mut roots = Vec::new();
        let mut x0 = -bound;
        let mut f0 = f(x0);
        for i in 1..=steps {
            let x1 = -bound + h * i as f64;
            let f1 = f(x1);
            if f0 == 0.0 {
                roots.push(x0);
            } else if f0.signum() != f1.signum() && f1 != 0.0 {
                let (mut lo, mut hi) = (x0, x1);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if f(mid).signum() == f(lo).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            x0 = x1;
            f0 = f1;
        }
        roots
    }
}

/// Positive divisors of `n` (of `1` when `n == 0`), if `|n|` fits comfortably
/// in trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return Some(vec![BigInt::one()]);
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(BigInt::from(k));
            if k * k != n {
                out.push(BigInt::from(n / k));
            }
        }
        k += 1;
    }
    Some(out)
}

/// `P_0 = 1`, `P_1 = x`, `P_n = x P_{n-1} - P_{n-2}`.
pub fn pn_polynomial(n: usize) -> Polynomial {
    let mut prev = Polynomial::from_ints(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::x();
    for _ in 2..=n {
        let next = Polynomial::x() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl Add for Polynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for Polynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for Polynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::from_ints(&[1])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !Ring::is_one(&mag) {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, QuadExt};

    #[test]
    fn first_recurrence_terms() {
        assert_eq!(pn_polynomial(0), Polynomial::from_ints(&[1]));
        assert_eq!(pn_polynomial(1), Polynomial::from_ints(&[0, 1]));
        assert_eq!(pn_polynomial(2), Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(pn_polynomial(3), Polynomial::from_ints(&[0, -2, 0, 1]));
        assert_eq!(pn_polynomial(4), Polynomial::from_ints(&[1, 0, -3, 0, 1]));
        assert_eq!(pn_polynomial(4).to_string(), "x^4 - 3x^2 + 1");
    }

    #[test]
    fn evaluation_in_an_extension() {
        let s2 = QuadExt::sqrt_of(2);
        assert!(pn_polynomial(3).eval(&s2).is_zero());
        assert!(pn_polynomial(2).eval(&s2).is_one());
    }

    #[test]
    fn rational_roots_of_recurrence_polynomials() {
        assert_eq!(pn_polynomial(1).rational_roots().unwrap(), vec![rational(0, 1)]);
        assert_eq!(
            pn_polynomial(2).rational_roots().unwrap(),
            vec![rational(-1, 1), rational(1, 1)]
        );
        assert_eq!(pn_polynomial(3).rational_roots().unwrap(), vec![rational(0, 1)]);
        let p = Polynomial::new(vec![rational(-1, 1), rational(0, 1), rational(4, 1)]);
        assert_eq!(p.rational_roots().unwrap(), vec![rational(-1, 2), rational(1, 2)]);
    }

    #[test]
    fn irrational_roots_are_approximated() {
        let (exact, approx) = pn_polynomial(3).real_roots().unwrap();
        assert_eq!(exact, vec![rational(0, 1)]);
        assert_eq!(approx.len(), 2);
        let s = 2f64.sqrt();
        assert!((approx[0] + s).abs() < 1e-12 && (approx[1] - s).abs() < 1e-12);
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = Polynomial::from_ints(&[0, 0]);
        assert_eq!(z.degree(), None);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }
}
