use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Ring};
use crate::error::AlgebraError;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Longest textual rational accepted by [`parse_rational`].
pub const MAX_RATIONAL_LEN: usize = 4096;

/// Shorthand for `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parse `p`, `-p`, or `p/q` with decimal integers.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let err = || AlgebraError::Parse(text.chars().take(64).collect());
    if text.is_empty() || text.len() > MAX_RATIONAL_LEN {
        return Err(err());
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = parse_integer(num).ok_or_else(err)?;
    let den = parse_integer(den).ok_or_else(err)?;
    if den.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Exact integer square root, if `n` is a perfect square.
pub(crate) fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

pub(crate) fn exact_rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = exact_isqrt(r.numer())?;
    let d = exact_isqrt(r.denom())?;
    Some(Rational::new(n, d))
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn sqrt(&self) -> Option<Self> {
        exact_rational_sqrt(self)
    }

    /// Clear denominators, divide out the integer content, and make the first
    /// nonzero entry positive.
    fn canonicalize(coords: &mut [Self]) {
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if gcd.is_zero() {
            return;
        }
        let flip = ints
            .iter()
            .find(|n| !n.is_zero())
            .is_some_and(|n| n.sign() == Sign::Minus);
        for (c, n) in coords.iter_mut().zip(ints) {
            let mut v = n / &gcd;
            if flip {
                v = -v;
            }
            *c = Rational::from_integer(v);
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Integer `d` with `sqrt(r) = k * sqrt(d)` for some rational `k`, with small
/// square factors removed. Returns `(k, d)`.
pub(crate) fn split_square(r: &Rational) -> (Rational, BigInt) {
    // sqrt(p/q) = sqrt(p*q) / q
    let mut d = r.numer() * r.denom();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(2000u32);
    while p <= limit {
        let sq = &p * &p;
        if sq > d.abs() {
            break;
        }
        while (&d % &sq).is_zero() {
            d /= &sq;
            k *= &p;
        }
        p += 1u32;
    }
    if let Some(s) = exact_isqrt(&d.abs()) {
        if !s.is_zero() {
            d /= &s * &s;
            k *= s;
        }
    }
    (Rational::new(k, r.denom().clone()), d)
}
