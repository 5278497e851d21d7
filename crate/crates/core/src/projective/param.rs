use std::fmt;

use crate::algebra::Field;
use crate::error::GeometryError;

/// A point of the projective line: a finite value or infinity.
///
/// Formulas work on the homogeneous pair `(t : 1)` / `(1 : 0)`, so infinity
/// never passes through a division.
#[derive(Clone, Debug, PartialEq)]
pub enum ConicParam<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> ConicParam<F> {
    pub fn int(t: i64) -> Self {
        ConicParam::Finite(F::from_i64(t))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ConicParam::Infinity)
    }

    pub fn finite(&self) -> Option<&F> {
        match self {
            ConicParam::Finite(t) => Some(t),
            ConicParam::Infinity => None,
        }
    }

    /// `(numerator, denominator)` with `(1, 0)` for infinity.
    pub fn homogeneous(&self) -> (F, F) {
        match self {
            ConicParam::Finite(t) => (t.clone(), F::one()),
            ConicParam::Infinity => (F::one(), F::zero()),
        }
    }

    /// `None` for `(0 : 0)`.
    pub fn from_homogeneous(num: F, den: F) -> Option<Self> {
        if den.is_zero() {
            (!num.is_zero()).then_some(ConicParam::Infinity)
        } else {
            Some(ConicParam::Finite(num / den))
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ConicParam<G> {
        match self {
            ConicParam::Finite(t) => ConicParam::Finite(f(t)),
            ConicParam::Infinity => ConicParam::Infinity,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ConicParam::Finite(t) => t.to_f64(),
            ConicParam::Infinity => f64::INFINITY,
        }
    }
}

impl<F: fmt::Display> fmt::Display for ConicParam<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicParam::Finite(t) => write!(f, "{t}"),
            ConicParam::Infinity => write!(f, "inf"),
        }
    }
}

/// `det[[p_n, q_n], [p_d, q_d]]`, zero iff the two parameters coincide.
pub(crate) fn bracket<F: Field>(p: &ConicParam<F>, q: &ConicParam<F>) -> F {
    let (pn, pd) = p.homogeneous();
    let (qn, qd) = q.homogeneous();
    pn * qd - qn * pd
}

/// Roots of a binary quadratic form.
#[derive(Clone, Debug, PartialEq)]
pub enum Roots<F> {
    Double(ConicParam<F>),
    /// The root taken with `+sqrt(disc)` first.
    Pair(ConicParam<F>, ConicParam<F>),
    /// The discriminant has no square root in this backend.
    NotInField { discriminant: F },
}

impl<F: Field> Roots<F> {
    pub fn to_vec(&self) -> Vec<ConicParam<F>> {
        match self {
            Roots::Double(t) => vec![t.clone()],
            Roots::Pair(s, t) => vec![s.clone(), t.clone()],
            Roots::NotInField { .. } => Vec::new(),
        }
    }

    pub fn contains(&self, t: &ConicParam<F>) -> bool {
        self.to_vec().iter().any(|r| bracket(r, t).is_zero())
    }
}

/// `a*n^2 + b*n*d + c*d^2` on homogeneous parameters `(n : d)`.
///
/// Line-conic intersections, tangents from a point and Mobius fixed points
/// are all roots of one of these.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryQuadratic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Field> BinaryQuadratic<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        Self { a, b, c }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn discriminant(&self) -> F {
        self.b.square() - F::from_i64(4) * self.a.clone() * self.c.clone()
    }

    pub fn eval(&self, t: &ConicParam<F>) -> F {
        let (n, d) = t.homogeneous();
        self.a.clone() * n.square() + self.b.clone() * n * d.clone() + self.c.clone() * d.square()
    }

    pub fn has_root(&self, t: &ConicParam<F>) -> bool {
        self.eval(t).is_zero()
    }

    /// Finite roots come before infinity when `a == 0`. Otherwise the roots
    /// are `(-p ± sqrt(p^2 - 4q)) / 2` for the monic form `t^2 + p t + q`,
    /// with `+` first, so rescaling the form never reorders them.
    pub fn roots(&self) -> Roots<F> {
        let two = F::from_i64(2);
        if self.a.is_zero() {
            if self.b.is_zero() {
                return Roots::Double(ConicParam::Infinity);
            }
            let finite = ConicParam::Finite(-self.c.clone() / self.b.clone());
            return Roots::Pair(finite, ConicParam::Infinity);
        }
        let p = self.b.clone() / self.a.clone();
        let q = self.c.clone() / self.a.clone();
        let disc = p.square() - F::from_i64(4) * q;
        if disc.is_zero() {
            return Roots::Double(ConicParam::Finite(-p / two));
        }
        match disc.sqrt() {
            Some(s) => Roots::Pair(
                ConicParam::Finite((-p.clone() + s.clone()) / two.clone()),
                ConicParam::Finite((-p - s) / two),
            ),
            None => Roots::NotInField { discriminant: self.discriminant() },
        }
    }

    /// The second root given a known one, by Vieta; `None` if `known` is not a
    /// root.
    pub fn other_root(&self, known: &ConicParam<F>) -> Option<ConicParam<F>> {
        if self.is_zero() || !self.has_root(known) {
            return None;
        }
        let (n1, d1) = known.homogeneous();
        // a n^2 + b n d + c d^2 = k (d1 n - n1 d)(d2 n - n2 d)
        let first = ConicParam::from_homogeneous(
            -self.b.clone() * d1.clone() - self.a.clone() * n1.clone(),
            self.a.clone() * d1.clone(),
        );
        first.or_else(|| {
            ConicParam::from_homogeneous(
                self.c.clone() * n1.clone(),
                -self.b.clone() * n1 - self.c.clone() * d1,
            )
        })
    }
}

/// `((a-c)(b-d)) / ((a-d)(b-c))`, computed on homogeneous brackets so that
/// infinity needs no special rule.
pub fn cross_ratio<F: Field>(
    a: &ConicParam<F>,
    b: &ConicParam<F>,
    c: &ConicParam<F>,
    d: &ConicParam<F>,
) -> Result<F, GeometryError> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if bracket(pts[i], pts[j]).is_zero() {
                return Err(GeometryError::DegenerateTuple);
            }
        }
    }
    Ok(bracket(a, c) * bracket(b, d) / (bracket(a, d) * bracket(b, c)))
}

/// Whether `{p1, p2}` and `{q1, q2}` separate each other harmonically.
///
/// Each pair is kept together, so the order inside a pair does not matter:
/// swapping inside a pair inverts the cross-ratio and `-1` is its own inverse.
/// Orders that split a pair move a harmonic quadruple to `2` or `1/2`, and a
/// pair-respecting value of `2` is not harmonic.
pub fn is_harmonic<F: Field>(
    pair1: (&ConicParam<F>, &ConicParam<F>),
    pair2: (&ConicParam<F>, &ConicParam<F>),
) -> Result<bool, GeometryError> {
    let cr = cross_ratio(pair1.0, pair1.1, pair2.0, pair2.1)?;
    Ok((cr + F::one()).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, QuadExt, Rational, Ring};

    type T = ConicParam<Rational>;

    fn q(n: i64, d: i64) -> T {
        ConicParam::Finite(rational(n, d))
    }

    #[test]
    fn cross_ratio_with_infinity() {
        let cr = cross_ratio(&T::int(1), &T::int(-1), &T::int(0), &T::Infinity).unwrap();
        assert_eq!(cr, rational(-1, 1));
        // normalization: (inf, 0; 1, t) = t
        let t = q(7, 3);
        assert_eq!(cross_ratio(&T::Infinity, &T::int(0), &T::int(1), &t).unwrap(), rational(7, 3));
        // the formula as stated puts (0, 1; inf, t) at (t - 1)/t
        assert_eq!(cross_ratio(&T::int(0), &T::int(1), &T::Infinity, &t).unwrap(), rational(4, 7));
    }

    #[test]
    fn cross_ratio_rejects_repeats() {
        assert_eq!(
            cross_ratio(&T::int(1), &T::int(1), &T::int(0), &T::Infinity),
            Err(GeometryError::DegenerateTuple)
        );
        assert_eq!(
            cross_ratio(&T::Infinity, &T::int(2), &T::int(0), &T::Infinity),
            Err(GeometryError::DegenerateTuple)
        );
    }

    #[test]
    fn harmonic_in_any_pair_respecting_order() {
        let (a, b, c, d) = (T::int(1), T::int(-1), T::int(0), T::Infinity);
        assert!(is_harmonic((&a, &b), (&c, &d)).unwrap());
        assert!(is_harmonic((&b, &a), (&d, &c)).unwrap());
        assert!(is_harmonic((&c, &d), (&b, &a)).unwrap());
        // splitting the pairs moves the value to 2
        assert_eq!(cross_ratio(&a, &c, &b, &d).unwrap(), rational(2, 1));
        assert!(!is_harmonic((&a, &c), (&b, &d)).unwrap());
        // (1, -1; 0, 1/3) = 2 with the pairs kept together: not harmonic
        assert_eq!(cross_ratio(&a, &b, &c, &q(1, 3)).unwrap(), rational(2, 1));
        assert!(!is_harmonic((&a, &b), (&c, &q(1, 3))).unwrap());
    }

    #[test]
    fn roots_with_infinity_and_extensions() {
        // 2 - 3t + t^2
        let f = BinaryQuadratic::new(rational(1, 1), rational(-3, 1), rational(2, 1));
        assert_eq!(f.roots(), Roots::Pair(T::int(2), T::int(1)));
        // -2 n d: roots 0 and infinity
        let g = BinaryQuadratic::new(rational(0, 1), rational(-2, 1), rational(0, 1));
        assert_eq!(g.roots(), Roots::Pair(T::int(0), T::Infinity));
        // t^2 + 1
        let h = BinaryQuadratic::new(rational(1, 1), rational(0, 1), rational(1, 1));
        assert_eq!(h.roots(), Roots::NotInField { discriminant: rational(-4, 1) });
        let hx = BinaryQuadratic::new(QuadExt::from_i64(1), QuadExt::from_i64(0), QuadExt::from_i64(1));
        let i = QuadExt::sqrt_of(-1);
        assert_eq!(hx.roots(), Roots::Pair(ConicParam::Finite(i.clone()), ConicParam::Finite(-i)));
    }

    #[test]
    fn vieta_other_root() {
        let f = BinaryQuadratic::new(rational(1, 1), rational(-3, 1), rational(2, 1));
        assert_eq!(f.other_root(&T::int(1)), Some(T::int(2)));
        assert_eq!(f.other_root(&T::int(5)), None);
        let g = BinaryQuadratic::new(rational(0, 1), rational(1, 1), rational(0, 1));
        assert_eq!(g.other_root(&T::int(0)), Some(T::Infinity));
        assert_eq!(g.other_root(&T::Infinity), Some(T::int(0)));
        let dbl = BinaryQuadratic::new(rational(1, 1), rational(-2, 1), rational(1, 1));
        assert_eq!(dbl.other_root(&T::int(1)), Some(T::int(1)));
        let at_inf = BinaryQuadratic::new(rational(0, 1), rational(0, 1), rational(1, 1));
        assert_eq!(at_inf.other_root(&T::Infinity), Some(T::Infinity));
    }
}
