//! Incidence geometry of the projective plane and the action of PGL(2) on
//! conic parameters.

mod mobius;
mod param;

use std::fmt;

use crate::algebra::{cross, dot, Field, Mat3, Rational, Ring, Tolerance};
use crate::error::GeometryError;

pub use mobius::MobiusMap;
pub use param::{cross_ratio, is_harmonic, BinaryQuadratic, ConicParam, Roots};

macro_rules! homogeneous_triple {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A ", $what, " of the projective plane in canonical homogeneous coordinates.")]
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name<F> {
            coords: [F; 3],
        }

        impl<F: Field> $name<F> {
            pub fn new(coords: [F; 3]) -> Result<Self, GeometryError> {
                if coords.iter().all(Ring::is_zero) {
                    return Err(GeometryError::ZeroVector);
                }
                let mut coords = coords;
                F::canonicalize(&mut coords);
                Ok(Self { coords })
            }

            /// Panics on the zero triple.
            pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Self {
                Self::new([F::from_i64(x0), F::from_i64(x1), F::from_i64(x2)])
                    .expect("nonzero triple")
            }

            pub fn from_rationals(coords: &[Rational; 3]) -> Result<Self, GeometryError> {
                Self::new(coords.clone().map(|c| F::from_rational(&c)))
            }

            pub fn coords(&self) -> &[F; 3] {
                &self.coords
            }

            /// Projective equality; exact backends ignore the tolerance.
            pub fn same_as(&self, other: &Self, tol: Tolerance) -> bool {
                F::proportional(&self.coords, &other.coords, tol)
            }

            /// Carry the coordinates into another backend.
            pub fn convert<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<$name<G>, GeometryError> {
                $name::new(self.coords.clone().map(|c| f(&c)))
            }
        }

        impl<F: fmt::Display> fmt::Display for $name<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [a, b, c] = &self.coords;
                write!(f, "({a}:{b}:{c})")
            }
        }
    };
}

homogeneous_triple!(ProjPoint, "point");
homogeneous_triple!(ProjLine, "line");

impl<F: Field> ProjPoint<F> {
    pub fn lies_on(&self, line: &ProjLine<F>) -> bool {
        dot(&self.coords, &line.coords).is_zero()
    }

    /// Incidence with a tolerance for the floating backend.
    pub fn nearly_on(&self, line: &ProjLine<F>, tol: Tolerance) -> bool {
        let scale = norm_sq(&self.coords) * norm_sq(&line.coords);
        let v = dot(&self.coords, &line.coords);
        (v.clone() * v).is_negligible(&scale, Tolerance { rel: tol.rel * tol.rel })
    }
}

impl<F: Field> ProjLine<F> {
    pub fn contains(&self, point: &ProjPoint<F>) -> bool {
        point.lies_on(self)
    }
}

fn norm_sq<F: Field>(v: &[F; 3]) -> F {
    dot(v, v)
}

/// The line through two distinct points.
pub fn join<F: Field>(p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<ProjLine<F>, GeometryError> {
    ProjLine::new(cross(&p.coords, &q.coords)).map_err(|_| GeometryError::CoincidentPoints)
}

/// The intersection point of two distinct lines.
pub fn meet<F: Field>(l: &ProjLine<F>, m: &ProjLine<F>) -> Result<ProjPoint<F>, GeometryError> {
    ProjPoint::new(cross(&l.coords, &m.coords)).map_err(|_| GeometryError::CoincidentLines)
}

fn all_minors_vanish<F: Field>(rows: &[&[F; 3]]) -> bool {
    let n = rows.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if !Mat3::from_rows(rows[i], rows[j], rows[k]).det().is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Every 3x3 minor of the stacked coordinates vanishes. Fewer than three
/// points are trivially collinear.
pub fn collinear<F: Field>(points: &[ProjPoint<F>]) -> bool {
    all_minors_vanish(&points.iter().map(|p| &p.coords).collect::<Vec<_>>())
}

/// Dual of [`collinear`].
pub fn concurrent<F: Field>(lines: &[ProjLine<F>]) -> bool {
    all_minors_vanish(&lines.iter().map(|l| &l.coords).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Real;

    type P = ProjPoint<Rational>;
    type L = ProjLine<Rational>;

    #[test]
    fn join_examples() {
        assert_eq!(join(&P::from_ints(1, 0, 0), &P::from_ints(0, 1, 0)).unwrap(), L::from_ints(0, 0, 1));
        assert_eq!(join(&P::from_ints(1, 1, 1), &P::from_ints(1, 2, 4)).unwrap(), L::from_ints(2, -3, 1));
        assert_eq!(join(&P::from_ints(1, 0, 1), &P::from_ints(1, 0, -1)).unwrap(), L::from_ints(0, 1, 0));
        assert_eq!(
            join(&P::from_ints(1, 2, 3), &P::from_ints(-2, -4, -6)),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&L::from_ints(0, -4, 1), &L::from_ints(5, -6, 1)).unwrap(), P::from_ints(2, 5, 20));
        assert_eq!(meet(&L::from_ints(1, 0, 0), &L::from_ints(0, 1, 0)).unwrap(), P::from_ints(0, 0, 1));
        assert_eq!(meet(&L::from_ints(0, -3, 1), &L::from_ints(10, -7, 1)).unwrap(), P::from_ints(4, 10, 30));
        assert_eq!(meet(&L::from_ints(1, 1, 1), &L::from_ints(3, 3, 3)), Err(GeometryError::CoincidentLines));
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(P::from_ints(4, 10, 30).coords(), P::from_ints(-2, -5, -15).coords());
        assert_eq!(P::new([Rational::zero(), Rational::zero(), Rational::zero()]), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn collinearity_examples() {
        assert!(collinear(&[P::from_ints(2, 5, 20), P::from_ints(4, 10, 30), P::from_ints(2, 5, 14)]));
        assert!(!collinear(&[P::from_ints(1, 0, 0), P::from_ints(0, 1, 0), P::from_ints(0, 0, 1)]));
        assert!(collinear(&[P::from_ints(1, 0, 0), P::from_ints(0, 1, 0), P::from_ints(1, 1, 0)]));
        assert!(collinear(&[P::from_ints(1, 0, 0), P::from_ints(0, 1, 0)]));
    }

    #[test]
    fn concurrency_examples() {
        assert!(concurrent(&[L::from_ints(1, 0, 0), L::from_ints(0, 1, 0), L::from_ints(1, 1, 0)]));
        assert!(!concurrent(&[L::from_ints(0, 0, 1), L::from_ints(0, 1, 0), L::from_ints(1, 0, 0)]));
    }

    #[test]
    fn float_projective_equality() {
        let a = ProjPoint::<Real>::new([Real(1.0), Real(2.0), Real(3.0)]).unwrap();
        let b = ProjPoint::<Real>::new([Real(-2.0), Real(-4.0), Real(-6.0 + 1e-12)]).unwrap();
        let c = ProjPoint::<Real>::new([Real(1.0), Real(2.0), Real(3.1)]).unwrap();
        assert!(a.same_as(&b, Tolerance::default()));
        assert!(!a.same_as(&c, Tolerance::default()));
    }
}
