//! The canonical smooth conic `D : x0*x2 = x1^2`, parametrized by the Veronese
//! map `t -> (1 : t : t^2)` with `inf -> (0 : 0 : 1)`.
//!
//! Its polarity form is `Q = [[0, 0, -1], [0, 2, 0], [-1, 0, 0]]`. Every other
//! smooth conic is projectively equivalent to this one, and all statements
//! here are projectively invariant.

use crate::algebra::{Field, Mat3, Ring};
use crate::error::GeometryError;
use crate::projective::{BinaryQuadratic, ConicParam, ProjLine, ProjPoint, Roots};

/// The symmetric form of the canonical conic.
pub fn polarity_matrix<F: Field>() -> Mat3<F> {
    Mat3::from_ints([[0, 0, -1], [0, 2, 0], [-1, 0, 0]])
}

/// A point of tangency together with its tangent line.
#[derive(Clone, Debug, PartialEq)]
pub struct TangencyRecord<F> {
    pub param: ConicParam<F>,
    pub line: ProjLine<F>,
    pub vertex: Option<ProjPoint<F>>,
}

impl<F: Field> TangencyRecord<F> {
    pub fn new(param: ConicParam<F>, vertex: Option<ProjPoint<F>>) -> Self {
        let line = tangent_at(&param);
        debug_assert!(vertex.as_ref().is_none_or(|v| v.lies_on(&line)));
        Self { param, line, vertex }
    }
}

/// Raw Veronese coordinates `(d^2, n d, n^2)` of a homogeneous parameter.
/// Ring-generic so symbolic entries can go through it.
pub fn veronese_coords<R: Ring>(n: &R, d: &R) -> [R; 3] {
    [d.clone() * d.clone(), n.clone() * d.clone(), n.clone() * n.clone()]
}

/// Raw chord coordinates `(s_n t_n, -(s_n t_d + s_d t_n), s_d t_d)`.
pub fn chord_coords<R: Ring>(s: (&R, &R), t: (&R, &R)) -> [R; 3] {
    let (sn, sd) = s;
    let (tn, td) = t;
    [
        sn.clone() * tn.clone(),
        -(sn.clone() * td.clone() + sd.clone() * tn.clone()),
        sd.clone() * td.clone(),
    ]
}

pub fn veronese<F: Field>(t: &ConicParam<F>) -> ProjPoint<F> {
    let (n, d) = t.homogeneous();
    ProjPoint::new(veronese_coords(&n, &d)).expect("Veronese image is never zero")
}

pub fn on_conic<F: Field>(p: &ProjPoint<F>) -> bool {
    conic_value(p).is_zero()
}

/// `x0*x2 - x1^2`.
pub fn conic_value<F: Field>(p: &ProjPoint<F>) -> F {
    let [x0, x1, x2] = p.coords();
    x0.clone() * x2.clone() - x1.square()
}

pub fn parameter_of<F: Field>(p: &ProjPoint<F>) -> Result<ConicParam<F>, GeometryError> {
    if !on_conic(p) {
        return Err(GeometryError::NotOnConic);
    }
    let [x0, x1, x2] = p.coords();
    // on the conic, x0 = 0 forces x1 = 0
    if x0.is_zero() {
        Ok(ConicParam::Infinity)
    } else if !x1.is_zero() {
        Ok(ConicParam::Finite(x2.clone() / x1.clone()))
    } else {
        Ok(ConicParam::Finite(F::zero()))
    }
}

/// The line through `veronese(s)` and `veronese(t)`.
pub fn chord<F: Field>(s: &ConicParam<F>, t: &ConicParam<F>) -> Result<ProjLine<F>, GeometryError> {
    let (sn, sd) = s.homogeneous();
    let (tn, td) = t.homogeneous();
    if (sn.clone() * td.clone() - tn.clone() * sd.clone()).is_zero() {
        return Err(GeometryError::EqualParameters);
    }
    ProjLine::new(chord_coords((&sn, &sd), (&tn, &td)))
}

/// `(t^2 : -2t : 1)`, the polar of `veronese(t)`.
pub fn tangent_at<F: Field>(t: &ConicParam<F>) -> ProjLine<F> {
    let (n, d) = t.homogeneous();
    ProjLine::new(chord_coords((&n, &d), (&n, &d))).expect("tangent is never zero")
}

pub fn polar<F: Field>(p: &ProjPoint<F>) -> ProjLine<F> {
    ProjLine::new(polarity_matrix::<F>().mul_vec(p.coords())).expect("polarity is invertible")
}

pub fn pole<F: Field>(l: &ProjLine<F>) -> ProjPoint<F> {
    ProjPoint::new(polarity_matrix::<F>().adjugate().mul_vec(l.coords())).expect("polarity is invertible")
}

/// `l2 t^2 + l1 t + l0`: vanishes exactly at the parameters of `l ∩ D`.
pub fn line_conic_form<F: Field>(l: &ProjLine<F>) -> BinaryQuadratic<F> {
    let [l0, l1, l2] = l.coords().clone();
    BinaryQuadratic::new(l2, l1, l0)
}

pub fn line_conic_params<F: Field>(l: &ProjLine<F>) -> Roots<F> {
    line_conic_form(l).roots()
}

pub fn is_tangent<F: Field>(l: &ProjLine<F>) -> bool {
    line_conic_form(l).discriminant().is_zero()
}

/// The other point where `l` meets the conic, given one meeting parameter.
pub fn second_intersection<F: Field>(
    l: &ProjLine<F>,
    s: &ConicParam<F>,
) -> Result<ConicParam<F>, GeometryError> {
    line_conic_form(l).other_root(s).ok_or(GeometryError::NotIncident)
}

/// `p0 t^2 - 2 p1 t + p2`: vanishes exactly at the parameters whose tangent
/// passes through `p`.
pub fn tangency_form<F: Field>(p: &ProjPoint<F>) -> BinaryQuadratic<F> {
    let [p0, p1, p2] = p.coords().clone();
    BinaryQuadratic::new(p0, -(F::from_i64(2) * p1), p2)
}

pub fn tangents_from<F: Field>(p: &ProjPoint<F>) -> Result<Roots<F>, GeometryError> {
    if on_conic(p) {
        return Err(GeometryError::PointOnConic);
    }
    Ok(tangency_form(p).roots())
}

/// The second tangent from `p`, given the parameter of one tangent through it.
pub fn other_tangent<F: Field>(
    p: &ProjPoint<F>,
    known: &ConicParam<F>,
) -> Result<ConicParam<F>, GeometryError> {
    if on_conic(p) {
        return Err(GeometryError::PointOnConic);
    }
    tangency_form(p).other_root(known).ok_or(GeometryError::NotIncident)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, QuadExt, Rational};

    type P = ProjPoint<Rational>;
    type L = ProjLine<Rational>;
    type T = ConicParam<Rational>;

    #[test]
    fn polarity_form_is_nondegenerate() {
        let q = polarity_matrix::<Rational>();
        assert!(q.is_symmetric());
        assert!(!q.det().is_zero());
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese(&T::int(0)), P::from_ints(1, 0, 0));
        assert_eq!(veronese(&T::int(2)), P::from_ints(1, 2, 4));
        assert_eq!(veronese(&T::Infinity), P::from_ints(0, 0, 1));
    }

    #[test]
    fn parameter_of_examples() {
        assert_eq!(parameter_of(&P::from_ints(1, 2, 4)), Ok(T::int(2)));
        assert_eq!(parameter_of(&P::from_ints(0, 0, 1)), Ok(T::Infinity));
        assert_eq!(parameter_of(&P::from_ints(1, 0, 0)), Ok(T::int(0)));
        assert_eq!(parameter_of(&P::from_ints(1, 1, 2)), Err(GeometryError::NotOnConic));
    }

    #[test]
    fn on_conic_examples() {
        assert!(on_conic(&P::from_ints(1, 3, 9)));
        assert!(!on_conic(&P::from_ints(0, 1, 0)));
        assert!(on_conic(&P::from_ints(0, 0, 1)));
    }

    #[test]
    fn chord_examples() {
        assert_eq!(chord(&T::int(1), &T::int(2)), Ok(L::from_ints(2, -3, 1)));
        assert_eq!(chord(&T::int(0), &T::Infinity), Ok(L::from_ints(0, 1, 0)));
        assert_eq!(chord(&T::int(3), &T::int(3)), Err(GeometryError::EqualParameters));
        let c = P::from_ints(1, 0, 1);
        for k in 1..6 {
            let t = T::Finite(rational(k, 3));
            let s = T::Finite(rational(-3, k));
            assert!(chord(&t, &s).unwrap().contains(&c));
        }
    }

    #[test]
    fn tangent_examples() {
        assert_eq!(tangent_at(&T::int(0)), L::from_ints(0, 0, 1));
        assert_eq!(tangent_at(&T::int(1)), L::from_ints(1, -2, 1));
        assert_eq!(tangent_at(&T::Infinity), L::from_ints(1, 0, 0));
    }

    #[test]
    fn polar_examples() {
        assert_eq!(polar(&P::from_ints(1, 0, 1)), L::from_ints(1, 0, 1));
        for t in [T::int(0), T::int(-3), T::Finite(rational(2, 7)), T::Infinity] {
            assert_eq!(pole(&tangent_at(&t)), veronese(&t));
            assert_eq!(polar(&veronese(&t)), tangent_at(&t));
        }
        let p = P::from_ints(3, -1, 7);
        assert_eq!(pole(&polar(&p)), p);
    }

    #[test]
    fn line_conic_examples() {
        assert_eq!(line_conic_params(&L::from_ints(2, -3, 1)), Roots::Pair(T::int(2), T::int(1)));
        assert_eq!(line_conic_params(&L::from_ints(1, -2, 1)), Roots::Double(T::int(1)));
        assert!(matches!(line_conic_params(&L::from_ints(1, 0, 1)), Roots::NotInField { .. }));
        let i = QuadExt::sqrt_of(-1);
        assert_eq!(
            line_conic_params(&ProjLine::<QuadExt>::from_ints(1, 0, 1)),
            Roots::Pair(ConicParam::Finite(i.clone()), ConicParam::Finite(-i))
        );
    }

    #[test]
    fn second_intersection_examples() {
        assert_eq!(second_intersection(&L::from_ints(2, -3, 1), &T::int(1)), Ok(T::int(2)));
        assert_eq!(second_intersection(&tangent_at(&T::int(1)), &T::int(1)), Ok(T::int(1)));
        assert_eq!(second_intersection(&L::from_ints(0, 1, 0), &T::int(0)), Ok(T::Infinity));
        assert_eq!(second_intersection(&L::from_ints(2, -3, 1), &T::int(5)), Err(GeometryError::NotIncident));
    }

    #[test]
    fn tangents_from_examples() {
        assert_eq!(tangents_from(&P::from_ints(0, 0, 1)), Err(GeometryError::PointOnConic));
        assert_eq!(tangents_from(&P::from_ints(0, 1, 0)), Ok(Roots::Pair(T::int(0), T::Infinity)));
        let i = QuadExt::sqrt_of(-1);
        assert_eq!(
            tangents_from(&ProjPoint::<QuadExt>::from_ints(1, 0, 1)),
            Ok(Roots::Pair(ConicParam::Finite(i.clone()), ConicParam::Finite(-i)))
        );
        assert_eq!(
            tangents_from(&ProjPoint::<QuadExt>::from_ints(1, 0, 1)).unwrap(),
            line_conic_params(&polar(&ProjPoint::<QuadExt>::from_ints(1, 0, 1)))
        );
    }

    #[test]
    fn other_tangent_by_vieta() {
        let a = P::from_ints(2, 3, 4);
        let roots = tangents_from(&a).unwrap();
        if let Roots::Pair(s, t) = roots {
            assert_eq!(other_tangent(&a, &s), Ok(t));
        } else {
            // 9 - 8 = 1 is a square, the tangents are rational
            panic!("expected rational tangents");
        }
    }
}
