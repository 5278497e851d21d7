use std::fmt;

use super::param::{BinaryQuadratic, ConicParam, Roots};
use crate::algebra::{exact_proportional, Field, Mat2};
use crate::error::GeometryError;

/// An element of PGL(2): an invertible 2x2 matrix up to a nonzero scale,
/// acting by `t -> (a t + b) / (c t + d)`.
#[derive(Clone, Debug)]
pub struct MobiusMap<F> {
    matrix: Mat2<F>,
}

impl<F: Field> MobiusMap<F> {
    pub fn new(matrix: Mat2<F>) -> Result<Self, GeometryError> {
        if matrix.det().is_zero() {
            return Err(GeometryError::SingularMap);
        }
        Ok(Self { matrix })
    }

    /// Panics on a singular matrix.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(Mat2::from_ints(a, b, c, d)).expect("invertible matrix")
    }

    pub fn identity() -> Self {
        Self { matrix: Mat2::identity() }
    }

    pub fn matrix(&self) -> &Mat2<F> {
        &self.matrix
    }

    pub fn trace(&self) -> F {
        self.matrix.trace()
    }

    pub fn apply(&self, t: &ConicParam<F>) -> ConicParam<F> {
        let (n, d) = t.homogeneous();
        let m = &self.matrix;
        let num = m.a.clone() * n.clone() + m.b.clone() * d.clone();
        let den = m.c.clone() * n + m.d.clone() * d;
        ConicParam::from_homogeneous(num, den).expect("invertible map sends no point to (0:0)")
    }

    /// `self` after `other`: the matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { matrix: self.matrix.clone() * other.matrix.clone() }
    }

    pub fn inverse(&self) -> Self {
        Self { matrix: self.matrix.adjugate() }
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { matrix: self.matrix.pow(n) }
    }

    pub fn is_identity_class(&self) -> bool {
        self.matrix.is_scalar_multiple_of_identity()
    }

    /// Trace zero and not the identity class; equivalent to `g^2 = I` in PGL(2).
    pub fn is_involution(&self) -> bool {
        self.trace().is_zero() && !self.is_identity_class()
    }

    /// The form `c t^2 + (d - a) t - b` whose roots are the fixed points.
    pub fn fixed_point_form(&self) -> BinaryQuadratic<F> {
        let m = &self.matrix;
        BinaryQuadratic::new(m.c.clone(), m.d.clone() - m.a.clone(), -m.b.clone())
    }

    pub fn fixed_points(&self) -> Result<Roots<F>, GeometryError> {
        if self.is_identity_class() {
            return Err(GeometryError::IdentityMap);
        }
        Ok(self.fixed_point_form().roots())
    }

    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<MobiusMap<G>, GeometryError> {
        MobiusMap::new(self.matrix.map(f))
    }
}

impl<F: Field> PartialEq for MobiusMap<F> {
    fn eq(&self, other: &Self) -> bool {
        let a = self.matrix.entries().map(Clone::clone);
        let b = other.matrix.entries().map(Clone::clone);
        exact_proportional(&a, &b)
    }
}

impl<F: fmt::Display> fmt::Display for MobiusMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.matrix;
        write!(f, "[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, QuadExt, Rational};

    type G = MobiusMap<Rational>;
    type T = ConicParam<Rational>;

    #[test]
    fn apply_examples() {
        let inv = G::from_ints(0, 1, 1, 0);
        assert_eq!(inv.apply(&T::int(2)), T::Finite(rational(1, 2)));
        assert_eq!(inv.apply(&T::int(0)), T::Infinity);
        assert_eq!(G::from_ints(1, 0, 0, -1).apply(&T::Infinity), T::Infinity);
        let j = G::from_ints(0, -1, 1, 0);
        let t = T::Finite(rational(5, 7));
        assert_eq!(j.apply(&j.apply(&t)), t);
    }

    #[test]
    fn compose_examples() {
        let recip = G::from_ints(0, 1, 1, 0);
        let negate = G::from_ints(1, 0, 0, -1);
        assert_eq!(recip.compose(&negate), G::from_ints(0, -1, 1, 0));
        let g = G::from_ints(2, 3, 1, 4);
        assert!(g.compose(&g.inverse()).is_identity_class());
        // action of a compose b is b first
        let t = T::int(3);
        assert_eq!(recip.compose(&negate).apply(&t), recip.apply(&negate.apply(&t)));
    }

    #[test]
    fn equality_up_to_scale() {
        assert_eq!(G::from_ints(1, 2, 3, 4), G::from_ints(-2, -4, -6, -8));
        assert_ne!(G::from_ints(1, 2, 3, 4), G::from_ints(1, 2, 3, 5));
        assert!(matches!(MobiusMap::<Rational>::new(Mat2::from_ints(1, 2, 2, 4)), Err(GeometryError::SingularMap)));
    }

    #[test]
    fn involution_criterion() {
        assert!(G::from_ints(0, 1, 1, 0).is_involution());
        assert!(!G::identity().is_involution());
        assert!(!G::from_ints(1, -1, 1, 0).is_involution());
        assert!(G::from_ints(3, 5, 1, -3).compose(&G::from_ints(3, 5, 1, -3)).is_identity_class());
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(G::from_ints(0, 1, 1, 0).fixed_points().unwrap(), Roots::Pair(T::int(1), T::int(-1)));
        assert_eq!(G::from_ints(1, 0, 0, -1).fixed_points().unwrap(), Roots::Pair(T::int(0), T::Infinity));
        assert_eq!(G::identity().fixed_points(), Err(GeometryError::IdentityMap));
        let j = MobiusMap::<QuadExt>::from_ints(0, -1, 1, 0);
        let i = QuadExt::sqrt_of(-1);
        assert_eq!(j.fixed_points().unwrap(), Roots::Pair(ConicParam::Finite(i.clone()), ConicParam::Finite(-i)));
        assert!(matches!(
            MobiusMap::<Rational>::from_ints(0, -1, 1, 0).fixed_points().unwrap(),
            Roots::NotInField { .. }
        ));
    }
}
