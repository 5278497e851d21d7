//! Frégier involutions of the canonical conic and products of them.
//!
//! The involution with center `c` off the conic sends a point `s` of the conic
//! to the second intersection of the line `c, s` with the conic. On
//! parameters it is the traceless matrix `[[c1, -c2], [c0, -c1]]`.

mod theorems;

pub use theorems::{
    dual_moebius_check, moebius_check, moebius_instance, pascal_line, MoebiusOutcome, MoebiusVerdict,
    PascalOutcome,
};

use crate::algebra::{Field, Mat2, Ring};
use crate::conic::{on_conic, tangent_at};
use crate::error::GeometryError;
use crate::projective::{meet, BinaryQuadratic, ConicParam, MobiusMap, ProjLine, ProjPoint, Roots};

/// The Frégier matrix of a center, over any ring. Its determinant is
/// `c0 c2 - c1^2`, which vanishes exactly when the center is on the conic.
pub fn fregier_matrix<R: Ring>(center: &[R; 3]) -> Mat2<R> {
    let [c0, c1, c2] = center.clone();
    Mat2::new(c1.clone(), -c2, c0, -c1)
}

#[derive(Clone, Debug)]
pub struct FregierInvolution<F> {
    center: ProjPoint<F>,
    map: MobiusMap<F>,
}

impl<F: Field> PartialEq for FregierInvolution<F> {
    fn eq(&self, other: &Self) -> bool {
        self.center == other.center
    }
}

impl<F: Field> FregierInvolution<F> {
    pub fn new(center: ProjPoint<F>) -> Result<Self, GeometryError> {
        if on_conic(&center) {
            return Err(GeometryError::CenterOnConic);
        }
        let map = MobiusMap::new(fregier_matrix(center.coords())).map_err(|_| GeometryError::CenterOnConic)?;
        Ok(Self { center, map })
    }

    /// The involution realized by `g`, recovering its center.
    pub fn from_map(g: &MobiusMap<F>) -> Result<Self, GeometryError> {
        Self::new(center_of(g)?)
    }

    pub fn center(&self) -> &ProjPoint<F> {
        &self.center
    }

    pub fn map(&self) -> &MobiusMap<F> {
        &self.map
    }

    pub fn apply(&self, t: &ConicParam<F>) -> ConicParam<F> {
        self.map.apply(t)
    }

    pub fn fixed_points(&self) -> Roots<F> {
        self.map.fixed_point_form().roots()
    }

    /// The form whose roots are the fixed points; available even when the
    /// roots are not in the field.
    pub fn fixed_point_form(&self) -> BinaryQuadratic<F> {
        self.map.fixed_point_form()
    }
}

pub fn fregier<F: Field>(center: &ProjPoint<F>) -> Result<FregierInvolution<F>, GeometryError> {
    FregierInvolution::new(center.clone())
}

/// For `g = [[a, b], [c, -a]]` the center is `(c : a : -b)`.
pub fn center_of<F: Field>(g: &MobiusMap<F>) -> Result<ProjPoint<F>, GeometryError> {
    if !g.is_involution() {
        return Err(GeometryError::NotInvolution);
    }
    let m = g.matrix();
    ProjPoint::new([m.c.clone(), m.a.clone(), -m.b.clone()])
}

/// The unique involution fixing `t1` and `t2`; its center is the meet of the
/// tangents there.
pub fn involution_from_fixed<F: Field>(
    t1: &ConicParam<F>,
    t2: &ConicParam<F>,
) -> Result<FregierInvolution<F>, GeometryError> {
    let center = meet(&tangent_at(t1), &tangent_at(t2)).map_err(|_| GeometryError::EqualParameters)?;
    FregierInvolution::new(center)
}

/// Whether `u v` is an involution. For involutions without a common fixed
/// point this is equivalent to the two fixed pairs being harmonic.
pub fn harmonic_product_test<F: Field>(
    u: &FregierInvolution<F>,
    v: &FregierInvolution<F>,
) -> Result<bool, GeometryError> {
    if share_fixed_point(&u.fixed_point_form(), &v.fixed_point_form()) {
        return Err(GeometryError::SharedFixedPoint);
    }
    Ok(u.map.compose(&v.map).is_involution())
}

/// Resultant test: two nonzero binary quadratics have a common root over the
/// algebraic closure iff `(a1c2 - a2c1)^2 = (a1b2 - a2b1)(b1c2 - b2c1)`.
fn share_fixed_point<F: Field>(p: &BinaryQuadratic<F>, q: &BinaryQuadratic<F>) -> bool {
    let ac = p.a.clone() * q.c.clone() - q.a.clone() * p.c.clone();
    let ab = p.a.clone() * q.b.clone() - q.a.clone() * p.b.clone();
    let bc = p.b.clone() * q.c.clone() - q.b.clone() * p.c.clone();
    (ac.square() - ab * bc).is_zero()
}

/// A nonempty sequence of involutions, applied first to last.
#[derive(Clone, Debug)]
pub struct InvolutionChain<F> {
    members: Vec<FregierInvolution<F>>,
    product: MobiusMap<F>,
}

impl<F: Field> InvolutionChain<F> {
    pub fn new(members: Vec<FregierInvolution<F>>) -> Result<Self, GeometryError> {
        if members.is_empty() {
            return Err(GeometryError::InvalidConfiguration("empty involution chain".into()));
        }
        let product = members
            .iter()
            .skip(1)
            .fold(members[0].map.clone(), |acc, u| u.map.compose(&acc));
        Ok(Self { members, product })
    }

    pub fn from_centers(centers: &[ProjPoint<F>]) -> Result<Self, GeometryError> {
        Self::new(centers.iter().map(fregier).collect::<Result<_, _>>()?)
    }

    pub fn members(&self) -> &[FregierInvolution<F>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn centers(&self) -> Vec<ProjPoint<F>> {
        self.members.iter().map(|u| u.center.clone()).collect()
    }

    /// `u_n ... u_1`: the last member is applied last.
    pub fn product(&self) -> &MobiusMap<F> {
        &self.product
    }

    pub fn push(&mut self, u: FregierInvolution<F>) {
        self.product = u.map.compose(&self.product);
        self.members.push(u);
    }
}

pub fn product<F: Field>(chain: &InvolutionChain<F>) -> MobiusMap<F> {
    chain.product.clone()
}

/// Whether the product of the chain is an involution. With an odd number of
/// collinear centers this is always true.
pub fn aligned_centers_involutive<F: Field>(chain: &InvolutionChain<F>) -> bool {
    chain.product.is_involution()
}

/// The line of centers `c` for which appending the involution at `c` makes
/// the chain product an involution: `trace(M_c w) = 0` is linear in `c`.
///
/// For `w = [[a, b], [c, d]]` the trace is `b c0 + (a - d) c1 - c c2`.
pub fn closing_center_locus<F: Field>(chain: &InvolutionChain<F>) -> Result<ProjLine<F>, GeometryError> {
    let w = chain.product.matrix();
    ProjLine::new([w.b.clone(), w.a.clone() - w.d.clone(), -w.c.clone()]).map_err(|_| GeometryError::IdentityMap)
}
