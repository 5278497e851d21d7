use crate::algebra::{dot, Field, Tolerance};
use crate::conic::{conic_value, line_conic_form, other_tangent, tangent_at, tangents_from};
use crate::error::GeometryError;
use crate::projective::{join, meet, ConicParam, ProjLine, ProjPoint, Roots};

use super::LineConfiguration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainMode {
    /// Tangent polygon walked through the configuration lines.
    Primal,
    /// Orbit on the conic under the pole involutions.
    Dual,
    /// Tangent polygon through an odd number of concurrent lines, walked twice.
    ConcurrentTangent,
}

/// Which of the two tangents from the start point the first edge uses.
/// Later edges always take the other tangent from the incoming one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Branch {
    #[default]
    First,
    Second,
}

/// Vertices `A_1 .. A_{2n+1}` and tangency parameters `e_0 .. e_{2n}`.
///
/// `A_k` is the meet of the tangents at `e_{k-1}` and `e_k` and lies on
/// line `((k - 1) mod n) + 1`; `A_{2n+1}` is the meet of the tangent at
/// `e_{2n}` with the first line. In dual mode the tangencies are the orbit
/// and the vertices are derived from it; in primal mode it is the other way
/// round. A concurrent-tangent chain stops at `A_{2m}` for `m` lines and
/// records the closing line `A_1 A_{2m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonChain<F> {
    pub mode: ChainMode,
    pub vertices: Vec<ProjPoint<F>>,
    pub tangencies: Vec<ConicParam<F>>,
    pub closed: bool,
    pub steps: usize,
    pub closing_line: Option<ProjLine<F>>,
}

impl<F: Field> PolygonChain<F> {
    /// The distinct vertices of a closed polygon.
    pub fn polygon(&self) -> &[ProjPoint<F>] {
        match self.mode {
            ChainMode::ConcurrentTangent => &self.vertices,
            _ => &self.vertices[..self.vertices.len().saturating_sub(1)],
        }
    }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn near_zero<F: Field>(x: &F) -> bool {
    x.is_negligible(&F::one(), tol())
}

fn incident<F: Field>(p: &ProjPoint<F>, l: &ProjLine<F>) -> bool {
    near_zero(&dot(p.coords(), l.coords()))
}

fn near_conic<F: Field>(p: &ProjPoint<F>) -> bool {
    near_zero(&conic_value(p))
}

fn near_tangent<F: Field>(l: &ProjLine<F>) -> bool {
    near_zero(&line_conic_form(l).discriminant())
}

fn same_point<F: Field>(p: &ProjPoint<F>, q: &ProjPoint<F>) -> bool {
    F::proportional(p.coords(), q.coords(), tol())
}

fn same_param<F: Field>(s: &ConicParam<F>, t: &ConicParam<F>) -> bool {
    let (a, b) = s.homogeneous();
    let (c, d) = t.homogeneous();
    F::proportional(&[a, b], &[c, d], tol())
}

fn all_distinct<T>(items: &[T], same: impl Fn(&T, &T) -> bool) -> bool {
    items.iter().enumerate().all(|(i, a)| items[i + 1..].iter().all(|b| !same(a, b)))
}

/// The orbit `p_0 = start`, `p_k = u_{((k-1) mod n) + 1}(p_{k-1})` for
/// `k = 1 .. 2n`; closed when `p_{2n} = p_0`.
pub fn dual_chain<F: Field>(
    config: &LineConfiguration<F>,
    start: &ConicParam<F>,
) -> Result<PolygonChain<F>, GeometryError> {
    let chain = config.involutions()?;
    let us = chain.members();
    let n = us.len();
    let lines = config.lines();
    if lines.iter().any(|l| line_conic_form(l).has_root(start)) {
        return Err(GeometryError::DegenerateStart("start is on a configuration line"));
    }
    let mut params = vec![start.clone()];
    for k in 1..=2 * n {
        let u = &us[(k - 1) % n];
        let prev = &params[k - 1];
        if u.fixed_point_form().has_root(prev) {
            return Err(GeometryError::DegenerateStart("orbit hits a fixed point"));
        }
        params.push(u.apply(prev));
    }
    if !all_distinct(&params[..2 * n], same_param) {
        return Err(GeometryError::DegenerateStart("orbit repeats a vertex"));
    }
    let vertices = (1..=2 * n + 1)
        .map(|k| {
            meet(&tangent_at(&params[k - 1]), &lines[(k - 1) % n])
                .map_err(|_| GeometryError::DegenerateStart("tangent coincides with a line"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let closed = same_param(&params[2 * n], &params[0]);
    Ok(PolygonChain { mode: ChainMode::Dual, vertices, tangencies: params, closed, steps: 2 * n, closing_line: None })
}

/// Walks `count` vertices from `start` on `lines[0]`, vertex `k` on
/// `lines[k mod m]`.
fn tangent_walk<F: Field>(
    lines: &[ProjLine<F>],
    start: &ProjPoint<F>,
    branch: Branch,
    count: usize,
) -> Result<(Vec<ProjPoint<F>>, Vec<ConicParam<F>>), GeometryError> {
    let m = lines.len();
    if !incident(start, &lines[0]) {
        return Err(GeometryError::DegenerateStart("start is not on the first line"));
    }
    if near_conic(start) {
        return Err(GeometryError::DegenerateStart("start is on the conic"));
    }
    if lines[1..].iter().any(|l| incident(start, l)) {
        return Err(GeometryError::DegenerateStart("start is on another line"));
    }
    let (first, other) = match tangents_from(start)? {
        Roots::Pair(r, s) => match branch {
            Branch::First => (r, s),
            Branch::Second => (s, r),
        },
        Roots::Double(_) => return Err(GeometryError::DegenerateStart("start is on the conic")),
        Roots::NotInField { .. } => return Err(GeometryError::FieldInsufficient),
    };
    let mut vertices = vec![start.clone()];
    let mut tangencies = vec![other, first];
    for k in 1..count {
        let e = tangencies.last().expect("nonempty").clone();
        let a = meet(&tangent_at(&e), &lines[k % m])
            .map_err(|_| GeometryError::DegenerateStart("edge coincides with a line"))?;
        if near_conic(&a) {
            return Err(GeometryError::DegenerateStart("vertex on the conic"));
        }
        if k + 1 < count {
            tangencies.push(other_tangent(&a, &e)?);
        }
        vertices.push(a);
    }
    Ok((vertices, tangencies))
}

/// The tangent polygon `A_1 .. A_{2n+1}` with `A_1 = start` on `L_1`,
/// vertices cycling through `L_1 .. L_n` twice, and `A_{2n+1}` back on `L_1`.
///
/// Only the first step takes a square root; on an exact backend without the
/// root this fails with `FieldInsufficient`.
pub fn primal_chain<F: Field>(
    config: &LineConfiguration<F>,
    start: &ProjPoint<F>,
    branch: Branch,
) -> Result<PolygonChain<F>, GeometryError> {
    config.require_valid()?;
    let n = config.len();
    let (vertices, tangencies) = tangent_walk(config.lines(), start, branch, 2 * n + 1)?;
    if !all_distinct(&vertices[..2 * n], same_point) {
        return Err(GeometryError::DegenerateStart("polygon repeats a vertex"));
    }
    let closed = same_point(&vertices[2 * n], &vertices[0]);
    Ok(PolygonChain { mode: ChainMode::Primal, vertices, tangencies, closed, steps: 2 * n, closing_line: None })
}

/// For `m = 2n + 1` lines through one point: walk `P_1 .. P_{2m}` with
/// `P_i` on line `((i - 1) mod m) + 1` and report whether `P_1 P_{2m}` is
/// tangent to the conic.
pub fn concurrent_tangent_chain<F: Field>(
    lines: &[ProjLine<F>],
    start: &ProjPoint<F>,
    branch: Branch,
) -> Result<PolygonChain<F>, GeometryError> {
    let m = lines.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(GeometryError::InvalidConfiguration(format!("need an odd number >= 3 of lines, got {m}")));
    }
    LineConfiguration::new(lines.to_vec()).require_valid()?;
    let (vertices, tangencies) = tangent_walk(lines, start, branch, 2 * m)?;
    let closing = join(&vertices[0], &vertices[2 * m - 1])
        .map_err(|_| GeometryError::DegenerateStart("closing vertices coincide"))?;
    let closed = near_tangent(&closing);
    Ok(PolygonChain {
        mode: ChainMode::ConcurrentTangent,
        vertices,
        tangencies,
        closed,
        steps: 2 * m - 1,
        closing_line: Some(closing),
    })
}

/// Each configuration line holds exactly two polygon vertices, the vertices
/// are distinct, and every side is tangent to the conic.
pub fn well_inscribed<F: Field>(chain: &PolygonChain<F>, config: &LineConfiguration<F>) -> Result<bool, GeometryError> {
    if !chain.closed {
        return Err(GeometryError::NotClosed);
    }
    let poly = chain.polygon();
    if poly.len() < 2 || !all_distinct(poly, same_point) {
        return Ok(false);
    }
    for l in config.lines() {
        if poly.iter().filter(|p| incident(p, l)).count() != 2 {
            return Ok(false);
        }
    }
    for k in 0..poly.len() {
        match join(&poly[k], &poly[(k + 1) % poly.len()]) {
            Ok(side) if near_tangent(&side) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}
