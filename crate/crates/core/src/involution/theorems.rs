//! Collinearity statements on the conic: Pascal's hexagon, the Möbius
//! generalization to 2n-gons, and the polar (Brianchon-type) forms.

use super::fregier;
use crate::algebra::Field;
use crate::conic::{chord, tangent_at};
use crate::error::GeometryError;
use crate::projective::{collinear, concurrent, join, meet, ConicParam, ProjLine, ProjPoint};

#[derive(Clone, Debug, PartialEq)]
pub struct PascalOutcome<F> {
    /// The meets for the index pairs 12, 13, 23.
    pub points: [ProjPoint<F>; 3],
    pub collinear: bool,
}

/// Pascal points of the hexagon given as `p1 p2 p3 q3 q2 q1`:
/// `x_ij = (p_i q_j) ∩ (p_j q_i)`.
pub fn pascal_line<F: Field>(hexagon: &[ConicParam<F>; 6]) -> Result<PascalOutcome<F>, GeometryError> {
    let [p1, p2, p3, q3, q2, q1] = hexagon;
    let p = [p1, p2, p3];
    let q = [q1, q2, q3];
    let x = |i: usize, j: usize| -> Result<ProjPoint<F>, GeometryError> {
        let l = chord(p[i], q[j]).map_err(|_| GeometryError::DegenerateHexagon)?;
        let m = chord(p[j], q[i]).map_err(|_| GeometryError::DegenerateHexagon)?;
        meet(&l, &m).map_err(|_| GeometryError::DegenerateHexagon)
    };
    if !pairwise_distinct(hexagon) {
        return Err(GeometryError::DegenerateHexagon);
    }
    let points = [x(0, 1)?, x(0, 2)?, x(1, 2)?];
    let collinear = collinear(&points);
    Ok(PascalOutcome { points, collinear })
}

fn pairwise_distinct<F: Field>(params: &[ConicParam<F>]) -> bool {
    params.iter().enumerate().all(|(i, s)| params[i + 1..].iter().all(|t| s != t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoebiusVerdict {
    /// The first n-1 elements are aligned and so is the last.
    Holds,
    /// The first n-1 elements are aligned but the last is not.
    Fails,
    /// The first n-1 elements are not aligned; nothing to check.
    HypothesisNotMet,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusOutcome<T> {
    pub elements: Vec<T>,
    pub verdict: MoebiusVerdict,
}

fn verdict(head_aligned: bool, all_aligned: bool) -> MoebiusVerdict {
    match (head_aligned, all_aligned) {
        (false, _) => MoebiusVerdict::HypothesisNotMet,
        (true, true) => MoebiusVerdict::Holds,
        (true, false) => MoebiusVerdict::Fails,
    }
}

/// Möbius's theorem for the 2n-gon `x_1 .. x_n, y_1 .. y_n` on the conic.
///
/// `a_j = (x_j x_{j+1}) ∩ (y_j y_{j+1})` for `j < n`; the last point is
/// `(x_n y_1) ∩ (y_n x_1)` for odd `n` and `(x_n x_1) ∩ (y_n y_1)` for even `n`.
/// If `a_1 .. a_{n-1}` are collinear then `a_n` is on the same line.
pub fn moebius_check<F: Field>(
    x: &[ConicParam<F>],
    y: &[ConicParam<F>],
) -> Result<MoebiusOutcome<ProjPoint<F>>, GeometryError> {
    let n = x.len();
    if n < 3 || y.len() != n {
        return Err(GeometryError::DegenerateConstruction("need two sequences of n >= 3 parameters"));
    }
    let all: Vec<_> = x.iter().chain(y).cloned().collect();
    if !pairwise_distinct(&all) {
        return Err(GeometryError::DegenerateConstruction("repeated parameter"));
    }
    let side = |s: &ConicParam<F>, t: &ConicParam<F>| {
        chord(s, t).map_err(|_| GeometryError::DegenerateConstruction("chord"))
    };
    let cross = |l: ProjLine<F>, m: ProjLine<F>| {
        meet(&l, &m).map_err(|_| GeometryError::DegenerateConstruction("coincident sides"))
    };
    let mut points = Vec::with_capacity(n);
    for j in 0..n - 1 {
        points.push(cross(side(&x[j], &x[j + 1])?, side(&y[j], &y[j + 1])?)?);
    }
    let last = if n % 2 == 1 {
        cross(side(&x[n - 1], &y[0])?, side(&y[n - 1], &x[0])?)?
    } else {
        cross(side(&x[n - 1], &x[0])?, side(&y[n - 1], &y[0])?)?
    };
    points.push(last);
    if points[..n - 1].iter().all(|p| p == &points[0]) {
        return Err(GeometryError::DegenerateConstruction("hypothesis points coincide"));
    }
    let v = verdict(collinear(&points[..n - 1]), collinear(&points));
    Ok(MoebiusOutcome { elements: points, verdict: v })
}

/// The polar statement for the 2n tangents at `t_1 .. t_2n`.
///
/// With vertices `V_i = T_i ∩ T_{i+1}`, the diagonals are `V_j V_{j+n}` for
/// `j < n`. The last one is `V_n V_2n` for odd `n` and
/// `(T_n ∩ T_1)(T_2n ∩ T_{n+1})` for even `n`, the polar image of the wrap
/// point in [`moebius_check`] with `x_j = t_j`, `y_j = t_{j+n}`.
pub fn dual_moebius_check<F: Field>(t: &[ConicParam<F>]) -> Result<MoebiusOutcome<ProjLine<F>>, GeometryError> {
    let m = t.len();
    if m < 6 || m % 2 == 1 {
        return Err(GeometryError::DegeneratePolygon);
    }
    if !pairwise_distinct(t) {
        return Err(GeometryError::DegeneratePolygon);
    }
    let n = m / 2;
    let tangents: Vec<_> = t.iter().map(tangent_at).collect();
    let corner = |i: usize, j: usize| meet(&tangents[i], &tangents[j]).map_err(|_| GeometryError::DegeneratePolygon);
    let diagonal = |p: ProjPoint<F>, q: ProjPoint<F>| join(&p, &q).map_err(|_| GeometryError::DegeneratePolygon);
    let mut diagonals = Vec::with_capacity(n);
    for j in 0..n - 1 {
        diagonals.push(diagonal(corner(j, j + 1)?, corner(j + n, j + n + 1)?)?);
    }
    let last = if n % 2 == 1 {
        diagonal(corner(n - 1, n)?, corner(m - 1, 0)?)?
    } else {
        diagonal(corner(n - 1, 0)?, corner(m - 1, n)?)?
    };
    diagonals.push(last);
    let v = verdict(concurrent(&diagonals[..n - 1]), concurrent(&diagonals));
    Ok(MoebiusOutcome { elements: diagonals, verdict: v })
}

/// Two parameter sequences satisfying the hypothesis of [`moebius_check`]:
/// `x_{j+1} = u_j(x_j)` and `y_{j+1} = u_j(y_j)` for the involutions at the
/// given centers, so that `a_j` is the j-th center.
pub fn moebius_instance<F: Field>(
    centers: &[ProjPoint<F>],
    x1: ConicParam<F>,
    y1: ConicParam<F>,
) -> Result<(Vec<ConicParam<F>>, Vec<ConicParam<F>>), GeometryError> {
    let mut x = vec![x1];
    let mut y = vec![y1];
    for c in centers {
        let u = fregier(c)?;
        let nx = u.apply(x.last().expect("nonempty"));
        let ny = u.apply(y.last().expect("nonempty"));
        x.push(nx);
        y.push(ny);
    }
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, Mat3, Rational, Ring};
    use crate::conic::polar;

    type P = ProjPoint<Rational>;
    type T = ConicParam<Rational>;

    fn q(n: i64, d: i64) -> T {
        T::Finite(rational(n, d))
    }

    fn ints(v: &[i64]) -> Vec<T> {
        v.iter().map(|&k| T::int(k)).collect()
    }

    #[test]
    fn pascal_example() {
        let hex: [T; 6] = ints(&[0, 1, 2, 3, 4, 5]).try_into().unwrap();
        let out = pascal_line(&hex).unwrap();
        assert_eq!(out.points, [P::from_ints(2, 5, 20), P::from_ints(4, 10, 30), P::from_ints(2, 5, 14)]);
        let [a, b, c] = &out.points;
        assert!(Mat3::from_rows(a.coords(), b.coords(), c.coords()).det().is_zero());
        assert!(out.collinear);
    }

    #[test]
    fn pascal_pairing_permutation() {
        // reversing the roles of p and q keeps the same pairs
        let hex: [T; 6] = [q(5, 1), q(4, 1), q(3, 1), q(2, 1), q(1, 1), q(0, 1)];
        assert!(pascal_line(&hex).unwrap().collinear);
        let hex: [T; 6] = [T::Infinity, q(-1, 2), q(7, 3), q(2, 5), q(-4, 1), q(9, 2)];
        assert!(pascal_line(&hex).unwrap().collinear);
    }

    #[test]
    fn pascal_rejects_repeats() {
        let hex: [T; 6] = ints(&[0, 1, 2, 3, 4, 0]).try_into().unwrap();
        assert_eq!(pascal_line(&hex), Err(GeometryError::DegenerateHexagon));
    }

    fn line_points(n: usize) -> Vec<P> {
        // distinct points of x0 + x2 = 0, off the conic
        (0..n as i64).map(|k| P::from_ints(1, k + 1, -1)).collect()
    }

    #[test]
    fn moebius_on_generated_instances() {
        for n in 3..=6 {
            let (x, y) = moebius_instance(&line_points(n - 1), q(1, 3), q(-5, 2)).unwrap();
            let out = moebius_check(&x, &y).unwrap();
            assert_eq!(out.verdict, MoebiusVerdict::Holds, "n = {n}");
            assert_eq!(out.elements[..n - 1], line_points(n - 1)[..]);
        }
    }

    #[test]
    fn moebius_hypothesis_not_met() {
        let x = ints(&[0, 1, 2, 3]);
        let y = ints(&[10, -7, 5, 6]);
        let out = moebius_check(&x, &y).unwrap();
        assert_eq!(out.verdict, MoebiusVerdict::HypothesisNotMet);
        assert!(moebius_check(&ints(&[0, 1]), &ints(&[2, 3])).is_err());
        assert!(moebius_check(&ints(&[0, 1, 2]), &ints(&[3, 4, 0])).is_err());
    }

    #[test]
    fn moebius_three_is_pascal() {
        let x = ints(&[0, 1, 2]);
        let y = ints(&[3, 4, 5]);
        assert_eq!(moebius_check(&x, &y).unwrap().verdict, MoebiusVerdict::Holds);
    }

    #[test]
    fn dual_matches_primal_by_polarity() {
        for n in 3..=6 {
            let (x, y) = moebius_instance(&line_points(n - 1), q(2, 7), q(-3, 1)).unwrap();
            let primal = moebius_check(&x, &y).unwrap();
            let t: Vec<_> = x.iter().chain(&y).cloned().collect();
            let dual = dual_moebius_check(&t).unwrap();
            assert_eq!(dual.verdict, primal.verdict, "n = {n}");
            let polars: Vec<_> = primal.elements.iter().map(polar).collect();
            assert_eq!(dual.elements, polars);
        }
    }

    #[test]
    fn brianchon_hexagon() {
        let t = ints(&[0, 1, 3, -2, 7, 4]);
        assert_eq!(dual_moebius_check(&t).unwrap().verdict, MoebiusVerdict::Holds);
        assert!(dual_moebius_check(&ints(&[0, 1, 3, 4])).is_err());
        assert!(dual_moebius_check(&ints(&[0, 1, 3, 0, 7, 4])).is_err());
    }

    #[test]
    fn dual_hypothesis_not_met() {
        let t = ints(&[0, 1, 2, 3, 10, -7, 5, 6]);
        assert_eq!(dual_moebius_check(&t).unwrap().verdict, MoebiusVerdict::HypothesisNotMet);
    }
}
