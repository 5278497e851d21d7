//! Two lines: the involutions `u : t -> 1/t` (fixed points 1, -1) and
//! `v` with fixed points 0 and `2/x`, represented by
//! `M_u = [[0, 1], [1, 0]]` and `M_v = [[1, 0], [x, -1]]`. Then
//! `(M_u M_v)^n = [[x P_{n-1} - P_{n-2}, -P_{n-1}], [P_{n-1}, -P_{n-2}]]`,
//! so `(uv)^n = I` exactly when `P_{n-1}(x) = 0`.

use crate::algebra::{pn_polynomial, Field, Mat2};
use crate::involution::center_of;
use crate::projective::{ConicParam, MobiusMap, ProjPoint};

use super::LineConfiguration;

#[derive(Clone, Debug, PartialEq)]
pub struct TwoLineSystem<F> {
    x: F,
}

impl<F: Field> TwoLineSystem<F> {
    pub fn new(x: F) -> Self {
        Self { x }
    }

    pub fn x(&self) -> &F {
        &self.x
    }

    pub fn m_u(&self) -> Mat2<F> {
        Mat2::from_ints(0, 1, 1, 0)
    }

    pub fn m_v(&self) -> Mat2<F> {
        Mat2::new(F::one(), F::zero(), self.x.clone(), -F::one())
    }

    pub fn u(&self) -> MobiusMap<F> {
        MobiusMap::new(self.m_u()).expect("det -1")
    }

    pub fn v(&self) -> MobiusMap<F> {
        MobiusMap::new(self.m_v()).expect("det -1")
    }

    /// `M_u M_v`: `v` first, then `u`.
    pub fn product(&self) -> MobiusMap<F> {
        self.u().compose(&self.v())
    }

    pub fn centers(&self) -> [ProjPoint<F>; 2] {
        [
            center_of(&self.u()).expect("u is an involution"),
            center_of(&self.v()).expect("v is an involution"),
        ]
    }

    /// The polars of the two centers; valid unless `x = ±2`, where the fixed
    /// pairs share a point.
    pub fn configuration(&self) -> LineConfiguration<F> {
        LineConfiguration::from_poles(&self.centers())
    }

    /// Whether `(uv)^n` is the identity class.
    pub fn closes_at(&self, n: u32) -> bool {
        self.product().pow(n).is_identity_class()
    }

    /// The least `k` in `1..=max` with `(uv)^k = I`.
    pub fn minimal_closing_power(&self, max: u32) -> Option<u32> {
        // one power at a time; the matrices stay small
        let step = self.product();
        let mut acc = step.clone();
        for k in 1..=max {
            if acc.is_identity_class() {
                return Some(k);
            }
            acc = step.compose(&acc);
        }
        None
    }

    /// Applies `uv` to `start` `n` times and checks for a return.
    pub fn orbit_closes(&self, start: &ConicParam<F>, n: u32) -> bool {
        let w = self.product();
        let mut t = start.clone();
        for _ in 0..n {
            t = w.apply(&t);
        }
        &t == start
    }
}

/// `n` is the least power for which `(uv)^n = I`.
pub fn two_line_closure<F: Field>(x: &F, n: u32) -> bool {
    assert!(n >= 1);
    TwoLineSystem::new(x.clone()).minimal_closing_power(n) == Some(n)
}

/// `P_{n-1}(x) = 0` and `P_{n-2}(x) != 0`.
///
/// This holds exactly when `(uv)^n = I`, which is weaker than minimality:
/// `x = 0` gives `(uv)^2 = I`, and also satisfies the test at `n = 4`.
pub fn two_line_criterion<F: Field>(x: &F, n: u32) -> bool {
    assert!(n >= 2);
    let p1 = pn_polynomial(n as usize - 1).eval(x);
    let p2 = pn_polynomial(n as usize - 2).eval(x);
    p1.is_zero() && !p2.is_zero()
}
