use std::ops::Mul;

use super::{Field, Ring};

/// A 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(R::from_i64(a), R::from_i64(b), R::from_i64(c), R::from_i64(d))
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> R {
        self.a.clone() + self.d.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Adjugate, the inverse up to the factor `det`.
    pub fn adjugate(&self) -> Self {
        Self::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
            self.d.clone() * k.clone(),
        )
    }

    /// Exact `n`-th power by repeated squaring; `M^0` is the identity.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }

    /// Off-diagonal entries vanish and the diagonal entries agree.
    pub fn is_scalar_multiple_of_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && (self.a.clone() - self.d.clone()).is_zero()
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a + self.d.clone() * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// A 3x3 matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<R> {
    pub rows: [[R; 3]; 3],
}

impl<R: Ring> Mat3<R> {
    pub fn new(rows: [[R; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self::new(rows.map(|r| r.map(R::from_i64)))
    }

    pub fn from_rows(r0: &[R; 3], r1: &[R; 3], r2: &[R; 3]) -> Self {
        Self::new([r0.clone(), r1.clone(), r2.clone()])
    }

    fn at(&self, i: usize, j: usize) -> R {
        self.rows[i][j].clone()
    }

    pub fn det(&self) -> R {
        self.at(0, 0) * (self.at(1, 1) * self.at(2, 2) - self.at(1, 2) * self.at(2, 1))
            - self.at(0, 1) * (self.at(1, 0) * self.at(2, 2) - self.at(1, 2) * self.at(2, 0))
            + self.at(0, 2) * (self.at(1, 0) * self.at(2, 1) - self.at(1, 1) * self.at(2, 0))
    }

    pub fn transpose(&self) -> Self {
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| self.at(j, i))))
    }

    pub fn adjugate(&self) -> Self {
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let m = self.at(r[0], c[0]) * self.at(r[1], c[1]) - self.at(r[0], c[1]) * self.at(r[1], c[0]);
            if (i + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        };
        // adj = transpose of the cofactor matrix
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i))))
    }

    pub fn mul_vec(&self, v: &[R; 3]) -> [R; 3] {
        std::array::from_fn(|i| {
            self.at(i, 0) * v[0].clone() + self.at(i, 1) * v[1].clone() + self.at(i, 2) * v[2].clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.rows[i][j] == self.rows[j][i]))
    }
}

impl<F: Field> Mat3<F> {
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let adj = self.adjugate();
        Some(Self::new(adj.rows.map(|r| r.map(|x| x / det.clone()))))
    }
}

/// Antisymmetric cross form of two coordinate triples: the join of two points
/// or the meet of two lines.
pub fn cross<R: Ring>(p: &[R; 3], q: &[R; 3]) -> [R; 3] {
    [
        p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone(),
        p[2].clone() * q[0].clone() - p[0].clone() * q[2].clone(),
        p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone(),
    ]
}

pub fn dot<R: Ring>(p: &[R; 3], q: &[R; 3]) -> R {
    p[0].clone() * q[0].clone() + p[1].clone() * q[1].clone() + p[2].clone() * q[2].clone()
}
