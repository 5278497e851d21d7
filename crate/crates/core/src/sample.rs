//! Seeded random instances.
//!
//! A run is identified by a 64-bit seed; trial `i` of a run draws from a
//! ChaCha8 stream seeded with `seed` and positioned on stream `i`, so any
//! single trial can be replayed from `(seed, i)` alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rational, Rational};
use crate::conic::on_conic;
use crate::projective::{ConicParam, ProjLine, ProjPoint};

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    /// Numerators and denominators are drawn from `[-bound, bound]` and
    /// `[1, bound]`.
    pub fn new(seed: u64, trial: u64, bound: i64) -> Self {
        assert!(bound >= 1);
        Self { rng: trial_rng(seed, trial), bound }
    }

    pub fn for_trial(seed: u64, trial: u64) -> Self {
        Self::new(seed, trial, 12)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.int(-self.bound, self.bound);
        let d = self.int(1, self.bound);
        rational(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    /// A rational parameter; infinity with probability about 1/32.
    pub fn param(&mut self) -> ConicParam<Rational> {
        if self.rng.random_range(0..32) == 0 {
            ConicParam::Infinity
        } else {
            ConicParam::Finite(self.rational())
        }
    }

    pub fn distinct_params(&mut self, k: usize) -> Vec<ConicParam<Rational>> {
        let mut out: Vec<ConicParam<Rational>> = Vec::with_capacity(k);
        while out.len() < k {
            let t = self.param();
            if !out.contains(&t) {
                out.push(t);
            }
        }
        out
    }

    fn triple(&mut self) -> [Rational; 3] {
        loop {
            let c = [self.rational(), self.rational(), self.rational()];
            if c.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                return c;
            }
        }
    }

    pub fn point(&mut self) -> ProjPoint<Rational> {
        ProjPoint::from_rationals(&self.triple()).expect("nonzero triple")
    }

    pub fn point_off_conic(&mut self) -> ProjPoint<Rational> {
        loop {
            let p = self.point();
            if !on_conic(&p) {
                return p;
            }
        }
    }

    pub fn line(&mut self) -> ProjLine<Rational> {
        ProjLine::from_rationals(&self.triple()).expect("nonzero triple")
    }

    /// A random point of `l`, as a combination of two fixed points of it.
    pub fn point_on_line(&mut self, l: &ProjLine<Rational>) -> ProjPoint<Rational> {
        let [a, b] = line_basis(l);
        loop {
            let s = self.rational();
            let t = self.rational();
            let c: [Rational; 3] = std::array::from_fn(|i| &s * &a[i] + &t * &b[i]);
            if let Ok(p) = ProjPoint::from_rationals(&c) {
                return p;
            }
        }
    }

    /// `k` distinct points of `l`, all off the conic.
    pub fn points_on_line_off_conic(&mut self, l: &ProjLine<Rational>, k: usize) -> Vec<ProjPoint<Rational>> {
        let mut out: Vec<ProjPoint<Rational>> = Vec::with_capacity(k);
        while out.len() < k {
            let p = self.point_on_line(l);
            if !on_conic(&p) && !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Two independent points spanning `l`.
pub fn line_basis(l: &ProjLine<Rational>) -> [[Rational; 3]; 2] {
    let [a, b, c] = l.coords().clone();
    let z = || rational(0, 1);
    // the cross products with the unit vectors span the line; pick two independent ones
    let candidates = [[z(), c.clone(), -b.clone()], [-c.clone(), z(), a.clone()], [b, -a, z()]];
    for i in 0..3 {
        for j in i + 1..3 {
            let w = crate::algebra::cross(&candidates[i], &candidates[j]);
            if w.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                return [candidates[i].clone(), candidates[j].clone()];
            }
        }
    }
    unreachable!("a nonzero line has a two-dimensional point space")
}
