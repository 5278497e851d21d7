#![allow(dead_code)]

use poncelet_core::algebra::{rational, Rational};
use poncelet_core::projective::{ConicParam, ProjLine, ProjPoint};
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=25).prop_map(|(n, d)| rational(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| *r != rational(0, 1))
}

pub fn param() -> impl Strategy<Value = ConicParam<Rational>> {
    prop_oneof![1 => Just(ConicParam::Infinity), 15 => rat().prop_map(ConicParam::Finite)]
}

pub fn triple() -> impl Strategy<Value = [Rational; 3]> {
    [rat(), rat(), rat()].prop_filter("nonzero", |c| c.iter().any(|x| *x != rational(0, 1)))
}

pub fn point() -> impl Strategy<Value = ProjPoint<Rational>> {
    triple().prop_map(|c| ProjPoint::from_rationals(&c).unwrap())
}

pub fn line() -> impl Strategy<Value = ProjLine<Rational>> {
    triple().prop_map(|c| ProjLine::from_rationals(&c).unwrap())
}

pub fn point_off_conic() -> impl Strategy<Value = ProjPoint<Rational>> {
    point().prop_filter("off conic", |p| !poncelet_core::conic::on_conic(p))
}
