//! Scalars typed on the command line: `p/q`, `sqrt(k)`, `a+b*sqrt(k)`,
//! `a-sqrt(k)` and similar, with `a`, `b` rational and `k` an integer.

use poncelet_core::algebra::{parse_rational, Field, QuadExt, Rational, Ring};
use thiserror::Error;

pub const MAX_SCALAR_LEN: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid scalar `{0}`")]
pub struct ScalarError(pub String);

pub fn parse_scalar(text: &str) -> Result<QuadExt, ScalarError> {
    let err = || ScalarError(text.chars().take(64).collect());
    if text.len() > MAX_SCALAR_LEN {
        return Err(err());
    }
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rat = |t: &str| -> Result<Rational, ScalarError> { parse_rational(t).map_err(|_| err()) };
    let Some(at) = s.find("sqrt(") else {
        return rat(&s).map(QuadExt::rational);
    };
    let inner = s[at + 5..].strip_suffix(')').ok_or_else(err)?;
    let radicand = rat(inner)?;
    if !radicand.is_integer() {
        return Err(err());
    }
    let prefix = &s[..at];
    let (a, coef) = if let Some(head) = prefix.strip_suffix('*') {
        match head.rfind(['+', '-']) {
            Some(i) if i > 0 => (rat(&head[..i])?, rat(head[i..].trim_start_matches('+'))?),
            _ => (Rational::zero(), rat(head)?),
        }
    } else if prefix.is_empty() {
        (Rational::zero(), Rational::one())
    } else {
        let (head, unit) = if let Some(h) = prefix.strip_suffix('+') {
            (h, Rational::one())
        } else if let Some(h) = prefix.strip_suffix('-') {
            (h, -Rational::one())
        } else {
            return Err(err());
        };
        let a = if head.is_empty() { Rational::zero() } else { rat(head)? };
        (a, unit)
    };
    let root = QuadExt::rational(radicand).sqrt().ok_or_else(err)?;
    Ok(QuadExt::rational(a) + QuadExt::rational(coef) * root)
}
