//! Line-oriented scene files.
//!
//! ```text
//! poncelet-scene 1
//! conic canonical
//! line L1 1/1 0/1 -1/1
//! point A 4/1 5/1 4/1
//! chain c dual closed
//! vertex c 1/1 3/1 1/1
//! tangency c 3/1
//! tangency c inf
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Coordinates are exact
//! rationals and are always written as `p/q`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use poncelet_core::algebra::{parse_rational, Rational};
use poncelet_core::porism::{ChainMode, LineConfiguration, PolygonChain};
use poncelet_core::projective::{ConicParam, ProjLine, ProjPoint};
use thiserror::Error;

pub const HEADER: &str = "poncelet-scene 1";
pub const MAX_SCENE_BYTES: usize = 1 << 20;
pub const MAX_RECORDS: usize = 20_000;
pub const MAX_NAME_LEN: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct SceneError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, SceneError> {
    Err(SceneError { line, message: message.into() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    Primal,
    Dual,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainTrace {
    pub name: String,
    pub mode: TraceMode,
    pub closed: bool,
    pub vertices: Vec<ProjPoint<Rational>>,
    pub tangencies: Vec<ConicParam<Rational>>,
}

impl ChainTrace {
    /// Records a rational chain; closed chains keep only the polygon's
    /// distinct vertices.
    pub fn from_chain(name: &str, chain: &PolygonChain<Rational>) -> Self {
        let mode = match chain.mode {
            ChainMode::Primal | ChainMode::ConcurrentTangent => TraceMode::Primal,
            ChainMode::Dual => TraceMode::Dual,
        };
        let vertices = if chain.closed { chain.polygon().to_vec() } else { chain.vertices.clone() };
        Self { name: name.to_string(), mode, closed: chain.closed, vertices, tangencies: chain.tangencies.clone() }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SceneDocument {
    pub lines: Vec<(String, ProjLine<Rational>)>,
    pub points: Vec<(String, ProjPoint<Rational>)>,
    pub chains: Vec<ChainTrace>,
}

impl SceneDocument {
    pub fn from_configuration(config: &LineConfiguration<Rational>) -> Self {
        let lines = config.lines().iter().enumerate().map(|(i, l)| (format!("L{}", i + 1), l.clone())).collect();
        Self { lines, ..Self::default() }
    }

    pub fn configuration(&self) -> LineConfiguration<Rational> {
        LineConfiguration::new(self.lines.iter().map(|(_, l)| l.clone()).collect())
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{HEADER}");
        let _ = writeln!(out, "conic canonical");
        for (name, l) in &self.lines {
            let _ = writeln!(out, "line {name} {}", triple(l.coords()));
        }
        for (name, p) in &self.points {
            let _ = writeln!(out, "point {name} {}", triple(p.coords()));
        }
        for c in &self.chains {
            let mode = match c.mode {
                TraceMode::Primal => "primal",
                TraceMode::Dual => "dual",
            };
            let state = if c.closed { "closed" } else { "open" };
            let _ = writeln!(out, "chain {} {mode} {state}", c.name);
            for v in &c.vertices {
                let _ = writeln!(out, "vertex {} {}", c.name, triple(v.coords()));
            }
            for t in &c.tangencies {
                let _ = writeln!(out, "tangency {} {}", c.name, param(t));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, SceneError> {
        if text.len() > MAX_SCENE_BYTES {
            return fail(0, format!("scene larger than {MAX_SCENE_BYTES} bytes"));
        }
        let mut doc = SceneDocument::default();
        let mut seen_header = false;
        let mut seen_conic = false;
        let mut records = 0usize;
        let (mut line_names, mut point_names, mut chain_names) = (HashSet::new(), HashSet::new(), HashSet::new());
        let mut chain_index: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            records += 1;
            if records > MAX_RECORDS {
                return fail(no, format!("more than {MAX_RECORDS} records"));
            }
            if !seen_header {
                if line != HEADER {
                    return fail(no, format!("expected header `{HEADER}`"));
                }
                seen_header = true;
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["conic", "canonical"] if !seen_conic => seen_conic = true,
                ["conic", ..] => return fail(no, "expected a single `conic canonical` record"),
                ["line", name, a, b, c] => {
                    check_name(no, name, &mut line_names)?;
                    let l = ProjLine::new(coords(no, [a, b, c])?).or_else(|_| fail(no, "zero line"))?;
                    doc.lines.push((name.to_string(), l));
                }
                ["point", name, a, b, c] => {
                    check_name(no, name, &mut point_names)?;
                    let p = ProjPoint::new(coords(no, [a, b, c])?).or_else(|_| fail(no, "zero point"))?;
                    doc.points.push((name.to_string(), p));
                }
                ["chain", name, mode, state] => {
                    check_name(no, name, &mut chain_names)?;
                    chain_index.insert(name.to_string(), doc.chains.len());
                    let mode = match *mode {
                        "primal" => TraceMode::Primal,
                        "dual" => TraceMode::Dual,
                        other => return fail(no, format!("unknown chain mode `{}`", clip(other))),
                    };
                    let closed = match *state {
                        "closed" => true,
                        "open" => false,
                        other => return fail(no, format!("unknown chain state `{}`", clip(other))),
                    };
                    doc.chains.push(ChainTrace {
                        name: name.to_string(),
                        mode,
                        closed,
                        vertices: vec![],
                        tangencies: vec![],
                    });
                }
                ["vertex", name, a, b, c] => {
                    let p = ProjPoint::new(coords(no, [a, b, c])?).or_else(|_| fail(no, "zero vertex"))?;
                    chain_mut(&mut doc, &chain_index, no, name)?.vertices.push(p);
                }
                ["tangency", name, t] => {
                    let t = parse_param(no, t)?;
                    chain_mut(&mut doc, &chain_index, no, name)?.tangencies.push(t);
                }
                [keyword, ..] => return fail(no, format!("malformed `{}` record", clip(keyword))),
                [] => unreachable!("blank lines are skipped"),
            }
        }
        if !seen_header {
            return fail(0, "empty scene");
        }
        if !seen_conic {
            return fail(0, "missing `conic canonical` record");
        }
        Ok(doc)
    }
}

fn clip(s: &str) -> String {
    s.chars().take(32).collect()
}

fn check_name(no: usize, name: &str, existing: &mut HashSet<String>) -> Result<(), SceneError> {
    let ok = !name.is_empty()
        && name.len() <= MAX_NAME_LEN
        && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-');
    if !ok {
        return fail(no, format!("invalid name `{}`", clip(name)));
    }
    if !existing.insert(name.to_string()) {
        return fail(no, format!("duplicate name `{name}`"));
    }
    Ok(())
}

fn chain_mut<'a>(
    doc: &'a mut SceneDocument,
    index: &HashMap<String, usize>,
    no: usize,
    name: &str,
) -> Result<&'a mut ChainTrace, SceneError> {
    match index.get(name) {
        Some(&i) => Ok(&mut doc.chains[i]),
        None => fail(no, format!("unknown chain `{}`", clip(name))),
    }
}

fn coords(no: usize, fields: [&&str; 3]) -> Result<[Rational; 3], SceneError> {
    let mut out: [Rational; 3] = Default::default();
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = parse_rational(f).or_else(|e| fail(no, e.to_string()))?;
    }
    Ok(out)
}

fn parse_param(no: usize, text: &str) -> Result<ConicParam<Rational>, SceneError> {
    if text == "inf" {
        return Ok(ConicParam::Infinity);
    }
    parse_rational(text).map(ConicParam::Finite).or_else(|e| fail(no, e.to_string()))
}

fn ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn triple(c: &[Rational; 3]) -> String {
    format!("{} {} {}", ratio(&c[0]), ratio(&c[1]), ratio(&c[2]))
}

fn param(t: &ConicParam<Rational>) -> String {
    match t {
        ConicParam::Finite(r) => ratio(r),
        ConicParam::Infinity => "inf".to_string(),
    }
}
