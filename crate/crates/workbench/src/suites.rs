//! Seeded property suites over random exact instances.
//!
//! Trial `i` of a run with seed `s` draws everything from
//! `Sampler::for_trial(s, i)`; degenerate draws are resampled from the same
//! stream, so a failure is reproduced by [`run_trial`] with `(s, i)` alone.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use poncelet_core::algebra::{rational, QuadExt, Rational, Ring};
use poncelet_core::conic::{line_conic_form, on_conic};
use poncelet_core::involution::{
    center_of, closing_center_locus, dual_moebius_check, fregier, harmonic_product_test, involution_from_fixed,
    moebius_check, moebius_instance, pascal_line, InvolutionChain, MoebiusVerdict,
};
use poncelet_core::porism::{concurrent_tangent_chain, Branch, LineConfiguration};
use poncelet_core::projective::{collinear, cross_ratio, is_harmonic, join, ConicParam, ProjLine, ProjPoint, Roots};
use poncelet_core::sample::Sampler;
use poncelet_core::GeometryError;
use rayon::prelude::*;

/// Resamples allowed inside one trial before it is reported as a failure.
pub const MAX_RESAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Two,
    Pascal,
    Aligned,
    Moebius,
    DualMoebius,
    Dalignes,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Two, Suite::Pascal, Suite::Aligned, Suite::Moebius, Suite::DualMoebius, Suite::Dalignes];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Two => "two",
            Suite::Pascal => "pascal",
            Suite::Aligned => "aligned",
            Suite::Moebius => "moebius",
            Suite::DualMoebius => "dual-moebius",
            Suite::Dalignes => "dalignes",
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown suite `{0}` (expected two, pascal, aligned, moebius, dual-moebius or dalignes)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// `Broken` perturbs the instance right before the final check, so every
/// suite should report failures; used to test failure reporting itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Oracle {
    #[default]
    Exact,
    Broken,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { instance: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    pub degenerate: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub seed: u64,
    pub trial: u64,
    pub instance: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct TrialReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub failures: Vec<Failure>,
    pub degenerate: usize,
    pub elapsed: Duration,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} trials, {} failures, {} degenerate resamples, {:.2?} (seed {})",
            self.suite,
            self.trials,
            self.failures.len(),
            self.degenerate,
            self.elapsed,
            self.seed
        )?;
        for x in &self.failures {
            writeln!(f, "  FAIL trial {} (seed {}): {}", x.trial, x.seed, x.reason)?;
            writeln!(f, "    instance: {}", x.instance)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, trials: u64, seed: u64, oracle: Oracle) -> TrialReport {
    let start = Instant::now();
    let records: Vec<TrialRecord> = (0..trials).into_par_iter().map(|i| run_trial(suite, seed, i, oracle)).collect();
    let degenerate = records.iter().map(|r| r.degenerate).sum();
    let failures = records
        .into_iter()
        .filter_map(|r| match r.outcome {
            Outcome::Pass => None,
            Outcome::Fail { instance, reason } => Some(Failure { seed, trial: r.trial, instance, reason }),
        })
        .collect();
    TrialReport { suite: suite.name().to_string(), seed, trials, failures, degenerate, elapsed: start.elapsed() }
}

/// One check: `Err(None)` asks for a resample, `Err(Some(..))` is a failure.
type Check = Result<(), Option<(String, String)>>;

fn failure(instance: impl Into<String>, reason: impl Into<String>) -> Check {
    Err(Some((instance.into(), reason.into())))
}

fn degenerate<T>(_: GeometryError) -> Result<T, Option<(String, String)>> {
    Err(None)
}

pub fn run_trial(suite: Suite, seed: u64, trial: u64, oracle: Oracle) -> TrialRecord {
    let mut s = Sampler::for_trial(seed, trial);
    let broken = oracle == Oracle::Broken;
    let mut resamples = 0;
    loop {
        let result = match suite {
            Suite::Two => two(&mut s, broken),
            Suite::Pascal => pascal(&mut s, broken),
            Suite::Aligned => aligned(&mut s, broken),
            Suite::Moebius => moebius(&mut s, broken),
            Suite::DualMoebius => dual_moebius(&mut s, broken),
            Suite::Dalignes => dalignes(&mut s, broken),
        };
        let outcome = match result {
            Ok(()) => Outcome::Pass,
            Err(Some((instance, reason))) => Outcome::Fail { instance, reason },
            Err(None) if resamples < MAX_RESAMPLES => {
                resamples += 1;
                continue;
            }
            Err(None) => Outcome::Fail {
                instance: String::new(),
                reason: format!("no admissible instance after {MAX_RESAMPLES} resamples"),
            },
        };
        return TrialRecord { trial, degenerate: resamples, outcome };
    }
}

fn bump(t: &ConicParam<Rational>) -> ConicParam<Rational> {
    match t {
        ConicParam::Finite(r) => ConicParam::Finite(r + rational(1, 1)),
        ConicParam::Infinity => ConicParam::int(0),
    }
}

fn bump_point(p: &ProjPoint<Rational>) -> ProjPoint<Rational> {
    let [a, b, c] = p.coords().clone();
    ProjPoint::new([a, b, c + rational(1, 1)]).unwrap_or_else(|_| ProjPoint::from_ints(1, 0, 0))
}

fn bump_line(l: &ProjLine<Rational>) -> ProjLine<Rational> {
    let [a, b, c] = l.coords().clone();
    ProjLine::new([a + rational(1, 1), b, c]).unwrap_or_else(|_| ProjLine::from_ints(0, 0, 1))
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn quad(r: &Rational) -> QuadExt {
    QuadExt::rational(r.clone())
}

/// Both directions of the harmonic criterion for two involutions.
fn two(s: &mut Sampler, broken: bool) -> Check {
    // harmonic pairs => involutive product
    let p = s.distinct_params(3);
    let u = involution_from_fixed(&p[0], &p[1]).or_else(degenerate)?;
    let mut t2 = u.apply(&p[2]);
    if broken {
        t2 = bump(&t2);
    }
    if p.contains(&t2) {
        return Err(None);
    }
    let v = involution_from_fixed(&p[2], &t2).or_else(degenerate)?;
    let instance = format!("fix(u) = {{{}, {}}}, fix(v) = {{{}, {}}}", p[0], p[1], p[2], t2);
    if !is_harmonic((&p[0], &p[1]), (&p[2], &t2)).or_else(degenerate)? {
        return failure(instance, "pair is not harmonic");
    }
    if !u.map().compose(v.map()).trace().is_zero() || harmonic_product_test(&u, &v) != Ok(true) {
        return failure(instance, "harmonic pairs but trace(uv) != 0");
    }

    // centers on the closing locus of u => harmonic fixed points
    let q = s.distinct_params(2);
    let u = involution_from_fixed(&q[0], &q[1]).or_else(degenerate)?;
    let locus = closing_center_locus(&InvolutionChain::new(vec![u.clone()]).or_else(degenerate)?).or_else(degenerate)?;
    let mut c = s.points_on_line_off_conic(&locus, 1).remove(0);
    if broken {
        c = bump_point(&c);
    }
    let v = fregier(&c).or_else(degenerate)?;
    let instance = format!("fix(u) = {{{}, {}}}, center(v) = {c}", q[0], q[1]);
    let form = v.fixed_point_form();
    let fq = poncelet_core::projective::BinaryQuadratic::new(quad(&form.a), quad(&form.b), quad(&form.c));
    let Roots::Pair(r1, r2) = fq.roots() else { return Err(None) };
    let (s1, s2) = (q[0].map(quad), q[1].map(quad));
    let cr = cross_ratio(&s1, &s2, &r1, &r2).or_else(degenerate)?;
    if cr != QuadExt::from_i64(-1) {
        return failure(instance, format!("cross-ratio {cr} != -1"));
    }
    Ok(())
}

fn pascal(s: &mut Sampler, broken: bool) -> Check {
    let hex: [ConicParam<Rational>; 6] = s.distinct_params(6).try_into().expect("six parameters");
    let out = pascal_line(&hex).or_else(degenerate)?;
    let mut pts = out.points.clone();
    if broken {
        pts[2] = bump_point(&pts[2]);
    }
    if !collinear(&pts) {
        return failure(list(&hex), format!("Pascal points {} not collinear", list(&pts)));
    }
    Ok(())
}

fn aligned(s: &mut Sampler, broken: bool) -> Check {
    let l = s.line();
    for k in [3, 5, 7] {
        let mut centers = s.points_on_line_off_conic(&l, k);
        if broken {
            centers[k - 1] = bump_point(&centers[k - 1]);
        }
        let chain = InvolutionChain::from_centers(&centers).or_else(degenerate)?;
        let instance = format!("line {l}, centers {}", list(&centers));
        if !chain.product().trace().is_zero() {
            return failure(instance, format!("{k} aligned centers, trace {} != 0", chain.product().trace()));
        }
        if k == 3 {
            let c = center_of(chain.product()).or_else(degenerate)?;
            if !c.lies_on(&l) {
                return failure(instance, format!("product center {c} is off the centers' line"));
            }
        }
    }

    // converse: third center on the closing locus of the first two
    let (c1, c2) = (s.point_off_conic(), s.point_off_conic());
    let pair = InvolutionChain::from_centers(&[c1.clone(), c2.clone()]).or_else(degenerate)?;
    let locus = closing_center_locus(&pair).or_else(degenerate)?;
    let mut c3 = s.points_on_line_off_conic(&locus, 1).remove(0);
    if broken {
        c3 = bump_point(&c3);
    }
    let centers = [c1, c2, c3];
    let chain = InvolutionChain::from_centers(&centers).or_else(degenerate)?;
    let instance = format!("converse, centers {}", list(&centers));
    if !chain.product().trace().is_zero() {
        return failure(instance, "locus-constructed product is not involutive");
    }
    if !collinear(&centers) {
        return failure(instance, "involutive product with non-collinear centers");
    }
    Ok(())
}

fn moebius(s: &mut Sampler, broken: bool) -> Check {
    for n in 3..=6 {
        let l = s.line();
        let centers = s.points_on_line_off_conic(&l, n - 1);
        let seeds = s.distinct_params(2);
        let (x, mut y) = moebius_instance(&centers, seeds[0].clone(), seeds[1].clone()).or_else(degenerate)?;
        if broken {
            y[n - 1] = bump(&y[n - 1]);
        }
        let instance = format!("n = {n}, x = {}, y = {}", list(&x), list(&y));
        let primal = match moebius_check(&x, &y) {
            Ok(out) => out,
            Err(_) => return Err(None),
        };
        if primal.verdict != MoebiusVerdict::Holds {
            return failure(instance, format!("verdict {:?}", primal.verdict));
        }
        let t: Vec<_> = x.iter().chain(&y).cloned().collect();
        let dual = dual_moebius_check(&t).or_else(degenerate)?;
        if dual.verdict != primal.verdict {
            return failure(instance, format!("dual verdict {:?} differs", dual.verdict));
        }
    }
    Ok(())
}

fn dual_moebius(s: &mut Sampler, broken: bool) -> Check {
    // Brianchon: any six tangents
    let mut t = s.distinct_params(6);
    if broken {
        t[5] = bump(&t[5]);
    }
    let out = dual_moebius_check(&t).or_else(degenerate)?;
    if out.verdict != MoebiusVerdict::Holds {
        return failure(list(&t), "Brianchon diagonals not concurrent");
    }
    for n in 4..=6 {
        let l = s.line();
        let centers = s.points_on_line_off_conic(&l, n - 1);
        let seeds = s.distinct_params(2);
        let (x, y) = moebius_instance(&centers, seeds[0].clone(), seeds[1].clone()).or_else(degenerate)?;
        let mut t: Vec<_> = x.iter().chain(&y).cloned().collect();
        if broken {
            t[2 * n - 1] = bump(&t[2 * n - 1]);
        }
        let instance = format!("n = {n}, tangents at {}", list(&t));
        let dual = dual_moebius_check(&t).or_else(degenerate)?;
        let (px, py) = t.split_at(n);
        let primal = moebius_check(px, py).or_else(degenerate)?;
        if dual.verdict != MoebiusVerdict::Holds || dual.verdict != primal.verdict {
            return failure(instance, format!("dual {:?}, primal {:?}", dual.verdict, primal.verdict));
        }
        let polars: Vec<_> = primal.elements.iter().map(poncelet_core::conic::polar).collect();
        if polars != dual.elements {
            return failure(instance, "diagonals are not the polars of the Möbius points");
        }
    }
    Ok(())
}

fn dalignes(s: &mut Sampler, broken: bool) -> Check {
    for m in [3, 5] {
        let o = s.point_off_conic();
        let mut lines = Vec::with_capacity(m);
        while lines.len() < m {
            if let Ok(l) = join(&o, &s.point()) {
                lines.push(l);
            }
        }
        if broken {
            lines[m - 1] = bump_line(&lines[m - 1]);
        }
        if !LineConfiguration::new(lines.clone()).is_valid() {
            return Err(None);
        }
        let a1 = s.point_on_line(&lines[0]);
        if on_conic(&a1) {
            return Err(None);
        }
        let lq: Vec<ProjLine<QuadExt>> = lines.iter().map(|l| l.convert(quad).expect("nonzero")).collect();
        let start = a1.convert(quad).expect("nonzero");
        let chain = match concurrent_tangent_chain(&lq, &start, Branch::First) {
            Ok(c) => c,
            Err(GeometryError::DegenerateStart(_)) => return Err(None),
            Err(e) => return failure(format!("lines {}", list(&lines)), e.to_string()),
        };
        let closing = chain.closing_line.expect("recorded");
        let disc = line_conic_form(&closing).discriminant();
        if !disc.is_zero() {
            return failure(
                format!("m = {m}, lines {}, start {a1}", list(&lines)),
                format!("closing line {closing} has discriminant {disc}"),
            );
        }
    }
    Ok(())
}
