//! Porism checks on a fixed configuration: the exact criterion against
//! traced chains.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use poncelet_core::algebra::{Rational, Real, Ring};
use poncelet_core::porism::{dual_chain, porism_holds, primal_chain, Branch, LineConfiguration, PolygonChain};
use poncelet_core::sample::Sampler;
use poncelet_core::GeometryError;
use rayon::prelude::*;

use crate::suites::MAX_RESAMPLES;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Dual chains over the rationals.
    #[default]
    Exact,
    /// Primal chains in `f64`.
    Float,
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            _ => Err(format!("unknown backend `{s}` (expected exact or float)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PorismReport {
    pub lines: usize,
    pub holds: bool,
    pub backend: Backend,
    pub starts: usize,
    pub closed: usize,
    /// Starts for which no admissible chain was found.
    pub unusable: usize,
    pub degenerate: usize,
    pub elapsed: Duration,
}

impl PorismReport {
    /// Every traced chain agrees with the criterion.
    pub fn consistent(&self) -> bool {
        let traced = self.starts - self.unusable;
        if self.holds {
            self.closed == traced
        } else {
            self.closed == 0
        }
    }
}

impl fmt::Display for PorismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lines: {}", self.lines)?;
        writeln!(f, "criterion (u_n..u_1 = id): {}", if self.holds { "holds" } else { "fails" })?;
        writeln!(
            f,
            "{} chains: {}/{} closed, {} unusable, {} degenerate resamples, {:.2?}",
            match self.backend {
                Backend::Exact => "exact dual",
                Backend::Float => "float primal",
            },
            self.closed,
            self.starts - self.unusable,
            self.unusable,
            self.degenerate,
            self.elapsed
        )?;
        write!(f, "consistent: {}", if self.consistent() { "yes" } else { "NO" })
    }
}

/// One exact dual chain started at a random parameter, drawn from stream
/// `trial` of `seed`; degenerate starts are resampled.
pub fn sample_dual_chain(
    config: &LineConfiguration<Rational>,
    seed: u64,
    trial: u64,
) -> Result<(Option<PolygonChain<Rational>>, usize), GeometryError> {
    let mut s = Sampler::for_trial(seed, trial);
    for resamples in 0..=MAX_RESAMPLES {
        match dual_chain(config, &s.param()) {
            Ok(chain) => return Ok((Some(chain), resamples)),
            Err(GeometryError::DegenerateStart(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((None, MAX_RESAMPLES))
}

/// One float primal chain from a random rational point of the first line.
pub fn sample_float_chain(
    config: &LineConfiguration<Real>,
    exact: &LineConfiguration<Rational>,
    seed: u64,
    trial: u64,
) -> Result<(Option<PolygonChain<Real>>, usize), GeometryError> {
    let mut s = Sampler::for_trial(seed, trial);
    for resamples in 0..=MAX_RESAMPLES {
        let start = s.point_on_line(&exact.lines()[0]).convert(Real::from_rational)?;
        match primal_chain(config, &start, Branch::First) {
            Ok(chain) => return Ok((Some(chain), resamples)),
            Err(GeometryError::DegenerateStart(_) | GeometryError::FieldInsufficient) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((None, MAX_RESAMPLES))
}

pub fn porism_report(
    config: &LineConfiguration<Rational>,
    starts: usize,
    seed: u64,
    backend: Backend,
) -> Result<PorismReport, GeometryError> {
    let clock = Instant::now();
    let holds = porism_holds(config)?;
    let runs: Vec<(Option<bool>, usize)> = match backend {
        Backend::Exact => (0..starts as u64)
            .into_par_iter()
            .map(|k| sample_dual_chain(config, seed, k).map(|(c, d)| (c.map(|c| c.closed), d)))
            .collect::<Result<_, _>>()?,
        Backend::Float => {
            let real = config.convert(Real::from_rational)?;
            (0..starts as u64)
                .into_par_iter()
                .map(|k| sample_float_chain(&real, config, seed, k).map(|(c, d)| (c.map(|c| c.closed), d)))
                .collect::<Result<_, _>>()?
        }
    };
    Ok(PorismReport {
        lines: config.len(),
        holds,
        backend,
        starts,
        closed: runs.iter().filter(|r| r.0 == Some(true)).count(),
        unusable: runs.iter().filter(|r| r.0.is_none()).count(),
        degenerate: runs.iter().map(|r| r.1).sum(),
        elapsed: clock.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use poncelet_core::porism::generate_closing;
    use poncelet_core::projective::ProjLine;

    #[test]
    fn generated_configuration_is_consistent_on_both_backends() {
        let config = generate_closing(3, 5).unwrap();
        for backend in [Backend::Exact, Backend::Float] {
            let r = porism_report(&config, 8, 2, backend).unwrap();
            assert!(r.holds && r.consistent(), "{r}");
            assert!(r.closed > 0);
        }
    }

    #[test]
    fn random_configuration_does_not_close() {
        let config = LineConfiguration::new(vec![
            ProjLine::from_ints(1, 2, 7),
            ProjLine::from_ints(3, -1, 2),
            ProjLine::from_ints(2, 5, -3),
        ]);
        let r = porism_report(&config, 8, 1, Backend::Exact).unwrap();
        assert!(!r.holds && r.consistent() && r.closed == 0, "{r}");
    }

    #[test]
    fn backend_names() {
        assert_eq!("float".parse::<Backend>(), Ok(Backend::Float));
        assert!("fast".parse::<Backend>().is_err());
    }
}
