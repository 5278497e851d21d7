use crate::algebra::{Field, Rational};
use crate::conic::{is_tangent, on_conic, polar, pole};
use crate::error::GeometryError;
use crate::involution::{closing_center_locus, InvolutionChain};
use crate::projective::{meet, ProjLine, ProjPoint};
use crate::sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    Secant,
    Tangent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidityIssue {
    TooFewLines(usize),
    TangentLine(usize),
    DuplicateLines(usize, usize),
    /// Two lines meet on the conic, so the 2n intersection points are not distinct.
    SharedConicPoint(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub kinds: Vec<LineKind>,
    pub issues: Vec<ValidityIssue>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

fn validate<F: Field>(lines: &[ProjLine<F>]) -> ValidityReport {
    let mut issues = Vec::new();
    if lines.len() < 2 {
        issues.push(ValidityIssue::TooFewLines(lines.len()));
    }
    let kinds: Vec<_> = lines
        .iter()
        .map(|l| if is_tangent(l) { LineKind::Tangent } else { LineKind::Secant })
        .collect();
    for (i, k) in kinds.iter().enumerate() {
        if *k == LineKind::Tangent {
            issues.push(ValidityIssue::TangentLine(i));
        }
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            match meet(&lines[i], &lines[j]) {
                Err(_) => issues.push(ValidityIssue::DuplicateLines(i, j)),
                Ok(p) if on_conic(&p) => issues.push(ValidityIssue::SharedConicPoint(i, j)),
                Ok(_) => {}
            }
        }
    }
    ValidityReport { kinds, issues }
}

/// An ordered list of lines with their poles and validity report.
#[derive(Clone, Debug, PartialEq)]
pub struct LineConfiguration<F> {
    lines: Vec<ProjLine<F>>,
    poles: Vec<ProjPoint<F>>,
    report: ValidityReport,
}

impl<F: Field> LineConfiguration<F> {
    pub fn new(lines: Vec<ProjLine<F>>) -> Self {
        let poles = lines.iter().map(pole).collect();
        let report = validate(&lines);
        Self { lines, poles, report }
    }

    pub fn from_poles(poles: &[ProjPoint<F>]) -> Self {
        Self::new(poles.iter().map(polar).collect())
    }

    pub fn lines(&self) -> &[ProjLine<F>] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn poles(&self) -> &[ProjPoint<F>] {
        &self.poles
    }

    pub fn validate(&self) -> &ValidityReport {
        &self.report
    }

    pub fn is_valid(&self) -> bool {
        self.report.is_valid()
    }

    pub(crate) fn require_valid(&self) -> Result<(), GeometryError> {
        match self.report.issues.first() {
            None => Ok(()),
            Some(issue) => Err(GeometryError::InvalidConfiguration(format!("{issue:?}"))),
        }
    }

    /// The involutions at the poles, `u_1 .. u_n`.
    pub fn involutions(&self) -> Result<InvolutionChain<F>, GeometryError> {
        self.require_valid()?;
        InvolutionChain::from_centers(&self.poles)
    }

    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<LineConfiguration<G>, GeometryError> {
        let lines = self.lines.iter().map(|l| l.convert(&f)).collect::<Result<_, _>>()?;
        Ok(LineConfiguration::new(lines))
    }
}

pub const GENERATION_ATTEMPTS: u64 = 64;

/// A random valid configuration of `n` lines on which the porism holds.
///
/// The first `n - 1` poles are random; the last is a random point of the
/// closing locus of their involutions. Attempt `k` draws from trial stream
/// `k` of `seed`.
pub fn generate_closing(n: usize, seed: u64) -> Result<LineConfiguration<Rational>, GeometryError> {
    assert!(n >= 2, "a configuration needs at least two lines");
    for attempt in 0..GENERATION_ATTEMPTS {
        let mut s = Sampler::for_trial(seed, attempt);
        let mut poles: Vec<_> = (0..n - 1).map(|_| s.point_off_conic()).collect();
        let Ok(chain) = InvolutionChain::from_centers(&poles) else { continue };
        let Ok(locus) = closing_center_locus(&chain) else { continue };
        let last = s.points_on_line_off_conic(&locus, 1).remove(0);
        poles.push(last);
        let config = LineConfiguration::from_poles(&poles);
        if config.is_valid() && super::porism_holds(&config) == Ok(true) {
            return Ok(config);
        }
    }
    Err(GeometryError::GenerationExhausted(GENERATION_ATTEMPTS as usize))
}
