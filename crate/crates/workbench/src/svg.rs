//! SVG 1.1 figures of a scene in one affine chart of the plane.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use poncelet_core::algebra::{Field, Rational};

use crate::scene::SceneDocument;

pub const DEFAULT_SAMPLES: usize = 256;
const SIZE: f64 = 640.0;
const LIMIT: f64 = 100.0;

/// The affine chart `x_k != 0`; the other two coordinates, divided by `x_k`,
/// become the horizontal and vertical axes in index order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Chart {
    #[default]
    X0,
    X1,
    X2,
}

impl FromStr for Chart {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x0" => Ok(Chart::X0),
            "x1" => Ok(Chart::X1),
            "x2" => Ok(Chart::X2),
            other => Err(format!("unknown chart `{other}` (expected x0, x1 or x2)")),
        }
    }
}

impl Chart {
    fn indices(self) -> (usize, usize, usize) {
        match self {
            Chart::X0 => (0, 1, 2),
            Chart::X1 => (1, 0, 2),
            Chart::X2 => (2, 0, 1),
        }
    }

    fn project(self, h: [f64; 3]) -> Option<(f64, f64)> {
        let (w, i, j) = self.indices();
        let scale = h.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if h[w].abs() <= 1e-9 * scale {
            return None;
        }
        let p = (h[i] / h[w], h[j] / h[w]);
        (p.0.is_finite() && p.1.is_finite()).then_some(p)
    }
}

fn floats(c: &[Rational; 3]) -> [f64; 3] {
    [c[0].to_f64(), c[1].to_f64(), c[2].to_f64()]
}

struct View {
    min: (f64, f64),
    span: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> Self {
        let inside: Vec<_> = points.iter().filter(|p| p.0.abs() <= LIMIT && p.1.abs() <= LIMIT).collect();
        let (mut lo, mut hi) = ((-2.0f64, -2.0f64), (2.0f64, 2.0f64));
        if !inside.is_empty() {
            lo = (f64::INFINITY, f64::INFINITY);
            hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for p in inside {
                lo = (lo.0.min(p.0), lo.1.min(p.1));
                hi = (hi.0.max(p.0), hi.1.max(p.1));
            }
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1.0) * 1.3;
        let center = ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0);
        View { min: (center.0 - span / 2.0, center.1 - span / 2.0), span }
    }

    fn contains(&self, p: (f64, f64)) -> bool {
        let m = self.span * 0.05;
        p.0 >= self.min.0 - m && p.0 <= self.min.0 + self.span + m && p.1 >= self.min.1 - m && p.1 <= self.min.1 + self.span + m
    }

    fn px(&self, p: (f64, f64)) -> (f64, f64) {
        let x = (p.0 - self.min.0) / self.span * SIZE;
        let y = SIZE - (p.1 - self.min.1) / self.span * SIZE;
        (x, y)
    }

    /// The part of `l_w + l_i u + l_j v = 0` inside the view square.
    fn clip_line(&self, l: [f64; 3], chart: Chart) -> Option<((f64, f64), (f64, f64))> {
        let (w, i, j) = chart.indices();
        let (a, b, c) = (l[i], l[j], l[w]);
        let (x0, y0) = self.min;
        let (x1, y1) = (x0 + self.span, y0 + self.span);
        let mut hits = Vec::new();
        if b.abs() > 1e-12 {
            for x in [x0, x1] {
                let y = -(a * x + c) / b;
                if (y0..=y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if a.abs() > 1e-12 {
            for y in [y0, y1] {
                let x = -(b * y + c) / a;
                if (x0..=x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
        match (hits.first(), hits.last()) {
            (Some(&p), Some(&q)) if p != q => Some((p, q)),
            _ => None,
        }
    }
}

fn conic_samples(samples: usize) -> Vec<[f64; 3]> {
    // (n : d) = (sin, cos) runs once around the projective line, through inf
    (0..=samples)
        .map(|k| {
            let theta = PI * k as f64 / samples as f64;
            let (n, d) = (theta.sin(), theta.cos());
            [d * d, n * d, n * n]
        })
        .collect()
}

fn points_of_interest(scene: &SceneDocument, chart: Chart) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let lines: Vec<_> = scene.lines.iter().map(|(_, l)| l).collect();
    for (a, l) in lines.iter().enumerate() {
        for m in &lines[a + 1..] {
            if let Ok(p) = poncelet_core::projective::meet(l, m) {
                out.extend(chart.project(floats(p.coords())));
            }
        }
        // where the line meets the conic: roots of l2 t^2 + l1 t + l0
        let [l0, l1, l2] = floats(l.coords());
        let disc = l1 * l1 - 4.0 * l0 * l2;
        if disc >= 0.0 && l2.abs() > 1e-12 {
            for s in [1.0, -1.0] {
                let t = (-l1 + s * disc.sqrt()) / (2.0 * l2);
                out.extend(chart.project([1.0, t, t * t]));
            }
        }
    }
    for (_, p) in &scene.points {
        out.extend(chart.project(floats(p.coords())));
    }
    for c in &scene.chains {
        for v in &c.vertices {
            out.extend(chart.project(floats(v.coords())));
        }
    }
    out.extend([chart.project([1.0, 0.0, 0.0]), chart.project([1.0, 1.0, 1.0]), chart.project([1.0, -1.0, 1.0])].into_iter().flatten());
    out
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" { "0.000".into() } else { s }
}

/// Renders the conic, the scene's lines, points and chain polygons.
/// The output depends only on the arguments.
pub fn render(scene: &SceneDocument, chart: Chart, samples: usize) -> String {
    let samples = samples.max(8);
    let view = View::fit(&points_of_interest(scene, chart));
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    out.push_str(
        "<style>.conic{fill:none;stroke:#1f4e8c;stroke-width:2}.config-line{stroke:#888;stroke-width:1.2}\
         .chain-edge{stroke:#c0392b;stroke-width:1.5}.vertex{fill:#c0392b}.point{fill:#222}</style>\n",
    );

    let mut d = String::new();
    let mut pen_down = false;
    for h in conic_samples(samples) {
        match chart.project(h).filter(|p| view.contains(*p)) {
            Some(p) => {
                let (x, y) = view.px(p);
                let _ = write!(d, "{}{} {} ", if pen_down { "L" } else { "M" }, num(x), num(y));
                pen_down = true;
            }
            None => pen_down = false,
        }
    }
    let _ = writeln!(out, r#"<path class="conic" d="{}"/>"#, d.trim_end());

    for (name, l) in &scene.lines {
        if let Some((p, q)) = view.clip_line(floats(l.coords()), chart) {
            let (a, b) = (view.px(p), view.px(q));
            let _ = writeln!(
                out,
                r#"<line class="config-line" data-name="{name}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1)
            );
        }
    }

    for c in &scene.chains {
        let vs: Vec<_> = c.vertices.iter().map(|v| chart.project(floats(v.coords()))).collect();
        let m = vs.len();
        let edges = if c.closed { m } else { m.saturating_sub(1) };
        for k in 0..edges {
            if let (Some(p), Some(q)) = (vs[k], vs[(k + 1) % m]) {
                let (a, b) = (view.px(p), view.px(q));
                let _ = writeln!(
                    out,
                    r#"<line class="chain-edge" data-chain="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    c.name,
                    num(a.0),
                    num(a.1),
                    num(b.0),
                    num(b.1)
                );
            }
        }
        for p in vs.iter().flatten() {
            let (x, y) = view.px(*p);
            let _ = writeln!(out, r#"<circle class="vertex" cx="{}" cy="{}" r="3"/>"#, num(x), num(y));
        }
    }

    for (name, p) in &scene.points {
        if let Some(q) = chart.project(floats(p.coords())) {
            let (x, y) = view.px(q);
            let _ = writeln!(out, r#"<circle class="point" data-name="{name}" cx="{}" cy="{}" r="3"/>"#, num(x), num(y));
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::ChainTrace;
    use poncelet_core::algebra::rational;
    use poncelet_core::porism::{dual_chain, LineConfiguration};
    use poncelet_core::projective::{ConicParam, ProjPoint};

    fn closing_pair_scene() -> SceneDocument {
        let config = LineConfiguration::from_poles(&[ProjPoint::from_ints(1, 0, -1), ProjPoint::from_ints(0, 1, 0)]);
        let mut scene = SceneDocument::from_configuration(&config);
        let chain = dual_chain(&config, &ConicParam::Finite(rational(3, 1))).unwrap();
        scene.chains.push(ChainTrace::from_chain("c", &chain));
        scene
    }

    #[test]
    fn element_counts() {
        let svg = render(&closing_pair_scene(), Chart::X0, DEFAULT_SAMPLES);
        assert_eq!(svg.matches(r#"<path class="conic""#).count(), 1);
        assert_eq!(svg.matches(r#"class="config-line""#).count(), 2);
        assert_eq!(svg.matches(r#"class="chain-edge""#).count(), 4);
    }

    #[test]
    fn empty_chain_gives_conic_and_lines() {
        let mut scene = closing_pair_scene();
        scene.chains.clear();
        let svg = render(&scene, Chart::X0, 64);
        assert_eq!(svg.matches(r#"class="chain-edge""#).count(), 0);
        assert_eq!(svg.matches(r#"class="config-line""#).count(), 2);
    }

    #[test]
    fn deterministic_in_every_chart() {
        for chart in [Chart::X0, Chart::X1, Chart::X2] {
            let a = render(&closing_pair_scene(), chart, DEFAULT_SAMPLES);
            let b = render(&closing_pair_scene(), chart, DEFAULT_SAMPLES);
            assert_eq!(a, b);
            assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));
        }
    }

    #[test]
    fn chart_names() {
        assert_eq!("x2".parse::<Chart>(), Ok(Chart::X2));
        assert!("y".parse::<Chart>().is_err());
    }
}
