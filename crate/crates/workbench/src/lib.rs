//! Tooling around `poncelet-core`: seeded property suites, porism reports,
//! a plain-text scene format, scalar input parsing and SVG rendering.

pub mod report;
pub mod scalar;
pub mod scene;
pub mod suites;
pub mod svg;
