//! Polygons inscribed in a configuration of lines and circumscribed about
//! the canonical conic.
//!
//! A configuration `L_1 .. L_n` has poles `c_1 .. c_n`; let `u_i` be the
//! involution with center `c_i`. Its fixed points are the two points of
//! `L_i` on the conic. Tangent polygons with vertices cycling through
//! `L_1 .. L_n` twice correspond, by polarity, to the orbit
//! `p, u_1 p, u_2 u_1 p, ..., u_{n-1} .. u_1 u_n .. u_1 p` on the conic, and
//! such polygons close for every start exactly when `u_n .. u_1` is an
//! involution.

mod chain;
mod config;
mod twolines;

pub use chain::{
    concurrent_tangent_chain, dual_chain, primal_chain, well_inscribed, Branch, ChainMode, PolygonChain,
};
pub use config::{generate_closing, LineConfiguration, LineKind, ValidityIssue, ValidityReport, GENERATION_ATTEMPTS};
pub use twolines::{two_line_closure, two_line_criterion, TwoLineSystem};

use crate::algebra::Field;
use crate::error::GeometryError;

/// Whether the configuration closes: the product of its pole involutions is
/// an involution.
pub fn porism_holds<F: Field>(config: &LineConfiguration<F>) -> Result<bool, GeometryError> {
    Ok(config.involutions()?.product().is_involution())
}

/// The poles of the configuration lines, in order.
pub fn poles_of<F: Field>(config: &LineConfiguration<F>) -> Result<Vec<crate::projective::ProjPoint<F>>, GeometryError> {
    config.require_valid()?;
    Ok(config.poles().to_vec())
}
