//! Exact projective geometry for Fregier involutions on a smooth conic and the
//! Poncelet-type porism for polygons inscribed in a configuration of lines and
//! circumscribed around the conic.
//!
//! Layers, bottom up:
//!
//! - [`algebra`]: rationals, quadratic extensions, floats, polynomials, matrices.
//! - [`projective`]: points, lines, conic parameters and Mobius maps.
//! - [`conic`]: the canonical conic `x0*x2 = x1^2`, chords, tangents, polarity.
//! - [`involution`]: Fregier involutions, their products, Pascal and Mobius.
//! - [`porism`]: line configurations, polygon chains, the two-line criterion.
//! - [`sample`]: seeded random instances for property checks.

pub mod algebra;
pub mod conic;
pub mod error;
pub mod involution;
pub mod porism;
pub mod projective;
pub mod sample;

pub use error::{AlgebraError, GeometryError};
