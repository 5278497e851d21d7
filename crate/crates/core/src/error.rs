use thiserror::Error;

/// Failures of the arithmetic substrate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("quadratic extensions Q(sqrt({left})) and Q(sqrt({right})) cannot be mixed")]
    MixedExtension { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Failures of geometric constructions. Every degenerate configuration that
/// a caller may resample around has its own variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,
    #[error("points coincide, the joining line is undefined")]
    CoincidentPoints,
    #[error("lines coincide, the meeting point is undefined")]
    CoincidentLines,
    #[error("cross-ratio needs four pairwise distinct parameters")]
    DegenerateTuple,
    #[error("matrix is singular")]
    SingularMap,
    #[error("map is the identity class")]
    IdentityMap,
    #[error("point is not on the conic")]
    NotOnConic,
    #[error("point lies on the conic")]
    PointOnConic,
    #[error("parameters coincide")]
    EqualParameters,
    #[error("parameter is not a root of the line's conic quadratic")]
    NotIncident,
    #[error("center lies on the conic")]
    CenterOnConic,
    #[error("map is not an involution")]
    NotInvolution,
    #[error("involutions share a fixed point")]
    SharedFixedPoint,
    #[error("hexagon is degenerate")]
    DegenerateHexagon,
    #[error("construction degenerates: {0}")]
    DegenerateConstruction(&'static str),
    #[error("tangent polygon is degenerate")]
    DegeneratePolygon,
    #[error("invalid line configuration: {0}")]
    InvalidConfiguration(String),
    #[error("degenerate start: {0}")]
    DegenerateStart(&'static str),
    #[error("the scalar backend cannot express the tangents from the start point")]
    FieldInsufficient,
    #[error("chain is not closed")]
    NotClosed,
    #[error("no valid instance found after {0} attempts")]
    GenerationExhausted(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
