use thiserror::Error;

/// Domain errors raised by the library. Each variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty configuration")]
    EmptyConfiguration,
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("column {column} of the first lattice is not contained in the second")]
    NotSublattice { column: usize },
    #[error("cone is not pointed")]
    NotPointed,
    #[error("character is not in the dual cone")]
    NotInDual,
    #[error("intersection of the two cones is not a face of both")]
    NotCommonFace,
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("cone {0} of the fan is not pointed")]
    ConeNotPointed(usize),
    #[error("cone {0} of the fan lists a ray that is not extreme")]
    RayNotExtreme(usize),
    #[error("cones {0} and {1} meet outside a common face")]
    BadIntersection(usize, usize),
    #[error("polytope is not full-dimensional (dimension {dim} in ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("cone {0} is not smooth and full-dimensional")]
    NotSmoothFullDim(usize),
    #[error("expected {expected} polytopes, got {found}")]
    WrongPolytopeCount { expected: usize, found: usize },
    #[error("section polyhedron is unbounded")]
    Unbounded,
    #[error("fan has a torus factor")]
    TorusFactor,
    #[error("exponent {0} lies outside the section polytope")]
    OutsideSectionPolytope(String),
    #[error("normal fan of the polytope is not refined by the fan (maximal cone {cone})")]
    NotRefined { cone: usize },
    #[error("polynomial is not homogeneous of the divisor's class")]
    DegreeMismatch,
    #[error("divisor is not Cartier on maximal cone {0}")]
    NotCartier(usize),
    #[error("degenerate system: Minkowski sum has dimension {dim} < {ambient}")]
    Degenerate { dim: usize, ambient: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
