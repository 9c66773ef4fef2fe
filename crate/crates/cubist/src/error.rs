use thiserror::Error;

#[derive(Debug, Error)]
pub enum CubistError {
    #[error("wall index {index} out of range (system has {walls} walls)")]
    UnknownWall { index: usize, walls: usize },
    #[error("repeated wall in triple")]
    RepeatedWall,
    #[error("{requested} walls exceeds the cap of {cap} (CUBIST_MAX_WALLS overrides, hard limit 64)")]
    TooManyWalls { requested: usize, cap: usize },
    #[error("orientation has {got} walls, system has {want}")]
    WallCountMismatch { got: usize, want: usize },
    #[error("orientation {0} is not consistent with the system order")]
    InconsistentOrientation(String),
    #[error("invalid walled space: {0}")]
    InvalidWalledSpace(String),
    #[error("invalid halfspace system: {0}")]
    InvalidSystem(String),
    #[error("not the skeleton of a cube complex: {0}")]
    BadSkeleton(String),
    #[error("vertex {0} is not in the complex")]
    MissingVertex(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("halfspace set is not consistent: {0}")]
    NotConsistent(String),
    #[error("invalid wall automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("consistent set is not invariant under generator {0}")]
    NotInvariant(usize),
    #[error("dimension {requested} exceeds the signed-permutation cap {cap}")]
    DimensionCap { requested: usize, cap: usize },
    #[error("vector length {got} does not match dimension {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("orbit is empty")]
    EmptyOrbit,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CubistError>;
