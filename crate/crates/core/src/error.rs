use thiserror::Error;

/// Errors raised by constructors, evaluators and the scene layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero quaternion has no inverse")]
    ZeroInverse,

    #[error("point has nonzero real part {0}; points must be imaginary quaternions")]
    NotImaginary(f64),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("coincident points: {0}")]
    Coincident(String),

    #[error("pair is off the Study quadric (residual {residual:e})")]
    OffStudyQuadric { residual: f64 },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parameter {value} outside [0, 1]")]
    ParameterOutOfRange { value: f64 },

    #[error("expected {expected} parameters, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("expected {expected} control points, got {got}")]
    ControlCount { expected: usize, got: usize },

    #[error("evaluation hit the point at infinity")]
    AtInfinity,

    #[error("{what} not cocircular (residual {residual:e})")]
    NotCocircular { what: String, residual: f64 },

    #[error("{what} not collinear (residual {residual:e})")]
    NotCollinear { what: String, residual: f64 },

    #[error("tangent vectors not orthogonal (residual {residual:e})")]
    NotOrthogonal { residual: f64 },

    #[error("frame violates v3 = v1*v2 (deviation {deviation:e})")]
    FrameHandedness { deviation: f64 },

    #[error("degenerate Miquel configuration: {factor} vanishes")]
    DegenerateMiquel { factor: &'static str },

    #[error("w7 expressions disagree (relative deviation {deviation:e})")]
    WeightMismatch { deviation: f64 },

    #[error("cell {cell:?}: {source}")]
    Cell {
        cell: [usize; 3],
        #[source]
        source: Box<Error>,
    },

    #[error("frame propagation is path dependent at vertex {vertex:?} (deviation {deviation:e})")]
    FramePropagation { vertex: [usize; 3], deviation: f64 },

    #[error("shared edge at cell {cell:?} has a non-real reparametrization factor (imaginary part {residual:e})")]
    EdgeMismatch { cell: [usize; 3], residual: f64 },

    #[error("mesh sample at infinity; apply an inversion or trim the object before meshing")]
    MeshThroughInfinity,

    #[error("scene error: {0}")]
    Scene(String),
}

pub type Result<T> = std::result::Result<T, Error>;
