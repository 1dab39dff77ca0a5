use alloc::string::String;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::skeleton::{EdgeId, VertexId};

/// Errors from building skeletons and from the morphism algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edge `{edge}` has color {color}, outside 1..={rank}")]
    ColorOutOfRange { edge: String, color: usize, rank: usize },
    #[error("square {index} is malformed: {reason}")]
    MalformedSquare { index: usize, reason: String },
    #[error("edge list is not composable at position {position}")]
    NotComposable { position: usize },
    #[error("path does not start at vertex {expected}")]
    WrongRange { expected: VertexId },
    #[error("source of the left factor ({source_vertex}) differs from the range of the right factor ({range_vertex})")]
    SourceRangeMismatch { source_vertex: VertexId, range_vertex: VertexId },
    #[error("morphisms have different ranges ({left} and {right})")]
    RangeMismatch { left: VertexId, right: VertexId },
    #[error("degree {requested} is not below {available}")]
    DegreeTooLarge { requested: Degree, available: Degree },
    #[error("interval {p}..{q} is not inside [0, {degree}]")]
    BadInterval { p: Degree, q: Degree, degree: Degree },
    #[error("degree has rank {found}, graph has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("no square pairs edges {0} and {1}")]
    MissingSquare(EdgeId, EdgeId),
    #[error("edge id {0} out of range")]
    BadEdgeId(EdgeId),
    #[error("vertex id {0} out of range")]
    BadVertexId(VertexId),
}

/// Errors from the infinite path space.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cycle degree is zero in coordinate {coordinate}")]
    CycleDegreeZero { coordinate: usize },
    #[error("cycle is not closed: range {range}, source {source_vertex}")]
    CycleNotClosed { range: VertexId, source_vertex: VertexId },
    #[error("requested depth {requested} exceeds the available depth {available}")]
    DepthExceeded { requested: Degree, available: Degree },
    #[error("lazy generator produced an inconsistent segment at degree {0}")]
    InconsistentGenerator(Degree),
    #[error("orbit question undecided within the available depth")]
    Undecided,
    #[error("shifts do not agree: not a groupoid element")]
    NotAWitness,
    #[error("invalid generator: {0}")]
    BadGenerator(String),
}

/// Errors from the representation layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReprError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("orbit {index} has multiplicity zero")]
    ZeroMultiplicity { index: usize },
    #[error("orbit bases {first} and {second} lie in the same orbit")]
    OrbitCollision { first: usize, second: usize },
    #[error("cannot decide whether orbit bases {first} and {second} coincide")]
    UndecidedOrbits { first: usize, second: usize },
    #[error("lazy base {index} has depth {depth}, which is too shallow for window {window}")]
    ShallowBase { index: usize, depth: Degree, window: Degree },
    #[error("computation leaves the window: {0}")]
    WindowExceeded(String),
    #[error("representations live on different graphs")]
    GraphMismatch,
    #[error("multiplicities differ: {left} vs {right}")]
    MultiplicityMismatch { left: u32, right: u32 },
    #[error("orbit classes do not match")]
    OrbitMismatch,
    #[error("base unitary is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    BadUnitaryShape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("base matrix is not unitary")]
    NotUnitary,
    #[error("intertwiner not well defined at {point}: decompositions {decompositions:?} disagree")]
    NotWellDefined { point: String, decompositions: Vec<String> },
    #[error("index point fiber {fiber} out of range 1..={multiplicity}")]
    BadFiber { fiber: u32, multiplicity: u32 },
    #[error("undecided: lazy bases exceed their depth")]
    Undecided,
}
