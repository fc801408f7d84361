use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A violated pseudocircle-arrangement invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("malformed half-edge links: {0}")]
    Links(String),
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    Degree { vertex: usize, degree: usize },
    #[error("circles do not alternate around vertex {vertex}")]
    NotAlternating { vertex: usize },
    #[error("circles {a} and {b} cross {count} times, expected 2")]
    PairCrossing { a: usize, b: usize, count: usize },
    #[error("the two crossings of circles {a} and {b} do not enter alternately")]
    CrossingOrientation { a: usize, b: usize },
    #[error("half-edges of circle {circle} do not form one directed cycle")]
    CircleCycle { circle: usize },
    #[error("Euler relation fails: V={v}, E={e}, F={f}")]
    Euler { v: usize, e: usize, f: usize },
    #[error("marked unbounded face is invalid: {0}")]
    UnboundedFace(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("packet {packet} is not monotone")]
    NotMonotone { packet: String },
    #[error("triple {triple} is not flippable: packet {packet} would break")]
    NotFlippable { triple: String, packet: String },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("lines {triple} are concurrent")]
    Degenerate { triple: String },
    #[error("signotope is not shellable")]
    NotShellable,
    #[error("slope vectors differ")]
    SlopeMismatch,
    #[error("invalid slopes: {0}")]
    InvalidSlopes(String),
    #[error("invalid arrangement: {0}")]
    Arrangement(#[from] ArrangementError),
    #[error("not a flippable triangle: {0}")]
    NotATriangle(String),
    #[error("arrangement is not cylindrical")]
    NotCylindrical,
    #[error("lens precondition violated: {0}")]
    Lens(String),
    #[error("state is not in the graph")]
    NotInGraph,
    #[error("graph has {vertices} vertices, above the cap of {cap}; use sampled eccentricities instead")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
