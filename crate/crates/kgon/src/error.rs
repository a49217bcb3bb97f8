//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing or operating on inscribed
/// polygons. All geometry is exact, so none of these are numerical errors;
/// they are contract violations of one kind or another.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("duplicate vertex: positions {first} and {second} are both ({x}, {y})")]
    DuplicateVertex {
        first: usize,
        second: usize,
        x: i64,
        y: i64,
    },

    #[error(
        "not strictly convex: vertices {i}, {j}, {k} have orientation {orientation} \
         (expected strictly positive after counter-clockwise normalization)"
    )]
    NotStrictlyConvex {
        i: usize,
        j: usize,
        k: usize,
        orientation: i128,
    },

    #[error("coordinate ({x}, {y}) at vertex {index} exceeds the limit of |{limit}|")]
    CoordinateOutOfRange {
        index: usize,
        x: i64,
        y: i64,
        limit: i64,
    },

    #[error("indices {indices:?} are not cyclically ordered: no rotation is strictly increasing")]
    NotCyclicallyOrdered { indices: Vec<usize> },

    #[error("index {index} is out of range for a polygon of {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate index {index} in tuple")]
    DuplicateIndex { index: usize },

    #[error("position {position} is out of range for a {k}-gon")]
    PositionOutOfRange { position: usize, k: usize },

    #[error("invalid k = {k}: must be between {min} and {max}")]
    InvalidK { k: usize, min: usize, max: usize },

    #[error("C({n}, {k}) exceeds the enumeration limit of {limit}")]
    TooLarge { n: usize, k: usize, limit: u64 },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("failed to generate a strictly convex {n}-gon within bound {bound} after {attempts} attempts")]
    GenerationFailed { n: usize, bound: i64, attempts: u32 },

    #[error("polygon is not a counterexample: the heuristic already finds the exact optimum")]
    NotACounterexample,

    #[error("exact solvers disagree: {details}")]
    SolverDisagreement { details: String },
}
