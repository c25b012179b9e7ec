//! Error type shared by the whole crate.

use crate::halfint::HalfInt;
use crate::patterns::PatternId;

/// Everything that can go wrong in the library.
///
/// Construction problems and precondition violations are ordinary values of
/// this type; algorithms never panic on bad input. Internal invariant
/// breakage (states the theory rules out) is asserted instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("vertex {v} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("m must be at least 1")]
    ZeroM,

    #[error("palette size k = {k} too small, need k >= 2")]
    PaletteTooSmall { k: usize },

    #[error("assignment covers {actual} vertices, digraph has {expected}")]
    AssignmentLength { expected: usize, actual: usize },

    #[error("partition has {classes} classes but {targets} targets were given")]
    ClassCountMismatch { classes: usize, targets: usize },

    #[error("class index {class} out of range, partition has {num_classes} classes")]
    ClassOutOfRange { class: usize, num_classes: usize },

    #[error("class {class} does not have target 1")]
    NotUnitTarget { class: usize },

    #[error("target list must be nonempty")]
    EmptyTargets,

    #[error("target {value} of class {class} is negative")]
    NegativeTarget { class: usize, value: HalfInt },

    #[error("digraph is not oriented: 2-cycle between {u} and {v}")]
    NotOriented { u: usize, v: usize },

    #[error("max average degree {max_avg} exceeds the allowed {limit}")]
    DegreeAboveLimit { max_avg: HalfInt, limit: HalfInt },

    #[error("max average degree {max_avg} is below the required {threshold}")]
    DegreeBelowThreshold { max_avg: HalfInt, threshold: HalfInt },

    #[error("targets infeasible: max average degree {max_avg} exceeds slack-plus-target capacity {capacity}")]
    TargetsInfeasible { max_avg: HalfInt, capacity: HalfInt },

    #[error("digraph contains induced pattern {id} on vertices {witness:?}")]
    PatternFound { id: PatternId, witness: [usize; 4] },

    #[error("iteration cap of {cap} moves exceeded")]
    IterationCapExceeded { cap: usize },

    #[error("instance has {n} vertices, exact search capped at {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("internal coloring search exhausted; this indicates a bug")]
    SearchExhausted,

    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("order {n} must be odd")]
    EvenOrder { n: usize },

    #[error("gave up after {attempts} sampling attempts")]
    RetriesExhausted { attempts: usize },
}
