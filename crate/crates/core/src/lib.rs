//! Digraph coloring toolkit.
//!
//! Everything here works with loopless digraphs on vertices `0..n`. The
//! central quantity is the maximum average degree `max_avg_degree(D)`: the
//! largest arithmetic mean of out- and in-degree over all vertices, always a
//! half-integer. A coloring is *m-degenerate-valid* when every color class
//! induces a weakly m-degenerate subdigraph (every nonempty induced subgraph
//! has a vertex with out-degree < m or in-degree < m); for m = 1 the classes
//! are exactly the acyclic ones.
//!
//! The crate provides:
//!
//! - exact half-integer arithmetic ([`HalfInt`]) so no degree bound ever
//!   touches floating point,
//! - the digraph core ([`Digraph`], degree statistics, induced subgraphs,
//!   weak components),
//! - peeling and verification of weak m-degeneracy ([`degeneracy`]),
//! - detection of the four 4-vertex obstruction patterns ([`patterns`]),
//! - local-search partitions that split a digraph into classes with
//!   prescribed max-average-degree ceilings ([`decomposition`]),
//! - coloring pipelines: greedy, palette-bounded, and the two
//!   partition-then-color constructions with their closed-form bounds
//!   ([`coloring`]),
//! - small exact oracles for cross-checking ([`oracle`]),
//! - seeded, reproducible graph generators ([`generators`]).

pub mod coloring;
pub mod decomposition;
pub mod degeneracy;
pub mod error;
pub mod generators;
pub mod graph;
pub mod halfint;
pub mod oracle;
pub mod patterns;

pub use coloring::{
    bounded_coloring, four_fifths_bound, fracdelta_coloring, greedy_bound, greedy_coloring,
    improved_acyclic_coloring, FracDeltaPlan, ImprovedPlan,
};
pub use decomposition::{
    f_objective, find_brooks_cycle, lovasz_partition, modlov_partition,
    modlov_partition_with_moves, Partition, PartitionTargets, SlackKind,
};
pub use degeneracy::{
    is_acyclic, is_weakly_m_degenerate, peel, verify_coloring, Coloring, PeelResult, Side,
    Verdict,
};
pub use error::Error;
pub use generators::{
    directed_cycle, random_functional, random_oriented, random_regular_digraph,
    rotational_tournament, SplitMix64,
};
pub use graph::{DegreeStats, Digraph, InducedSubgraph};
pub use halfint::HalfInt;
pub use oracle::{
    exact_chi_m, exact_chi_m_with_cap, find_km_coloring, is_km_critical,
    weak_degeneracy_bruteforce, ExactResult, BRUTEFORCE_SIZE_CAP, EXACT_SIZE_CAP,
};
pub use patterns::{
    avoids_f, avoids_g, contains_induced, first_pattern_violation, Pattern, PatternId,
};
