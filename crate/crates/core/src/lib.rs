//! Equivalence of orientations of vertex-multiplications under cycle-reversal
//! families, with explicit replay-verifiable reversal scripts.
//!
//! A *vertex-multiplication* `G(p1,...,pn)` blows every vertex `i` of a
//! connected parent graph `G` up into an independent set of `p_i` copies,
//! joined completely across parent edges. Two orientations of the same
//! multiplication are compared either by exact score list or by per-vertex
//! score parity (both up to an automorphism), and when the relevant condition
//! holds a script of cycle reversals transforming one into the other is
//! synthesised and verified by replay.

#![forbid(unsafe_code)]

pub mod difference;
pub mod graph_core;
pub mod io;
pub mod oracle;
pub mod orientation;
pub mod planner;
pub mod refine;
pub mod tourney;

pub use graph_core::{Automorphism, CycleLengthSets, Classification, MultGraph, ParentGraph, ScoreMode, VertexId};
pub use orientation::{Arc, FamilyKind, FamilySpec, OrientedCycle, Orientation, ScoreList};
pub use refine::{FamilyTag, Script, Step};

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplicity list has length {got}, parent graph has {want} vertices")]
    MultiplicityLength { want: usize, got: usize },
    #[error("multiplicity of parent vertex {vertex} must be positive")]
    NonPositiveMultiplicity { vertex: usize },
    #[error("parent graph is disconnected")]
    DisconnectedParent,
    #[error("edge {0}.{1} is a loop or out of range 1..={2}")]
    BadParentEdge(usize, usize, usize),
    #[error("arc {0} -> {1} is not present in the orientation")]
    ArcNotPresent(VertexId, VertexId),
    #[error("orientation has {got} arcs but the multiplication has {want} edges")]
    ArcCount { want: usize, got: usize },
    #[error("vertices {0} and {1} are not adjacent in the multiplication")]
    NotAdjacent(VertexId, VertexId),
    #[error("vertex {0} does not exist in the multiplication")]
    NoSuchVertex(VertexId),
    #[error("map is not an automorphism of the multiplication")]
    NotAutomorphism,
    #[error("difference digraph is not balanced at {0} (outdegree {1}, indegree {2})")]
    NotBalanced(VertexId, usize, usize),
    #[error("difference digraph has odd underlying degree at {0}")]
    OddDegree(VertexId),
    #[error("vertices at positions {0} and {1} are not in the same partite set")]
    NotSamePartite(usize, usize),
    #[error("chord endpoints at positions {0} and {1} are not adjacent")]
    ChordNotAdjacent(usize, usize),
    #[error("underlying partite graph of the segment is not a tree")]
    SegmentNotTree,
    #[error("cycle of length {0} cannot be refined into the requested family")]
    FamilyInfeasible(usize),
    #[error("base family kinds do not match the cycle being refined")]
    BaseFamilyMismatch,
    #[error("no auxiliary vertex outside the partite sets of the cycle")]
    NoAuxiliaryVertex,
    #[error("reversal search exhausted at depth cap {0}")]
    SearchExhausted(usize),
    #[error("need at least {0} partite sets, instance has {1}")]
    TooFewPartiteSets(usize, usize),
    #[error("edge count {0} exceeds the enumeration bound {1}")]
    EnumerationBound(usize, usize),
    #[error("orientations do not have the same score list")]
    ScoreListMismatch,
    #[error("script is not replay-valid: {0}")]
    InvalidScript(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
