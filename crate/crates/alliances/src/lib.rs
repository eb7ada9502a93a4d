//! Solvers and instance generators for maximum globally minimal defensive
//! alliances in undirected graphs.
//!
//! A defensive alliance is a non-empty vertex set `S` in which every member
//! `v` satisfies `d_S(v) + 1 >= d_{S^c}(v)`; it is globally minimal if no
//! non-empty proper subset is itself an alliance. The crate provides:
//!
//! * [`alliance`] — the definitional predicates (protection status,
//!   alliance, local/global minimality, and a marginality certificate),
//! * [`exact`] — exponential-time exact oracles for small instances,
//! * [`tree`] — an `O(n log n)` dynamic program for trees,
//! * [`nd`] — an FPT solver driven by neighbourhood-diversity type classes,
//! * [`reduce`] — hardness-gadget constructions with witness lifting,
//! * [`gen`] — seeded instance generators,
//! * [`report`] — JSON result records used by the CLI.

pub mod alliance;
pub mod diversity;
pub mod exact;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod nd;
pub mod reduce;
pub mod report;
pub mod tree;
pub mod weighted;

pub use graph::{Graph, VertexSet};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),
    #[error("vertex {v} out of range for graph with {n} vertices")]
    InvalidVertex { v: usize, n: usize },
    #[error("{what} exceeds capacity guard: {actual} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("inconsistent solution: {0}")]
    Inconsistent(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Capacity guards for the exponential-time code paths.
///
/// Guards are explicit errors, never silent truncation. The CLI reads the
/// `ALLIANCE_CAPACITY` environment variable and, when set, uses its value
/// for every guard below.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum `|S|` for subset enumeration inside minimality checks.
    pub subset_members: usize,
    /// Maximum live vertex count for whole-graph brute-force search.
    pub brute_vertices: usize,
    /// Maximum number of type classes for the neighbourhood-diversity solver.
    pub nd_classes: usize,
    /// Maximum edge count for orientation enumeration.
    pub mmo_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subset_members: 24,
            brute_vertices: 20,
            nd_classes: 10,
            mmo_edges: 24,
        }
    }
}

impl Limits {
    /// Default limits, with every guard overridden by `ALLIANCE_CAPACITY`
    /// when that variable holds an integer.
    pub fn from_env() -> Self {
        match std::env::var("ALLIANCE_CAPACITY")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
        {
            Some(cap) => Limits {
                subset_members: cap,
                brute_vertices: cap,
                nd_classes: cap,
                mmo_edges: cap,
            },
            None => Limits::default(),
        }
    }
}
