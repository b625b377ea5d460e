//! Exact list coloring reconfiguration.
//!
//! Given a graph whose vertices carry lists of allowed colors and two proper
//! list colorings, the reconfiguration question asks whether one coloring
//! can be turned into the other by recoloring a single vertex at a time
//! while staying proper; the shortest variant asks for the cheapest such
//! transformation under per-vertex weights.
//!
//! This crate answers both questions exactly. Two fixed-parameter
//! kernelizations shrink instances before search: one merges identical
//! sibling subgraphs found through modular decomposition, the other merges
//! interchangeable independent-set vertices outside a vertex cover while
//! summing weights. Every removal is logged so that witness sequences found
//! on the kernel lift back to the original instance. A generator builds
//! hard instances from independent set inputs for cross-validation, and
//! seeded corpus generators cover random, cograph, and split graph
//! families.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! single capability end to end.

// Vertices are dense indices; loops over `0..n` that index per-vertex data
// are the natural shape throughout.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod instance;
pub mod json;
pub mod kernel_mw;
pub mod kernel_vc;
pub mod modular;
pub mod reduction;
pub mod solver;

pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{
    are_adjacent, coloring_difference, is_proper_list_coloring, ColorSet, Coloring, Instance,
    ListAssignment, VertexAssignment,
};
pub use kernel_mw::{kernel_bound, kernel_bound_log2, kernelize_mw, IdMatrix, ReplayLog};
pub use kernel_vc::{kernelize_vc, min_vertex_cover, vc_kernel_bound, MergeLog, VertexCover};
pub use modular::{
    compute_md_tree, is_module, md_to_pmd, modular_width, pseudo_modular_width, substitute,
    NodeKind, SubstitutionTree,
};
pub use reduction::{reduce_is_to_lcr, verify_reduction, IsInstance};
pub use solver::{
    brute_force_reachable, decide, lift_sequence, shortest, shortest_weighted, validate_sequence,
    DecisionStrategy, ReconfigurationSequence, ShortestStrategy, SolveOptions, SolveReport,
    Verdict,
};
