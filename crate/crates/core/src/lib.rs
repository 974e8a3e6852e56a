//! Distance-d domination, γ-graphs, realization of prescribed families of
//! minimum dominating sets, and labellings of graphs by `k`-sets.
//!
//! A graph is *labellable* when its vertices can be given distinct `k`-sets so
//! that two vertices are adjacent exactly when their sets share `k - 1`
//! symbols, i.e. when it is an induced subgraph of a Johnson graph. A graph is
//! the γ-graph of some graph exactly when it is labellable.

pub mod bitset;
pub mod canon;
pub mod classify;
pub mod clutter;
pub mod domination;
mod error;
pub mod family;
pub mod fixtures;
pub mod gamma_graph;
pub mod graph;
pub mod graph6;
pub mod labelling;
pub mod realizer;

pub use classify::{
    classify, decide_labellable, enumerate_connected_graphs, is_minimally_unlabellable,
    ClassificationReport, ClassifyOptions, Counts, Decision, Status, Verdict,
};
pub use clutter::{blocker, validate_clutter, Clutter, ClutterDocument};
pub use domination::{
    domination_number, is_distance_d_dominating, min_dominating_sets, DominationOptions,
    DominationResult,
};
pub use error::{Error, Result};
pub use family::Family;
pub use gamma_graph::{build_gamma_graph, GammaGraph};
pub use graph::{DistanceMatrix, Graph};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use labelling::{
    find_labelling, is_valid_labelling, middle_label_candidates, Labelling, SearchBudget,
    SearchOutcome,
};
pub use realizer::{construction_size, hhl_size, realize, verify_realization, RealizedGraph};
