//! Counting independent sets in sparse and triangle-free graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It carries the graph model, an
//! exact counter for `i(G)`, the iterated sparse-sampling independent set
//! algorithm with its Turán fallback, the random-graph ensembles and
//! Monte-Carlo checks used to validate the sampling lemma, and the closed-form
//! bound evaluator.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod aks;
pub mod bounds;
pub mod count;
pub mod ensemble;
pub mod generate;
pub mod graph;
pub mod rng;

pub use aks::{run_aks, AksError, AksOutcome, AksParams, AksPath};
pub use bounds::{evaluate_bounds, verify_sandwich, BoundsReport, SandwichVerdict};
pub use count::{
    brute_force_count, count_independent_sets, independence_number, size_profile, BigCount, Budget, CountError,
    SizeProfile,
};
pub use ensemble::{check_lemma_bounds, distinct_sets_experiment, mc_lemma_stats, EnsembleStats, LemmaReport};
pub use graph::{AverageDegree, Graph, GraphError, Induced, VertexSet};
