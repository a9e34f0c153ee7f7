//! Exact counting of independent sets and k-dominating sets on outerplanar
//! graphs, with exhaustive enumeration of triangulations and trees and
//! harnesses that check the inequality `i(G) > ∂4(G)` and its supporting
//! lemmas.

pub mod cli;
pub mod dp;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod mop;
pub mod oracle;
pub mod profile;
pub mod verify;

pub use dp::{count_fast, count_is_fast, count_kds_fast, count_on_cycle, count_on_tree, Mode};
pub use enumerate::{enumerate_free_trees, enumerate_mops, enumerate_mops_canonical, random_mop, rng_for};
pub use error::{Error, Result};
pub use graph::{Graph, Membership, VertexConstraint, VertexSet};
pub use mop::{DualTree, Mop, MopPartition, Side, SideSel};
pub use oracle::{Count, Oracle};
pub use profile::{DomProfile, IsProfile};
pub use verify::{RunOptions, VerifyReport};
