//! Exact shelling counts for graphs.
//!
//! A shelling of a connected graph is an ordering of its edges in which every
//! prefix spans a connected subgraph. This crate counts shellings exactly with
//! a subset dynamic program, closed forms for complete and complete bipartite
//! graphs, and the hook-length formula for trees, and checks the binomial and
//! Gamma identities behind those formulas in exact rational arithmetic.

pub mod bigmath;
pub mod bounds;
pub mod closed_forms;
pub mod commands;
pub mod error;
pub mod graph;
pub mod identities;
pub mod oracle;
pub mod report;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
