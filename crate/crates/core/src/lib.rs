//! Toolkit for 3-uniform hypergraphs and codegree thresholds for covering
//! problems.
//!
//! The crate builds the extremal hypergraphs for `K4-` and `K5-` covering,
//! checks their codegree and link-graph structure mechanically, and runs an
//! exhaustive search that computes `c2(n, F)` for small `n`:
//! the largest minimum codegree of an `n`-vertex 3-graph in which some vertex
//! lies in no copy of `F`.
//!
//! Module map:
//! - [`graph`] and [`trigraph`]: 2-graphs and 3-graphs with degree, codegree
//!   and link queries.
//! - [`format`]: the shared edge-list text format.
//! - [`blowup`]: vertex blowups and matching insertion.
//! - [`pattern`] and [`cover`]: covering targets and embedding search.
//! - [`koenig`]: bipartite edge colouring with maximum-degree many matchings.
//! - [`constructions`]: base graphs, extremal hypergraphs and claim verifiers.
//! - [`oracle`]: branch-and-bound search for `c2(n, F)` and random spot checks.

pub mod blowup;
pub mod constructions;
pub mod cover;
mod error;
pub mod format;
pub mod graph;
pub mod koenig;
pub mod oracle;
pub mod pattern;
pub mod trigraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::Pattern;
pub use trigraph::{PairDegreeProfile, TriGraph};

/// Vertex index. Vertices of an `n`-vertex graph are `0..n`.
pub type Vertex = usize;

/// `floor(n / 3)`, the covering codegree threshold for `K4-`.
pub fn k4_minus_threshold(n: usize) -> usize {
    n / 3
}

/// `floor((2n - 2) / 3)`, the covering codegree threshold for `K5-`.
pub fn k5_minus_threshold(n: usize) -> usize {
    (2 * n).saturating_sub(2) / 3
}
