//! Graph-coloring algorithms built around recoloring through independent
//! transversals: exact oracles, list-coloring decisions, transversal search
//! with domination certificates, strong coloring, big-clique decompositions
//! and the recoloring procedures that combine them.
//!
//! The crate is `no_std` and only needs `alloc`. Graphs are dense bitset
//! graphs on at most 64 vertices; everything here is aimed at exhaustive
//! verification on desk-scale instances.

#![no_std]

extern crate alloc;

pub mod canonical;
pub mod choosability;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod recolor;
pub mod set;
pub mod strong;
pub mod theorems;
pub mod transversal;

pub use error::{GraphError, OracleError};
pub use graph::{families, EdgeList, Graph, Subgraph};
pub use oracles::Coloring;
pub use set::{ColorSet, VertexSet, MAX_ORDER};

/// Exact rational used for every threshold comparison.
pub type Rational = num_rational::Ratio<i64>;

/// Smallest integer `>= q`.
pub fn ceil(q: Rational) -> i64 {
    q.ceil().to_integer()
}
