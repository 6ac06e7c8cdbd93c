//! Exact-arithmetic analysis of block graphs: singularity and nullity of the
//! adjacency matrix, decided by three independent engines (dense exact
//! elimination, the combinatorial block determinant, and rewrite-driven
//! structural reduction), plus recognizers and generators for the nonsingular
//! families and an exhaustive search harness for small block graphs.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no floating
//! point anywhere in the crate.

pub mod blocks;
pub mod engines;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lab;
pub mod linalg;
pub mod ratio;
pub mod report;

pub use graph::{build, induced_delete, GraphBuildSpec, GraphError, LoopWeightedGraph, Vertex, VertexSet};
pub use linalg::{adjacency_matrix, nullity, RationalMatrix};
