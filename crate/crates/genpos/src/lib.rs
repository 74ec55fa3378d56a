//! Exact computation of general position numbers of graphs and of their
//! complementary prisms, together with executable forms of the known
//! characterizations, formulas and bounds and the machinery to verify them
//! against brute-force solver results.
//!
//! A set of vertices is in *general position* when no member lies on a
//! shortest path between two other members. The *complementary prism* of a
//! graph glues the graph and its complement along a perfect matching. This
//! crate computes the optimum exactly (branch and bound over the forbidden
//! triples), checks candidate sets with two independent verifiers, and
//! evaluates the structural rules that pin the prism value for particular
//! graph classes.

#![forbid(unsafe_code)]

pub mod classify;
pub mod dist;
pub mod error;
pub mod families;
pub mod geodesic;
pub mod graph;
pub mod io;
pub mod random;
pub mod set;
pub mod solver;
pub mod theorems;

pub use dist::{metric_summary, DistanceMatrix, MetricSummary};
pub use error::{Error, Result};
pub use graph::{Graph, Neighborhoods, MAX_VERTICES};
pub use set::VertexSet;
pub use solver::{GpResult, InvariantBundle, SolverConfig};
