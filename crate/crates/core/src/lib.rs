//! Metric dimension and simultaneous metric dimension of graph families on a
//! common labeled vertex set.
//!
//! A vertex set `S` is a simultaneous metric generator of a family when it
//! resolves every pair of vertices in every member. The exact solver reduces
//! this to a minimum hitting set over the pooled resolver sets; trees get the
//! closed-form treatment in [`trees`].

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod resolution;
pub mod solver;
pub mod theorems;
pub mod trees;

pub use bitset::VertexSet;
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{DistanceMatrix, Graph, GraphFamily, VertexUniverse};
pub use io::{parse_family, parse_hitting_set, serialize_family, serialize_hitting_set};
pub use solver::{
    all_minimum_bases, metric_dimension, metric_dimension_oracle, sandwich_bounds, simultaneous_metric_dimension,
    BasisResult, SandwichReport,
};
pub use theorems::{TheoremReport, Verdict};
