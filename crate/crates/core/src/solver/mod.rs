//! Exact metric dimension and simultaneous metric dimension.
//!
//! Both reduce to a minimum hitting set over the pooled resolver sets of
//! every member (see [`crate::resolution::build_constraints`]). The
//! exhaustive [`oracle`] answers the same question directly from distance
//! vectors and is kept independent of that reduction.

pub mod hitting;
pub mod oracle;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::resolution::build_constraints;

pub use hitting::{minimum_hitting_set, HittingSolution};
pub use oracle::DEFAULT_ORACLE_CAP;

#[derive(Debug, Clone, Default)]
pub struct SolverStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct BasisResult {
    pub dimension: usize,
    /// Lexicographically least optimal set (by sorted id sequence), except
    /// for results from the tree formula, which follow its own selection rule.
    pub witness: VertexSet,
    /// Pairwise disjoint constraints; its length is a lower bound on
    /// `dimension`.
    pub lower_bound_certificate: Vec<VertexSet>,
    pub stats: SolverStats,
}

fn solve_family(fam: &GraphFamily) -> Result<BasisResult> {
    let start = Instant::now();
    let system = build_constraints(fam)?;
    let sol = minimum_hitting_set(&system);
    Ok(BasisResult {
        dimension: sol.size,
        witness: sol.witness,
        lower_bound_certificate: sol.certificate,
        stats: SolverStats {
            nodes: sol.nodes,
            elapsed: start.elapsed(),
        },
    })
}

pub fn metric_dimension(g: &Graph) -> Result<BasisResult> {
    solve_family(&GraphFamily::singleton(g.clone()))
}

pub fn simultaneous_metric_dimension(fam: &GraphFamily) -> Result<BasisResult> {
    solve_family(fam)
}

/// Exhaustive search over vertex subsets by increasing size. Refuses
/// universes above `cap`.
pub fn metric_dimension_oracle(fam: &GraphFamily, cap: usize) -> Result<BasisResult> {
    let n = fam.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let start = Instant::now();
    let matrices = fam.distances()?;
    let (dimension, witness, checked) = oracle::exhaustive_minimum(n, &matrices);
    Ok(BasisResult {
        dimension,
        witness,
        lower_bound_certificate: Vec::new(),
        stats: SolverStats {
            nodes: checked,
            elapsed: start.elapsed(),
        },
    })
}

pub fn graph_dimension_oracle(g: &Graph, cap: usize) -> Result<BasisResult> {
    metric_dimension_oracle(&GraphFamily::singleton(g.clone()), cap)
}

#[derive(Debug, Clone)]
pub struct AllBases {
    pub bases: Vec<VertexSet>,
    /// More optimal sets existed beyond `limit`.
    pub truncated: bool,
}

/// Every minimum simultaneous generator in lexicographic order, up to `limit`.
pub fn all_minimum_bases(fam: &GraphFamily, limit: usize) -> Result<AllBases> {
    let n = fam.n();
    if n > DEFAULT_ORACLE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    let k = simultaneous_metric_dimension(fam)?.dimension;
    let matrices = fam.distances()?;
    let (bases, truncated) = oracle::enumerate_generators(n, k, &matrices, limit);
    Ok(AllBases { bases, truncated })
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberDimension {
    pub graph: String,
    pub dim: usize,
}

/// `max dim(G_i) <= Sd <= min(|V| - 1, sum dim(G_i))`.
#[derive(Debug, Clone, Serialize)]
pub struct SandwichReport {
    pub members: Vec<MemberDimension>,
    pub lower: usize,
    pub upper: usize,
    pub sd: usize,
    pub lower_tight: bool,
    pub upper_tight: bool,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.lower <= self.sd && self.sd <= self.upper
    }
}

pub fn sandwich_bounds(fam: &GraphFamily) -> Result<SandwichReport> {
    let mut members = Vec::with_capacity(fam.len());
    for g in fam.members() {
        members.push(MemberDimension {
            graph: g.name().to_string(),
            dim: metric_dimension(g)?.dimension,
        });
    }
    let lower = members.iter().map(|m| m.dim).max().unwrap_or(0);
    let sum: usize = members.iter().map(|m| m.dim).sum();
    let upper = fam.n().saturating_sub(1).min(sum);
    let sd = simultaneous_metric_dimension(fam)?.dimension;
    Ok(SandwichReport {
        members,
        lower,
        upper,
        sd,
        lower_tight: sd == lower,
        upper_tight: sd == upper,
    })
}
