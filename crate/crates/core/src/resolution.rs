//! Resolving predicate, per-pair resolver sets and the pooled constraint
//! system handed to the hitting-set solver.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph, GraphFamily};

/// `v` resolves `{x, y}` when it sees them at different distances.
#[inline]
pub fn resolves(v: usize, x: usize, y: usize, d: &DistanceMatrix) -> bool {
    d.get(v, x) != d.get(v, y)
}

/// Resolver set `{v : d(v,x) != d(v,y)}` for every unordered pair `x < y`.
#[derive(Debug, Clone)]
pub struct PairResolverTable {
    n: usize,
    sets: Vec<VertexSet>,
}

fn pair_slot(n: usize, x: usize, y: usize) -> usize {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    x * n - x * (x + 1) / 2 + (y - x - 1)
}

impl PairResolverTable {
    pub fn new(d: &DistanceMatrix) -> Self {
        let n = d.n();
        let mut sets = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for x in 0..n {
            for y in x + 1..n {
                let mut s = VertexSet::empty(n);
                for v in 0..n {
                    if resolves(v, x, y, d) {
                        s.insert(v);
                    }
                }
                sets.push(s);
            }
        }
        PairResolverTable { n, sets }
    }

    pub fn get(&self, x: usize, y: usize) -> &VertexSet {
        assert_ne!(x, y, "resolver sets are defined for distinct vertices");
        &self.sets[pair_slot(self.n, x, y)]
    }

    /// `((x, y), R(x, y))` with `x < y`, in row-major pair order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &VertexSet)> {
        let n = self.n;
        (0..n)
            .flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
            .zip(self.sets.iter())
    }
}

/// True iff every pair of distinct vertices is resolved by some member of `s`.
pub fn generates(s: &VertexSet, d: &DistanceMatrix) -> bool {
    let n = d.n();
    (0..n).all(|x| (x + 1..n).all(|y| s.iter().any(|v| resolves(v, x, y, d))))
}

pub fn is_metric_generator(s: &VertexSet, g: &Graph) -> Result<bool> {
    Ok(generates(s, &g.distances()?))
}

pub fn is_simultaneous_generator(s: &VertexSet, fam: &GraphFamily) -> Result<bool> {
    for g in fam.members() {
        if !is_metric_generator(s, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where a constraint came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Resolver set of pair `(x, y)` in member `graph`.
    Pair { graph: String, x: usize, y: usize },
    /// Subset number `index` of a hitting-set instance.
    Set { index: usize },
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub set: VertexSet,
    pub sources: Vec<Source>,
}

/// Deduplicated, dominance-reduced collection of sets that a generator must
/// hit. Constraints are ordered by `(size, lexicographic)`.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    n: usize,
    constraints: Vec<Constraint>,
    pooled: usize,
    distinct: usize,
}

impl ConstraintSystem {
    /// Pools `(set, source)` entries, merges duplicates and drops every
    /// constraint that is a proper superset of another one.
    pub fn from_sets<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (VertexSet, Source)>,
    {
        let (merged, pooled) = merge(entries);
        let distinct = merged.len();
        let mut kept: Vec<Constraint> = Vec::with_capacity(merged.len());
        for c in merged {
            if !kept.iter().any(|k| k.set.is_subset(&c.set)) {
                kept.push(c);
            }
        }
        ConstraintSystem {
            n,
            constraints: kept,
            pooled,
            distinct,
        }
    }

    /// Same pooling without the dominance step. Its hitting sets are the
    /// same as those of the reduced system.
    pub fn unreduced<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (VertexSet, Source)>,
    {
        let (merged, pooled) = merge(entries);
        let distinct = merged.len();
        ConstraintSystem {
            n,
            constraints: merged,
            pooled,
            distinct,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn sets(&self) -> impl Iterator<Item = &VertexSet> {
        self.constraints.iter().map(|c| &c.set)
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Entries fed in before merging.
    pub fn pooled_count(&self) -> usize {
        self.pooled
    }

    /// Distinct sets before dominance reduction.
    pub fn distinct_count(&self) -> usize {
        self.distinct
    }

    pub fn is_hit_by(&self, s: &VertexSet) -> bool {
        self.constraints.iter().all(|c| c.set.intersects(s))
    }
}

fn merge<I>(entries: I) -> (Vec<Constraint>, usize)
where
    I: IntoIterator<Item = (VertexSet, Source)>,
{
    let mut slot: HashMap<VertexSet, usize> = HashMap::new();
    let mut merged: Vec<Constraint> = Vec::new();
    let mut pooled = 0;
    for (set, source) in entries {
        pooled += 1;
        match slot.get(&set) {
            Some(&i) => merged[i].sources.push(source),
            None => {
                slot.insert(set.clone(), merged.len());
                merged.push(Constraint {
                    set,
                    sources: vec![source],
                });
            }
        }
    }
    merged.sort_by(|a, b| a.set.len().cmp(&b.set.len()).then_with(|| a.set.lex_cmp(&b.set)));
    (merged, pooled)
}

fn family_entries(fam: &GraphFamily) -> Result<Vec<(VertexSet, Source)>> {
    let mut entries = Vec::new();
    for g in fam.members() {
        let table = PairResolverTable::new(&g.distances()?);
        for ((x, y), set) in table.iter() {
            entries.push((
                set.clone(),
                Source::Pair {
                    graph: g.name().to_string(),
                    x,
                    y,
                },
            ));
        }
    }
    Ok(entries)
}

/// Constraint system whose hitting sets are exactly the simultaneous metric
/// generators of `fam`.
pub fn build_constraints(fam: &GraphFamily) -> Result<ConstraintSystem> {
    Ok(ConstraintSystem::from_sets(fam.n(), family_entries(fam)?))
}

pub fn build_constraints_unreduced(fam: &GraphFamily) -> Result<ConstraintSystem> {
    Ok(ConstraintSystem::unreduced(fam.n(), family_entries(fam)?))
}

/// Pairs with equal open or equal closed neighborhoods, `x < y`.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        let (open_x, closed_x) = g.neighborhoods(x);
        for y in x + 1..n {
            let (open_y, closed_y) = g.neighborhoods(y);
            if open_x == open_y || closed_x == closed_y {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn are_twins(g: &Graph, x: usize, y: usize) -> bool {
    let (open_x, closed_x) = g.neighborhoods(x);
    let (open_y, closed_y) = g.neighborhoods(y);
    open_x == open_y || closed_x == closed_y
}

/// Pairs `x < y` realizing the diameter.
pub fn antipodal_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let d = g.distances()?;
    let n = g.n();
    let diam = d.diameter();
    Ok((0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| d.get(x, y) == diam)
        .collect())
}

/// Every vertex has exactly one vertex at diameter distance.
pub fn is_two_antipodal(d: &DistanceMatrix) -> bool {
    let diam = d.diameter();
    (0..d.n()).all(|x| d.row(x).iter().filter(|&&v| v == diam).count() == 1)
}
