//! Polynomial-time machinery for trees: leaf/major classification, the
//! closed-form metric dimension, the interior-vertex family bound and edge
//! exchanges.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, VertexUniverse};
use crate::solver::{BasisResult, SolverStats};

/// One leg hanging off an exterior major vertex: the vertex adjacent to the
/// major vertex and the leaf at the far end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Leg {
    pub first: usize,
    pub terminal: usize,
}

#[derive(Debug, Clone)]
pub struct TreeClassification {
    pub leaves: VertexSet,
    /// Degree at least 2.
    pub interior: VertexSet,
    /// Degree at least 3.
    pub major: VertexSet,
    /// Exterior major vertices with their legs, sorted by `first`.
    pub exterior_major: BTreeMap<usize, Vec<Leg>>,
}

impl TreeClassification {
    /// Terminal degree; zero for vertices that are not exterior major.
    pub fn ter(&self, w: usize) -> usize {
        self.exterior_major.get(&w).map_or(0, Vec::len)
    }

    pub fn terminal_vertices(&self, w: usize) -> Vec<usize> {
        self.exterior_major
            .get(&w)
            .map(|legs| legs.iter().map(|l| l.terminal).collect())
            .unwrap_or_default()
    }
}

pub fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree(t.name().to_string()))
    }
}

pub fn classify(t: &Graph) -> Result<TreeClassification> {
    require_tree(t)?;
    let n = t.n();
    let d = t.distances()?;
    let mut leaves = VertexSet::empty(n);
    let mut interior = VertexSet::empty(n);
    let mut major = VertexSet::empty(n);
    for v in 0..n {
        match t.degree(v) {
            0 => {}
            1 => leaves.insert(v),
            deg => {
                interior.insert(v);
                if deg >= 3 {
                    major.insert(v);
                }
            }
        }
    }

    let mut exterior_major: BTreeMap<usize, Vec<Leg>> = BTreeMap::new();
    if !major.is_empty() {
        for u in leaves.iter() {
            let nearest = major.iter().min_by_key(|&w| d.get(u, w)).expect("non-empty");
            let best = d.get(u, nearest);
            assert_eq!(
                major.iter().filter(|&w| d.get(u, w) == best).count(),
                1,
                "a leaf of a tree has a unique nearest major vertex"
            );
            let first = walk_leg(t, u, nearest);
            exterior_major.entry(nearest).or_default().push(Leg { first, terminal: u });
        }
        for legs in exterior_major.values_mut() {
            legs.sort_by_key(|l| l.first);
        }
    }

    Ok(TreeClassification {
        leaves,
        interior,
        major,
        exterior_major,
    })
}

/// Follows the degree-2 chain from leaf `u` to `w`; returns the vertex
/// adjacent to `w` on it.
fn walk_leg(t: &Graph, u: usize, w: usize) -> usize {
    let mut prev = usize::MAX;
    let mut cur = u;
    loop {
        let next = t
            .neighbors(cur)
            .iter()
            .find(|&x| x != prev)
            .expect("leg continues towards its major vertex");
        if next == w {
            return cur;
        }
        debug_assert_eq!(t.degree(next), 2);
        prev = cur;
        cur = next;
    }
}

/// Closed form: 1 for paths, otherwise the sum of `ter(w) - 1` over
/// exterior major vertices. The witness keeps the leaf of every leg except,
/// per exterior major vertex, the leg whose first vertex has the largest id.
pub fn tree_metric_dimension(t: &Graph) -> Result<BasisResult> {
    let c = classify(t)?;
    let n = t.n();
    let mut witness = VertexSet::empty(n);
    let dimension = if n == 1 {
        0
    } else if c.major.is_empty() {
        witness.insert(c.leaves.first().expect("a path has leaves"));
        1
    } else {
        for legs in c.exterior_major.values() {
            for leg in &legs[..legs.len() - 1] {
                witness.insert(leg.terminal);
            }
        }
        c.exterior_major.values().map(|legs| legs.len() - 1).sum()
    };
    debug_assert_eq!(witness.len(), dimension);
    Ok(BasisResult {
        dimension,
        witness,
        lower_bound_certificate: Vec::new(),
        stats: SolverStats::default(),
    })
}

#[derive(Debug, Clone)]
pub struct InteriorBound {
    /// `|V| - |S_I| - 1`.
    pub bound: usize,
    /// Vertices interior in every member.
    pub common_interior: VertexSet,
}

/// Upper bound on the simultaneous dimension of a family of non-path trees
/// from the vertices that are interior in all of them.
pub fn family_interior_bound(fam: &GraphFamily) -> Result<InteriorBound> {
    let n = fam.n();
    let mut common = VertexSet::full(n);
    for t in fam.members() {
        let c = classify(t)?;
        if c.major.is_empty() {
            return Err(Error::IsPath(t.name().to_string()));
        }
        common.intersect_with(&c.interior);
    }
    Ok(InteriorBound {
        bound: n - common.len() - 1,
        common_interior: common,
    })
}

/// `T + add - remove`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeExchange {
    pub add: (usize, usize),
    pub remove: (usize, usize),
}

impl EdgeExchange {
    pub fn new(add: (usize, usize), remove: (usize, usize)) -> Self {
        EdgeExchange { add, remove }
    }
}

/// Vertex sequence of the unique `u`-`v` path in tree `t`.
pub fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for y in t.neighbors(x).iter() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn check_exchange(t: &Graph, ex: &EdgeExchange) -> std::result::Result<(), String> {
    let n = t.n();
    let (u, v) = ex.add;
    let (x, y) = ex.remove;
    if [u, v, x, y].iter().any(|&id| id >= n) {
        return Err("endpoint outside the vertex universe".into());
    }
    if u == v {
        return Err("added edge is a self-loop".into());
    }
    if t.has_edge(u, v) {
        return Err(format!("edge {}-{} is already present", t.label(u), t.label(v)));
    }
    if x == y || !t.has_edge(x, y) {
        return Err(format!("edge {}-{} is not in the tree", t.label(x), t.label(y)));
    }
    let cycle = tree_path(t, u, v);
    let on_cycle = cycle.windows(2).any(|w| (w[0], w[1]) == (x, y) || (w[0], w[1]) == (y, x));
    if !on_cycle {
        return Err(format!(
            "edge {}-{} is not on the cycle closed by {}-{}",
            t.label(x),
            t.label(y),
            t.label(u),
            t.label(v)
        ));
    }
    Ok(())
}

pub fn apply_exchange(t: &Graph, ex: &EdgeExchange) -> Result<Graph> {
    require_tree(t)?;
    check_exchange(t, ex).map_err(Error::InvalidExchange)?;
    let (x, y) = ex.remove;
    let edges = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| (a, b) != (x.min(y), x.max(y)))
        .chain(std::iter::once(ex.add));
    let out = Graph::from_edges(t.name(), t.universe().clone(), edges)?;
    debug_assert!(out.is_tree());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeDelta {
    pub dim_before: usize,
    pub dim_after: usize,
    pub delta: i64,
}

/// Dimensions before and after one exchange; errors if they differ by more
/// than 2.
pub fn exchange_dim_delta(t1: &Graph, ex: &EdgeExchange) -> Result<ExchangeDelta> {
    let t2 = apply_exchange(t1, ex)?;
    let dim_before = tree_metric_dimension(t1)?.dimension;
    let dim_after = tree_metric_dimension(&t2)?.dimension;
    let delta = dim_after as i64 - dim_before as i64;
    if delta.abs() > 2 {
        return Err(Error::BoundViolated(format!(
            "one exchange moved the dimension from {dim_before} to {dim_after}"
        )));
    }
    Ok(ExchangeDelta {
        dim_before,
        dim_after,
        delta,
    })
}

/// Applies `exs` in order. Entry `i` of the result is the tree after `i`
/// exchanges with its dimension; `|dim(T_i) - dim(T_0)| <= 2i` is checked
/// at every prefix.
pub fn exchange_sequence(t1: &Graph, exs: &[EdgeExchange]) -> Result<Vec<(Graph, usize)>> {
    let first = tree_metric_dimension(t1)?.dimension;
    let mut out = vec![(t1.clone(), first)];
    for (i, ex) in exs.iter().enumerate() {
        let step = i + 1;
        let prev = &out[i].0;
        let next = apply_exchange(prev, ex).map_err(|e| Error::InvalidExchangeStep {
            step,
            reason: e.to_string(),
        })?;
        let dim = tree_metric_dimension(&next)?.dimension;
        if (dim as i64 - first as i64).unsigned_abs() as usize > 2 * step {
            return Err(Error::BoundViolated(format!(
                "after {step} exchanges the dimension moved from {first} to {dim}"
            )));
        }
        out.push((next.with_name(format!("{}_{}", t1.name(), step)), dim));
    }
    Ok(out)
}

/// Edges shared by two graphs over the same universe.
pub fn common_edge_count(a: &Graph, b: &Graph) -> usize {
    a.edges().into_iter().filter(|&(u, v)| b.has_edge(u, v)).count()
}

/// The single exchange turning `a` into `b`, if they differ by exactly one
/// edge swap.
pub fn exchange_between(a: &Graph, b: &Graph) -> Option<EdgeExchange> {
    let removed: Vec<_> = a.edges().into_iter().filter(|&(u, v)| !b.has_edge(u, v)).collect();
    let added: Vec<_> = b.edges().into_iter().filter(|&(u, v)| !a.has_edge(u, v)).collect();
    match (added.as_slice(), removed.as_slice()) {
        ([add], [remove]) => Some(EdgeExchange::new(*add, *remove)),
        _ => None,
    }
}

/// Canonical string of a free tree (AHU encoding rooted at a center,
/// minimized over the centers).
fn canonical_form(n: usize, adj: &[Vec<usize>]) -> String {
    if n == 1 {
        return "()".into();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&root| encode(adj, root, usize::MAX))
        .min()
        .expect("one or two centers")
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Every unlabeled tree on `n` vertices, one edge list each on ids `0..n`.
pub fn free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 1);
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for attach in 0..m {
                let mut grown = edges.clone();
                grown.push((attach, m));
                let mut adj = vec![Vec::new(); m + 1];
                for &(a, b) in &grown {
                    adj[a].push(b);
                    adj[b].push(a);
                }
                if seen.insert(canonical_form(m + 1, &adj)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// Labeled tree on `universe` from an edge list over ids.
pub fn tree_from_edges(name: &str, universe: &Arc<VertexUniverse>, edges: &[(usize, usize)]) -> Result<Graph> {
    let t = Graph::from_edges(name, universe.clone(), edges.iter().copied())?;
    require_tree(&t)?;
    Ok(t)
}
