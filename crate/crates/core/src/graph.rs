//! Labeled simple graphs over a shared vertex universe.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Ordered, duplicate-free list of vertex labels with a dense id per label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexUniverse {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexUniverse {
    /// Builds a universe in the given order. Returns the offending label on
    /// duplicates or empty labels.
    pub fn new<I, S>(labels: I) -> std::result::Result<Self, String>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for label in labels {
            let label = label.into();
            if label.is_empty() || index.contains_key(&label) {
                return Err(label);
            }
            index.insert(label.clone(), out.len());
            out.push(label);
        }
        Ok(VertexUniverse { labels: out, index })
    }

    /// Universe labeled `{prefix}1 .. {prefix}n`.
    pub fn numbered(prefix: &str, n: usize) -> Arc<Self> {
        Arc::new(Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("distinct labels"))
    }

    /// Universe from string labels; panics on duplicates. Meant for fixtures.
    pub fn of(labels: &[&str]) -> Arc<Self> {
        Arc::new(Self::new(labels.iter().copied()).expect("distinct labels"))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Ids for a list of labels, failing on the first unknown one.
    pub fn ids<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> std::result::Result<Vec<usize>, String> {
        labels
            .into_iter()
            .map(|l| self.id(l).ok_or_else(|| l.to_string()))
            .collect()
    }

    pub fn set_of(&self, labels: &[&str]) -> VertexSet {
        let ids = self.ids(labels.iter().copied()).expect("known labels");
        VertexSet::from_ids(self.len(), ids)
    }

    /// Labels of `set`, sorted as strings.
    pub fn sorted_labels(&self, set: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|v| self.labels[v].clone()).collect();
        out.sort();
        out
    }
}

/// Simple undirected graph on a [`VertexUniverse`]. Immutable once built.
#[derive(Debug, Clone)]
pub struct Graph {
    name: String,
    universe: Arc<VertexUniverse>,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl PartialEq for Graph {
    /// Labeled equality: same universe labels and same edge set. Names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.universe.labels == other.universe.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn from_edges<I>(name: impl Into<String>, universe: Arc<VertexUniverse>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.len();
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph {
            name: name.into(),
            universe,
            adj,
            edge_count,
        })
    }

    /// Builds from label pairs; panics on unknown labels. Meant for fixtures.
    pub fn from_label_edges(name: &str, universe: &Arc<VertexUniverse>, edges: &[(&str, &str)]) -> Self {
        let ids = edges.iter().map(|(a, b)| {
            (
                universe.id(a).unwrap_or_else(|| panic!("unknown label {a}")),
                universe.id(b).unwrap_or_else(|| panic!("unknown label {b}")),
            )
        });
        Self::from_edges(name, universe.clone(), ids).expect("valid fixture")
    }

    /// Path visiting `order` in sequence.
    pub fn path(name: &str, universe: Arc<VertexUniverse>, order: &[usize]) -> Result<Self> {
        Self::from_edges(name, universe, order.windows(2).map(|w| (w[0], w[1])))
    }

    /// Cycle visiting `order` in sequence and closing back to the start.
    pub fn cycle(name: &str, universe: Arc<VertexUniverse>, order: &[usize]) -> Result<Self> {
        let k = order.len();
        Self::from_edges(name, universe, (0..k).map(|i| (order[i], order[(i + 1) % k])))
    }

    pub fn complete(name: &str, universe: Arc<VertexUniverse>) -> Self {
        let n = universe.len();
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_edges(name, universe, edges).expect("in range")
    }

    pub fn star(name: &str, universe: Arc<VertexUniverse>, center: usize) -> Result<Self> {
        let n = universe.len();
        Self::from_edges(name, universe, (0..n).filter(|&v| v != center).map(|v| (center, v)))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Arc<VertexUniverse> {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self, v: usize) -> &str {
        self.universe.label(v)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open and closed neighborhoods of `v`.
    pub fn neighborhoods(&self, v: usize) -> (VertexSet, VertexSet) {
        let open = self.adj[v].clone();
        let mut closed = open.clone();
        closed.insert(v);
        (open, closed)
    }

    /// Edges as `(min, max)` id pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Single BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.unreachable_from_root().is_none()
    }

    fn unreachable_from_root(&self) -> Option<usize> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let dist = self.bfs(0);
        dist.iter().position(|d| d.is_none())
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Error naming the first vertex unreachable from vertex 0, if any.
    pub fn require_connected(&self) -> Result<()> {
        match self.unreachable_from_root() {
            None => Ok(()),
            Some(v) => Err(Error::Disconnected {
                graph: self.name.clone(),
                root: self.label(0).to_string(),
                vertex: self.label(v).to_string(),
            }),
        }
    }

    /// All-pairs hop distances by one BFS per vertex.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        self.require_connected()?;
        let n = self.n();
        let mut d = vec![0u32; n * n];
        let mut diameter = 0;
        for s in 0..n {
            for (t, dt) in self.bfs(s).into_iter().enumerate() {
                let dt = dt.expect("connected");
                d[s * n + t] = dt;
                diameter = diameter.max(dt);
            }
        }
        Ok(DistanceMatrix { n, d, diameter })
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Connected with exactly two degree-1 vertices and the rest of degree 2,
    /// or a connected graph on at most two vertices.
    pub fn is_path(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let n = self.n();
        if n <= 2 {
            return true;
        }
        let ones = (0..n).filter(|&v| self.degree(v) == 1).count();
        let twos = (0..n).filter(|&v| self.degree(v) == 2).count();
        ones == 2 && twos == n - 2
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && (0..self.n()).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Leaves of a path in ascending id order (both ends; a single vertex
    /// counts as its own leaf).
    pub fn path_ends(&self) -> Vec<usize> {
        if self.n() == 1 {
            return vec![0];
        }
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Image of this graph under the vertex map `f` (`f[v]` is the image of `v`).
    pub fn permuted(&self, f: &[usize]) -> Graph {
        let edges = self.edges().into_iter().map(|(u, v)| (f[u], f[v]));
        Graph::from_edges(self.name.clone(), self.universe.clone(), edges).expect("bijection")
    }
}

/// Ordered, non-empty collection of graphs over one universe.
#[derive(Debug, Clone)]
pub struct GraphFamily {
    name: String,
    universe: Arc<VertexUniverse>,
    members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(name: impl Into<String>, members: Vec<Graph>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyFamily)?;
        let universe = first.universe.clone();
        for (i, g) in members.iter().enumerate() {
            if !Arc::ptr_eq(&g.universe, &universe) && g.universe.labels != universe.labels {
                return Err(Error::UniverseMismatch(g.name.clone()));
            }
            if members[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidArgument(format!("duplicate graph name `{}`", g.name)));
            }
        }
        Ok(GraphFamily {
            name: name.into(),
            universe,
            members,
        })
    }

    pub fn singleton(g: Graph) -> Self {
        let name = g.name.clone();
        GraphFamily {
            name,
            universe: g.universe.clone(),
            members: vec![g],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Arc<VertexUniverse> {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Graph> {
        self.members.iter().find(|g| g.name == name)
    }

    /// Subfamily of the members at `indices`, in that order.
    pub fn subfamily(&self, indices: &[usize]) -> Result<GraphFamily> {
        GraphFamily::new(
            self.name.clone(),
            indices.iter().map(|&i| self.members[i].clone()).collect(),
        )
    }

    /// Distance matrices of every member; fails on the first disconnected one.
    pub fn distances(&self) -> Result<Vec<DistanceMatrix>> {
        self.members.iter().map(Graph::distances).collect()
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}
