//! Families `G_B` of graphs sharing the metric basis `B` of a seed graph.
//!
//! For a permutation `f` fixing `B` pointwise, `G_f` holds every graph `G'`
//! with `N_{G'}(f(v)) = f(N_G(v))` for all `v` in `R = B_{D-2}(B)`. Pairs
//! touching `f(R)` are thereby fixed and every other pair is free, so each
//! `f` contributes `2^(l(l-1)/2)` graphs with `l = |V - R|`.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, GraphFamily};
use crate::resolution::generates;
use crate::solver::metric_dimension;

type Edges = Vec<(usize, usize)>;

fn ball_in(d: &DistanceMatrix, b: &VertexSet, r: usize) -> VertexSet {
    let mut out = VertexSet::empty(d.n());
    for x in b.iter() {
        for (y, &dist) in d.row(x).iter().enumerate() {
            if dist as usize <= r {
                out.insert(y);
            }
        }
    }
    out
}

/// Union of the closed radius-`r` balls around `b`.
pub fn ball(g: &Graph, b: &VertexSet, r: usize) -> Result<VertexSet> {
    let d = g.distances()?;
    let diameter = d.diameter() as usize;
    if r > diameter {
        return Err(Error::RadiusOutOfRange { r, diameter });
    }
    Ok(ball_in(&d, b, r))
}

/// `b` generates `g` and no smaller set does.
pub fn require_basis(g: &Graph, b: &VertexSet) -> Result<()> {
    let d = g.distances()?;
    if generates(b, &d) && metric_dimension(g)?.dimension == b.len() {
        Ok(())
    } else {
        Err(Error::NotABasis(g.name().to_string()))
    }
}

/// Seed graph data shared by every `G_f`.
struct Setup {
    n: usize,
    diameter: usize,
    /// `B_{D-2}(B)`; empty when `D < 2`.
    core: VertexSet,
    /// `B_{D-1}(B)`.
    near: VertexSet,
    moved: Vec<usize>,
}

impl Setup {
    fn new(g: &Graph, b: &VertexSet) -> Result<Self> {
        require_basis(g, b)?;
        let d = g.distances()?;
        let diameter = d.diameter() as usize;
        let n = g.n();
        let core = if diameter >= 2 {
            ball_in(&d, b, diameter - 2)
        } else {
            VertexSet::empty(n)
        };
        let near = ball_in(&d, b, diameter.saturating_sub(1));
        Ok(Setup {
            n,
            diameter,
            core,
            near,
            moved: VertexSet::full(n).difference(b).to_vec(),
        })
    }

    fn is_complete(&self) -> bool {
        self.diameter <= 1
    }

    /// Full image vector from the images of `moved`, in order.
    fn permutation(&self, images: &[usize]) -> Vec<usize> {
        let mut f: Vec<usize> = (0..self.n).collect();
        for (&v, &img) in self.moved.iter().zip(images) {
            f[v] = img;
        }
        f
    }

    fn fixed_and_free(&self, g: &Graph, f: &[usize]) -> (Edges, Edges) {
        let mut image = VertexSet::empty(self.n);
        let mut fixed = Vec::new();
        for v in self.core.iter() {
            image.insert(f[v]);
            for w in g.neighbors(v).iter() {
                let (a, b) = (f[v], f[w]);
                fixed.push((a.min(b), a.max(b)));
            }
        }
        fixed.sort_unstable();
        fixed.dedup();
        let outside: Vec<usize> = (0..self.n).filter(|&x| !image.contains(x)).collect();
        let free = outside.iter().copied().tuple_combinations().collect();
        (fixed, free)
    }
}

/// Checks `f` is a permutation of the universe fixing `b` pointwise.
pub fn check_stabilizer(n: usize, b: &VertexSet, f: &[usize]) -> Result<()> {
    if f.len() != n {
        return Err(Error::InvalidArgument(format!("permutation has {} entries, expected {n}", f.len())));
    }
    let mut seen = vec![false; n];
    for &x in f {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
    }
    if let Some(x) = b.iter().find(|&x| f[x] != x) {
        return Err(Error::InvalidArgument(format!("permutation moves basis vertex {x}")));
    }
    Ok(())
}

fn membership(g: &Graph, setup: &Setup, f: &[usize], other: &Graph) -> std::result::Result<(), String> {
    if setup.is_complete() {
        return if other == g {
            Ok(())
        } else {
            Err("the family of a complete graph is the graph itself".into())
        };
    }
    for v in setup.core.iter() {
        let want = VertexSet::from_ids(setup.n, g.neighbors(v).iter().map(|w| f[w]));
        if other.neighbors(f[v]) != &want {
            return Err(format!(
                "neighbourhood of {} differs from the image of the neighbourhood of {}",
                other.label(f[v]),
                g.label(v)
            ));
        }
    }
    Ok(())
}

/// Whether `other` belongs to `G_f` for the seed `g` with basis `b`.
pub fn check_gf_membership(g: &Graph, b: &VertexSet, f: &[usize], other: &Graph) -> Result<()> {
    let setup = Setup::new(g, b)?;
    check_stabilizer(setup.n, b, f)?;
    membership(g, &setup, f, other).map_err(Error::NotInFamily)
}

#[derive(Debug, Clone)]
pub struct GbMember {
    pub graph: Graph,
    /// The permutation the member was first produced under.
    pub f: Vec<usize>,
    pub connected: bool,
    pub is_path: bool,
    /// Connected, generated by `B` and of dimension `|B|`.
    pub basis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GbCensus {
    pub total: u128,
    pub connected: Option<u128>,
    pub paths: Option<u128>,
    pub basis_holds: Option<u128>,
    /// Counts come from a full enumeration rather than the formulas.
    pub exact: bool,
    pub emitted: usize,
}

impl GbCensus {
    pub fn line(&self) -> String {
        let show = |x: Option<u128>| x.map_or_else(|| "?".to_string(), |v| v.to_string());
        let mut line = format!(
            "connected={} paths={} basis_holds={}",
            show(self.connected),
            show(self.paths),
            show(self.basis_holds)
        );
        if !self.exact {
            line.push_str(&format!(" total={} sampled={}", self.total, self.emitted));
        }
        line
    }
}

#[derive(Debug, Clone)]
pub struct GbOutput {
    pub members: Vec<GbMember>,
    pub census: GbCensus,
}

impl GbOutput {
    pub fn family(&self, name: &str) -> Result<GraphFamily> {
        GraphFamily::new(name, self.members.iter().map(|m| m.graph.clone()).collect())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GbOptions {
    pub connected_only: bool,
    /// Largest raw stream (`|S(B)| * 2^free`) enumerated in full; above it a
    /// sample of this many distinct graphs is drawn.
    pub limit: usize,
    pub seed: u64,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            connected_only: false,
            limit: 100_000,
            seed: 0,
        }
    }
}

fn classify_member(graph: Graph, f: Vec<usize>, b: &VertexSet) -> Result<GbMember> {
    let connected = graph.is_connected();
    let is_path = connected && graph.is_path();
    let basis = connected && generates(b, &graph.distances()?) && metric_dimension(&graph)?.dimension == b.len();
    Ok(GbMember {
        graph,
        f,
        connected,
        is_path,
        basis,
    })
}

fn build(g: &Graph, fixed: &[(usize, usize)], free: &[(usize, usize)], mask: u128) -> Result<Graph> {
    let chosen = free
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Graph::from_edges("", g.universe().clone(), fixed.iter().copied().chain(chosen))
}

fn free_count(setup: &Setup) -> usize {
    let l = setup.n - setup.core.len();
    l * l.saturating_sub(1) / 2
}

fn factorial(k: usize) -> Option<u128> {
    (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}

/// Members of `G_B` in stream order: permutations by lexicographic image
/// sequence, free edges in binary counting order, duplicates dropped.
pub fn gen_gb_family(g: &Graph, b: &VertexSet, opts: &GbOptions) -> Result<GbOutput> {
    if opts.limit == 0 {
        return Err(Error::InvalidArgument("limit must be positive".into()));
    }
    let setup = Setup::new(g, b)?;
    if setup.is_complete() {
        let m = classify_member(g.clone().with_name("G1"), (0..setup.n).collect(), b)?;
        let census = GbCensus {
            total: 1,
            connected: Some(1),
            paths: Some(m.is_path as u128),
            basis_holds: Some(m.basis as u128),
            exact: true,
            emitted: 1,
        };
        return Ok(GbOutput {
            members: vec![m],
            census,
        });
    }

    let free = free_count(&setup);
    let raw = factorial(setup.moved.len()).and_then(|p| 1u128.checked_shl(free as u32).and_then(|s| p.checked_mul(s)));
    match raw {
        Some(raw) if free < 128 && raw <= opts.limit as u128 => enumerate(g, b, &setup, opts),
        _ => sample(g, b, &setup, opts),
    }
}

fn enumerate(g: &Graph, b: &VertexSet, setup: &Setup, opts: &GbOptions) -> Result<GbOutput> {
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut members = Vec::new();
    let (mut total, mut connected, mut paths, mut basis) = (0u128, 0u128, 0u128, 0u128);
    for images in setup.moved.iter().copied().permutations(setup.moved.len()) {
        let f = setup.permutation(&images);
        let (fixed, free) = setup.fixed_and_free(g, &f);
        for mask in 0..1u128 << free.len() {
            let graph = build(g, &fixed, &free, mask)?;
            if !seen.insert(graph.edges()) {
                continue;
            }
            debug_assert!(membership(g, setup, &f, &graph).is_ok());
            let m = classify_member(graph, f.clone(), b)?;
            total += 1;
            connected += m.connected as u128;
            paths += m.is_path as u128;
            basis += m.basis as u128;
            if m.connected || !opts.connected_only {
                members.push(m);
            }
        }
    }
    name_members(&mut members);
    let emitted = members.len();
    Ok(GbOutput {
        members,
        census: GbCensus {
            total,
            connected: Some(connected),
            paths: Some(paths),
            basis_holds: Some(basis),
            exact: true,
            emitted,
        },
    })
}

fn name_members(members: &mut [GbMember]) {
    for (i, m) in members.iter_mut().enumerate() {
        m.graph = m.graph.clone().with_name(format!("G{}", i + 1));
    }
}

fn random_member(g: &Graph, setup: &Setup, rng: &mut ChaCha8Rng) -> Result<(Vec<usize>, Graph)> {
    let mut images = setup.moved.clone();
    images.shuffle(rng);
    let f = setup.permutation(&images);
    let (fixed, free) = setup.fixed_and_free(g, &f);
    let chosen: Vec<(usize, usize)> = free.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    let graph = Graph::from_edges("", g.universe().clone(), fixed.into_iter().chain(chosen))?;
    Ok((f, graph))
}

fn sample(g: &Graph, b: &VertexSet, setup: &Setup, opts: &GbOptions) -> Result<GbOutput> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut members = Vec::new();
    let attempts = opts.limit.saturating_mul(20);
    for _ in 0..attempts {
        if members.len() == opts.limit {
            break;
        }
        let (f, graph) = random_member(g, setup, &mut rng)?;
        if opts.connected_only && !graph.is_connected() {
            continue;
        }
        if seen.insert(graph.edges()) {
            members.push(classify_member(graph, f, b)?);
        }
    }
    name_members(&mut members);
    let formulas = formulas_for(setup)?;
    Ok(GbOutput {
        census: GbCensus {
            total: formulas.total,
            connected: formulas.connected,
            paths: None,
            basis_holds: None,
            exact: false,
            emitted: members.len(),
        },
        members,
    })
}

/// `count` seeded draws `(f, G')` from `G_B`, uniform over permutations and
/// free-edge subsets, rejecting disconnected draws when asked.
pub fn sample_gb_members(
    g: &Graph,
    b: &VertexSet,
    count: usize,
    seed: u64,
    connected_only: bool,
) -> Result<Vec<(Vec<usize>, Graph)>> {
    let setup = Setup::new(g, b)?;
    if setup.is_complete() {
        return Ok(vec![((0..setup.n).collect(), g.clone()); count]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > count.saturating_mul(1000).max(1000) {
            return Err(Error::Construction("could not draw enough connected members".into()));
        }
        let (f, graph) = random_member(g, &setup, &mut rng)?;
        if connected_only && !graph.is_connected() {
            continue;
        }
        out.push((f, graph.with_name(format!("S{}", out.len() + 1))));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectedRule {
    /// `|B_{D-1}(B)| = |V| - 1`.
    Formula,
    /// `B_{D-1}(B) = V`.
    AllConnected,
    /// Neither case applies; no closed form.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GbFormulas {
    /// `|V - B_{D-2}(B)|`.
    pub l: usize,
    /// `|V - B|`.
    pub moved: usize,
    /// `2^(l(l-1)/2) |V-B|!`.
    pub total: u128,
    /// `2^((l-1)(l-2)/2) (2^(l-1) - 1) |V-B|!` under [`ConnectedRule::Formula`].
    pub connected: Option<u128>,
    pub rule: ConnectedRule,
}

pub fn gb_counting_formulas(g: &Graph, b: &VertexSet) -> Result<GbFormulas> {
    formulas_for(&Setup::new(g, b)?)
}

fn formulas_for(setup: &Setup) -> Result<GbFormulas> {
    let moved = setup.moved.len();
    if setup.is_complete() {
        return Ok(GbFormulas {
            l: 0,
            moved,
            total: 1,
            connected: Some(1),
            rule: ConnectedRule::AllConnected,
        });
    }
    let overflow = || Error::InvalidArgument("counting formula overflows 128 bits".into());
    let l = setup.n - setup.core.len();
    let pow2 = |e: usize| 1u128.checked_shl(e as u32).filter(|_| e < 128);
    let perms = factorial(moved).ok_or_else(overflow)?;
    let total = pow2(l * l.saturating_sub(1) / 2)
        .and_then(|p| p.checked_mul(perms))
        .ok_or_else(overflow)?;
    let (connected, rule) = if setup.near.len() == setup.n {
        (Some(total), ConnectedRule::AllConnected)
    } else if setup.near.len() + 1 == setup.n && l >= 1 {
        let c = pow2((l - 1) * l.saturating_sub(2) / 2)
            .and_then(|a| pow2(l - 1).map(|b| (a, b - 1)))
            .and_then(|(a, b)| a.checked_mul(b))
            .and_then(|x| x.checked_mul(perms))
            .ok_or_else(overflow)?;
        (Some(c), ConnectedRule::Formula)
    } else {
        (None, ConnectedRule::NotApplicable)
    };
    Ok(GbFormulas {
        l,
        moved,
        total,
        connected,
        rule,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GbPropertyReport {
    pub graph: String,
    /// For `b` in `B`, `v` in `B_{D-1}(B)` and `k < D`: `d_G(b, v) = k` iff `d_{G'}(b, f(v)) = k`.
    pub distances_preserved: bool,
    /// `f` maps the subgraph induced by `B_{D-2}(B)` isomorphically.
    pub core_isomorphic: bool,
    /// `B` generates `G'`.
    pub generator: bool,
}

impl GbPropertyReport {
    pub fn holds(&self) -> bool {
        self.distances_preserved && self.core_isomorphic && self.generator
    }
}

/// Rechecks membership of every sample, then the three structural
/// properties. Samples must be connected.
pub fn verify_gb_properties(g: &Graph, b: &VertexSet, samples: &[(Vec<usize>, Graph)]) -> Result<Vec<GbPropertyReport>> {
    let setup = Setup::new(g, b)?;
    let d = g.distances()?;
    let mut out = Vec::with_capacity(samples.len());
    for (f, other) in samples {
        check_stabilizer(setup.n, b, f)?;
        membership(g, &setup, f, other).map_err(|e| Error::NotInFamily(format!("{}: {e}", other.name())))?;
        let d2 = other.distances()?;
        // Exact equality only below the diameter: a vertex of `B_{D-1}(B)`
        // may still sit at distance `D` from some other basis vertex.
        let reach = setup.diameter.saturating_sub(1) as u32;
        let distances_preserved = b.iter().all(|x| {
            setup.near.iter().all(|v| {
                let (a, c) = (d.get(x, v), d2.get(x, f[v]));
                (a > reach && c > reach) || a == c
            })
        });
        let core_isomorphic = setup
            .core
            .iter()
            .tuple_combinations()
            .all(|(u, v)| g.has_edge(u, v) == other.has_edge(f[u], f[v]));
        out.push(GbPropertyReport {
            graph: other.name().to_string(),
            distances_preserved,
            core_isomorphic,
            generator: generates(b, &d2),
        });
    }
    Ok(out)
}
