//! Executable checks of the bounds and characterizations, one report each.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::resolution::{antipodal_pairs, are_twins};
use crate::solver::{metric_dimension, sandwich_bounds, simultaneous_metric_dimension};
use crate::trees::{common_edge_count, exchange_between, family_interior_bound, tree_metric_dimension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub inputs: String,
    pub claim: String,
    pub metrics: BTreeMap<String, Value>,
    pub verdict: Verdict,
    /// Counterexample on violation, reason when inapplicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl TheoremReport {
    fn new(id: &str, inputs: impl Into<String>, claim: &str) -> Self {
        TheoremReport {
            id: id.to_string(),
            inputs: inputs.into(),
            claim: claim.to_string(),
            metrics: BTreeMap::new(),
            verdict: Verdict::Holds,
            witness: None,
        }
    }

    fn metric(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.metrics.insert(key.to_string(), value.into());
        self
    }

    /// Records the first failure; later ones keep the original witness.
    fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok && self.verdict != Verdict::Violated {
            self.verdict = Verdict::Violated;
            self.witness = Some(witness());
        }
    }

    fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.witness = Some(reason.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Multi-line human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n  inputs: {}\n  claim: {}\n", self.id, self.verdict, self.inputs, self.claim);
        for (k, v) in &self.metrics {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        if let Some(w) = &self.witness {
            let label = if self.verdict == Verdict::Violated { "witness" } else { "note" };
            out.push_str(&format!("  {label}: {w}\n"));
        }
        out
    }
}

fn describe(fam: &GraphFamily) -> String {
    format!("family {} ({} graphs on {} vertices)", fam.name(), fam.len(), fam.n())
}

fn labels(fam: &GraphFamily, s: &VertexSet) -> Vec<String> {
    fam.universe().sorted_labels(s)
}

fn pair(fam: &GraphFamily, x: usize, y: usize) -> String {
    format!("{{{}, {}}}", fam.universe().label(x), fam.universe().label(y))
}

/// `Sd = |V| - 1` iff every pair of vertices is a twin pair in some member.
pub fn check_twin_characterization(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("twins", describe(fam), "Sd = |V| - 1 <=> every pair is twin in some member");
    let n = fam.n();
    let sd = simultaneous_metric_dimension(fam)?;
    let lonely = (0..n)
        .tuple_combinations()
        .find(|&(x, y)| !fam.members().iter().any(|g| are_twins(g, x, y)));
    let lhs = n >= 1 && sd.dimension == n - 1;
    let rhs = lonely.is_none();
    rep.metric("sd", sd.dimension)
        .metric("n", n)
        .metric("sd_is_n_minus_1", lhs)
        .metric("every_pair_twin", rhs);
    if let Some((x, y)) = lonely {
        rep.metric("pair_twin_nowhere", pair(fam, x, y));
    }
    rep.require(lhs == rhs, || {
        format!(
            "Sd = {} with witness {:?}, pair twin nowhere: {}",
            sd.dimension,
            labels(fam, &sd.witness),
            lonely.map_or("none".into(), |(x, y)| pair(fam, x, y))
        )
    });
    Ok(rep)
}

/// `max dim <= Sd <= min(|V| - 1, sum dim)`, and `Sd(H) <= Sd(G)` for
/// subfamilies (all of them up to eight members, singletons beyond).
pub fn check_sandwich(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(
        "sandwich",
        describe(fam),
        "max dim(G_i) <= Sd <= min(|V|-1, sum dim(G_i)); Sd(H) <= Sd(G) for subfamilies H",
    );
    let s = sandwich_bounds(fam)?;
    rep.metric("sd", s.sd)
        .metric("lower", s.lower)
        .metric("upper", s.upper)
        .metric("lower_tight", s.lower_tight)
        .metric("upper_tight", s.upper_tight)
        .metric(
            "member_dims",
            s.members.iter().map(|m| json!({"graph": m.graph, "dim": m.dim})).collect::<Vec<_>>(),
        );
    rep.require(s.holds(), || format!("Sd = {} outside [{}, {}]", s.sd, s.lower, s.upper));

    let k = fam.len();
    let subsets: Vec<Vec<usize>> = if k <= 8 {
        (1..k).flat_map(|size| (0..k).combinations(size)).collect()
    } else {
        (0..k).map(|i| vec![i]).collect()
    };
    for idx in &subsets {
        let sub = simultaneous_metric_dimension(&fam.subfamily(idx)?)?.dimension;
        rep.require(sub <= s.sd, || {
            let names: Vec<&str> = idx.iter().map(|&i| fam.members()[i].name()).collect();
            format!("subfamily {names:?} has Sd = {sub} > {}", s.sd)
        });
    }
    rep.metric("subfamilies_checked", subsets.len());
    Ok(rep)
}

/// `dim(G) <= n - D(G)` for every member.
pub fn check_diameter_bound(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("diameter", describe(fam), "dim(G) <= n - D(G) for every member");
    let mut rows = Vec::new();
    for g in fam.members() {
        let dim = metric_dimension(g)?.dimension;
        let diam = g.distances()?.diameter() as usize;
        rows.push(json!({"graph": g.name(), "dim": dim, "diameter": diam}));
        rep.require(dim + diam <= g.n(), || {
            format!("{}: dim {dim} > {} - {diam}", g.name(), g.n())
        });
    }
    rep.metric("members", rows);
    Ok(rep)
}

/// Longest vertex sequence that is a shortest path in every member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonPath {
    pub path: Vec<usize>,
    pub length: usize,
}

pub const COMMON_PATH_CAP: usize = 16;

/// Depth-first over sequences in lexicographic order, extending only along
/// edges present in every member and only while the start stays at
/// distance equal to the length in every member. Returns the
/// lexicographically least longest sequence.
pub fn longest_common_shortest_path(fam: &GraphFamily) -> Result<CommonPath> {
    let n = fam.n();
    if n > COMMON_PATH_CAP {
        return Err(Error::TooLarge { n, cap: COMMON_PATH_CAP });
    }
    let d = fam.distances()?;
    let mut common: Vec<VertexSet> = (0..n).map(|v| fam.members()[0].neighbors(v).clone()).collect();
    for g in &fam.members()[1..] {
        for (v, set) in common.iter_mut().enumerate() {
            set.intersect_with(g.neighbors(v));
        }
    }
    let ceiling = d.iter().map(|m| m.diameter() as usize).min().unwrap_or(0);

    struct Dfs<'a> {
        d: &'a [crate::graph::DistanceMatrix],
        common: &'a [VertexSet],
        ceiling: usize,
        best: Vec<usize>,
    }
    impl Dfs<'_> {
        fn go(&mut self, path: &mut Vec<usize>) -> bool {
            if path.len() > self.best.len() {
                self.best = path.clone();
                if self.best.len() == self.ceiling + 1 {
                    return true;
                }
            }
            let start = path[0];
            let last = *path.last().expect("non-empty");
            let len = path.len() as u32;
            for w in self.common[last].iter() {
                if self.d.iter().all(|m| m.get(start, w) == len) {
                    path.push(w);
                    if self.go(path) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
    }
    let mut dfs = Dfs {
        d: &d,
        common: &common,
        ceiling,
        best: Vec::new(),
    };
    for v in 0..n {
        if dfs.go(&mut vec![v]) {
            break;
        }
    }
    let length = dfs.best.len().saturating_sub(1);
    Ok(CommonPath {
        path: dfs.best,
        length,
    })
}

/// Independent check that `path` is a shortest path in every member.
pub fn is_common_shortest_path(fam: &GraphFamily, path: &[usize]) -> Result<bool> {
    let Some((&first, &last)) = path.first().zip(path.last()) else {
        return Ok(false);
    };
    for g in fam.members() {
        let d = g.distances()?;
        if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) || d.get(first, last) as usize != path.len() - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Sd <= |V| - d` for the longest common shortest path of length `d`.
pub fn check_common_path(fam: &GraphFamily) -> Result<TheoremReport> {
    let rep = TheoremReport::new("common-path", describe(fam), "Sd <= |V| - d, d = longest common shortest path");
    let cp = longest_common_shortest_path(fam)?;
    let path_labels: Vec<&str> = cp.path.iter().map(|&v| fam.universe().label(v)).collect();
    let mut rep = rep;
    rep.metric("d", cp.length).metric("path", path_labels.clone());
    if cp.length < 1 {
        return Ok(rep.inapplicable("no common edge, the bound is vacuous"));
    }
    let sd = simultaneous_metric_dimension(fam)?.dimension;
    let bound = fam.n() - cp.length;
    rep.metric("sd", sd).metric("bound", bound).metric("tight", sd == bound);
    rep.require(is_common_shortest_path(fam, &cp.path)?, || format!("{path_labels:?} fails the recheck"));
    rep.require(sd <= bound, || format!("Sd = {sd} > {bound} along {path_labels:?}"));
    Ok(rep)
}

/// For a family of paths: `1 <= Sd <= 2` and `Sd = 1` iff the paths share a
/// leaf. Otherwise `Sd(G) = Sd(non-path members)`.
pub fn check_path_family(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("paths", describe(fam), "");
    for g in fam.members() {
        g.require_connected()?;
    }
    let sd = simultaneous_metric_dimension(fam)?.dimension;
    rep.metric("sd", sd);
    let non_paths: Vec<usize> = (0..fam.len()).filter(|&i| !fam.members()[i].is_path()).collect();
    if non_paths.is_empty() {
        rep.claim = "1 <= Sd <= 2 and (Sd = 1 <=> the paths share a leaf)".into();
        let mut shared = VertexSet::full(fam.n());
        for g in fam.members() {
            shared.intersect_with(&VertexSet::from_ids(fam.n(), g.path_ends()));
        }
        rep.metric("shared_leaves", labels(fam, &shared));
        if fam.n() == 1 {
            return Ok(rep.inapplicable("single vertex"));
        }
        rep.require((1..=2).contains(&sd), || format!("Sd = {sd}"));
        rep.require((sd == 1) == !shared.is_empty(), || {
            format!("Sd = {sd} but shared leaves are {:?}", labels(fam, &shared))
        });
    } else if non_paths.len() == fam.len() {
        rep.claim = "Sd(G) = Sd(members that are not paths)".into();
        return Ok(rep.inapplicable("no member is a path"));
    } else {
        rep.claim = "Sd(G) = Sd(members that are not paths)".into();
        let sub = simultaneous_metric_dimension(&fam.subfamily(&non_paths)?)?.dimension;
        let names: Vec<&str> = non_paths.iter().map(|&i| fam.members()[i].name()).collect();
        rep.metric("non_path_members", names).metric("sd_non_paths", sub);
        rep.require(sd == sub, || format!("Sd = {sd} but Sd(non-paths) = {sub}"));
    }
    Ok(rep)
}

/// Cycle families: `Sd = 2` for odd order; for even order `2 <= Sd <= 3`
/// with `Sd = 2` iff some pair is antipodal in no member, and `Sd = 2`
/// whenever there are fewer than `n - 1` members.
pub fn check_cycle_family(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("cycles", describe(fam), "");
    if let Some(g) = fam.members().iter().find(|g| !g.is_cycle()) {
        return Err(Error::NotACycle(g.name().to_string()));
    }
    let n = fam.n();
    let sd = simultaneous_metric_dimension(fam)?;
    rep.metric("sd", sd.dimension).metric("n", n).metric("members", fam.len());
    if n % 2 == 1 {
        rep.claim = "odd order: Sd = 2".into();
        rep.require(sd.dimension == 2, || format!("Sd = {}", sd.dimension));
        return Ok(rep);
    }
    rep.claim = "even order: 2 <= Sd <= 3, Sd = 2 <=> some pair is antipodal in no member; k < n-1 => Sd = 2".into();
    let mut covered = vec![false; n * n];
    for g in fam.members() {
        for (x, y) in antipodal_pairs(g)? {
            covered[x * n + y] = true;
        }
    }
    let free = (0..n).tuple_combinations().find(|&(x, y)| !covered[x * n + y]);
    rep.metric("pair_antipodal_nowhere", free.map(|(x, y)| pair(fam, x, y)));
    rep.require((2..=3).contains(&sd.dimension), || format!("Sd = {}", sd.dimension));
    rep.require((sd.dimension == 2) == free.is_some(), || {
        format!(
            "Sd = {} with witness {:?}, unused antipodal pair: {}",
            sd.dimension,
            labels(fam, &sd.witness),
            free.map_or("none".into(), |(x, y)| pair(fam, x, y))
        )
    });
    if fam.len() < n - 1 {
        rep.require(sd.dimension == 2, || format!("{} < n - 1 members but Sd = {}", fam.len(), sd.dimension));
    }
    Ok(rep)
}

/// `Sd <= |V| - |S_I| - 1` for a family of non-path trees.
pub fn check_tree_bound(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("tree-bound", describe(fam), "Sd <= |V| - |S_I| - 1");
    let b = family_interior_bound(fam)?;
    let sd = simultaneous_metric_dimension(fam)?.dimension;
    rep.metric("bound", b.bound)
        .metric("common_interior", labels(fam, &b.common_interior))
        .metric("sd", sd)
        .metric("tight", sd == b.bound);
    rep.require(sd <= b.bound, || format!("Sd = {sd} > {}", b.bound));
    Ok(rep)
}

/// Over a family of trees: consecutive members one exchange apart differ
/// in dimension by at most 2 (at most `2k` after `k` such steps), and any
/// two members sharing `c > n/2` edges differ by at most `2(n - c - 1)`.
pub fn check_exchange_bound(fam: &GraphFamily) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(
        "exchange-bound",
        describe(fam),
        "|dim(T) - dim(T')| <= 2 per exchange, <= 2k over k exchanges, <= 2(n-c-1) with c > n/2 common edges",
    );
    let n = fam.n();
    let mut dims = Vec::with_capacity(fam.len());
    for t in fam.members() {
        dims.push(tree_metric_dimension(t)?.dimension as i64);
    }
    rep.metric("dims", dims.clone());

    let mut steps = 0usize;
    let mut chain_start = 0usize;
    for i in 1..fam.len() {
        let (a, b) = (&fam.members()[i - 1], &fam.members()[i]);
        if exchange_between(a, b).is_some() {
            steps += 1;
            rep.require((dims[i] - dims[i - 1]).abs() <= 2, || {
                format!("{} -> {}: dim {} -> {}", a.name(), b.name(), dims[i - 1], dims[i])
            });
            let k = (i - chain_start) as i64;
            rep.require((dims[i] - dims[chain_start]).abs() <= 2 * k, || {
                format!("{k} exchanges from {} moved dim by {}", fam.members()[chain_start].name(), dims[i] - dims[chain_start])
            });
        } else {
            chain_start = i;
        }
    }
    let mut pairs = 0usize;
    for (i, j) in (0..fam.len()).tuple_combinations() {
        let c = common_edge_count(&fam.members()[i], &fam.members()[j]);
        if 2 * c > n {
            pairs += 1;
            let allowed = 2 * (n as i64 - c as i64 - 1);
            rep.require((dims[i] - dims[j]).abs() <= allowed, || {
                format!(
                    "{} and {} share {c} edges but dims differ by {}",
                    fam.members()[i].name(),
                    fam.members()[j].name(),
                    (dims[i] - dims[j]).abs()
                )
            });
        }
    }
    rep.metric("exchange_steps", steps).metric("common_edge_pairs", pairs);
    if steps == 0 && pairs == 0 {
        return Ok(rep.inapplicable("no consecutive exchanges and no pair with more than n/2 common edges"));
    }
    Ok(rep)
}

/// Membership, distance preservation, core isomorphism and the generator
/// property over seeded samples of `G_B`.
pub fn check_gb(g: &Graph, b: &VertexSet, samples: usize, seed: u64) -> Result<TheoremReport> {
    use crate::generators::gb::{sample_gb_members, verify_gb_properties};
    let basis = g.universe().sorted_labels(b);
    let mut rep = TheoremReport::new(
        "gb",
        format!("graph {} with basis {:?}, {samples} samples, seed {seed}", g.name(), basis),
        "B generates every connected member of G_B; distances to B and the core are preserved",
    );
    let drawn = sample_gb_members(g, b, samples, seed, true)?;
    let reports = verify_gb_properties(g, b, &drawn)?;
    let count = |p: fn(&crate::generators::gb::GbPropertyReport) -> bool| reports.iter().filter(|r| p(r)).count();
    rep.metric("samples", reports.len())
        .metric("distances_preserved", count(|r| r.distances_preserved))
        .metric("core_isomorphic", count(|r| r.core_isomorphic))
        .metric("generator", count(|r| r.generator));
    if let Some((r, (f, other))) = reports.iter().zip(&drawn).find(|(r, _)| !r.holds()) {
        rep.require(false, || format!("{:?} under f = {:?} with edges {:?}", r, f, other.edges()));
    }
    Ok(rep)
}

/// Sandwich, twin characterization and diameter bound: the checks that
/// apply to any family.
pub fn general_checks(fam: &GraphFamily) -> Result<Vec<TheoremReport>> {
    Ok(vec![
        check_sandwich(fam)?,
        check_twin_characterization(fam)?,
        check_diameter_bound(fam)?,
    ])
}
