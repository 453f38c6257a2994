//! Concrete graphs and families used as fixtures and sharpness examples.

use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::generators::hsp::HittingSetInstance;
use crate::graph::{Graph, GraphFamily, VertexUniverse};
use crate::trees::EdgeExchange;

fn family(name: &str, universe: &Arc<VertexUniverse>, members: &[(&str, &[(&str, &str)])]) -> GraphFamily {
    let graphs = members
        .iter()
        .map(|(gname, edges)| Graph::from_label_edges(gname, universe, edges))
        .collect();
    GraphFamily::new(name, graphs).expect("fixture family is well formed")
}

fn v4() -> Arc<VertexUniverse> {
    VertexUniverse::of(&["v1", "v2", "v3", "v4"])
}

/// Three graphs on four vertices with `Sd = 2`; `{v3, v4}` is a basis.
pub fn fig1_family() -> GraphFamily {
    family(
        "fig1",
        &v4(),
        &[
            ("G1", &[("v1", "v2"), ("v2", "v4"), ("v4", "v1"), ("v2", "v3")]),
            ("G2", &[("v1", "v3"), ("v3", "v4"), ("v4", "v1"), ("v1", "v2")]),
            ("G3", &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")]),
        ],
    )
}

/// Three graphs on four vertices with `Sd = 3 = n - 1`.
pub fn fig2_family() -> GraphFamily {
    family(
        "fig2",
        &v4(),
        &[
            ("G1", &[("v1", "v2"), ("v2", "v4"), ("v4", "v1"), ("v2", "v3"), ("v3", "v4")]),
            ("G2", &[("v2", "v1"), ("v2", "v3"), ("v2", "v4")]),
            ("G3", &[("v4", "v1"), ("v4", "v2"), ("v4", "v3")]),
        ],
    )
}

fn v6() -> Arc<VertexUniverse> {
    VertexUniverse::numbered("v", 6)
}

/// Seed graph of the `G_B` census, basis `{v1, v5}`.
pub fn fig3_graph() -> Graph {
    Graph::from_label_edges(
        "G",
        &v6(),
        &[
            ("v6", "v1"),
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "v5"),
            ("v5", "v6"),
            ("v6", "v2"),
            ("v6", "v3"),
            ("v6", "v4"),
        ],
    )
}

pub fn fig3_basis() -> VertexSet {
    v6().set_of(&["v1", "v5"])
}

/// `v2 -> v4, v3 -> v2, v4 -> v6, v6 -> v3`, fixing `v1` and `v5`.
pub fn fig3_permutation() -> Vec<usize> {
    vec![0, 3, 1, 5, 4, 2]
}

/// Eight members of `G_f` for [`fig3_permutation`].
pub fn fig3_subfamily() -> GraphFamily {
    let ring: &[(&str, &str)] = &[
        ("v3", "v1"),
        ("v1", "v4"),
        ("v4", "v2"),
        ("v2", "v6"),
        ("v6", "v5"),
        ("v5", "v3"),
    ];
    let with = |extra: &[(&'static str, &'static str)]| -> Vec<(&'static str, &'static str)> {
        ring.iter().copied().chain(extra.iter().copied()).collect()
    };
    let g1 = with(&[("v6", "v4")]);
    let g2 = with(&[("v3", "v6")]);
    let g3 = vec![("v6", "v5"), ("v5", "v3"), ("v3", "v1"), ("v1", "v4"), ("v4", "v2"), ("v2", "v3")];
    let g4 = vec![("v6", "v5"), ("v5", "v3"), ("v3", "v1"), ("v1", "v4"), ("v4", "v2"), ("v6", "v4")];
    let g5 = with(&[("v3", "v4"), ("v3", "v2"), ("v3", "v6")]);
    let g6 = with(&[("v3", "v4"), ("v3", "v6")]);
    let g7 = vec![("v3", "v1"), ("v1", "v4"), ("v4", "v3"), ("v3", "v6"), ("v6", "v5"), ("v5", "v3"), ("v3", "v2")];
    let g8 = vec![("v3", "v1"), ("v1", "v4"), ("v4", "v2"), ("v2", "v3"), ("v3", "v6"), ("v6", "v5"), ("v5", "v3")];
    family(
        "fig3_gf",
        &v6(),
        &[
            ("G1", &g1),
            ("G2", &g2),
            ("G3", &g3),
            ("G4", &g4),
            ("G5", &g5),
            ("G6", &g6),
            ("G7", &g7),
            ("G8", &g8),
        ],
    )
}

/// Three trees on seven vertices sharing interior vertices `m1, m2, i1`.
pub fn fig4_family() -> GraphFamily {
    let u = VertexUniverse::of(&["e1", "e2", "e3", "e4", "m1", "m2", "i1"]);
    family(
        "fig4",
        &u,
        &[
            (
                "T1",
                &[("e1", "i1"), ("i1", "m1"), ("m1", "m2"), ("m2", "e3"), ("m1", "e2"), ("m2", "e4")],
            ),
            (
                "T2",
                &[("e1", "m1"), ("m1", "i1"), ("i1", "m2"), ("m2", "e2"), ("e3", "m1"), ("m2", "e4")],
            ),
            (
                "T3",
                &[("e1", "m1"), ("m1", "m2"), ("m2", "e3"), ("m1", "e4"), ("m2", "i1"), ("i1", "e2")],
            ),
        ],
    )
}

pub fn fig5_instance() -> HittingSetInstance {
    HittingSetInstance::from_strs(
        &["v1", "v2", "v3", "v4", "v5"],
        &[&["v1", "v2", "v3"], &["v2", "v3", "v4"], &["v4", "v5"]],
        2,
    )
    .expect("fixture instance is valid")
}

pub fn ratio_label(i: usize, j: usize) -> String {
    format!("({i},{j})")
}

/// Trees `T_1..T_s` on `(i,j)` for `i <= r`, `j <= s`, plus `x`. `T_1` is
/// the spider of paths `(i,1)..(i,s) x`; `T_j` re-hangs each leg at `(i,1)`.
pub fn ratio_family(r: usize, s: usize) -> Result<GraphFamily> {
    let labels: Vec<String> = (1..=r)
        .flat_map(|i| (1..=s).map(move |j| ratio_label(i, j)))
        .chain(std::iter::once("x".to_string()))
        .collect();
    let universe = Arc::new(VertexUniverse::new(labels).expect("distinct labels"));
    let id = |i: usize, j: usize| (i - 1) * s + (j - 1);
    let x = r * s;
    let leg = |i: usize| -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (1..s).map(|j| (id(i, j), id(i, j + 1))).collect();
        e.push((id(i, s), x));
        e
    };
    let mut members = Vec::with_capacity(s);
    for t in 1..=s {
        let mut edges = Vec::new();
        for i in 1..=r {
            let mut e = leg(i);
            if (2..s).contains(&t) {
                e.retain(|&p| p != (id(i, t), id(i, t + 1)));
                e.push((id(i, 1), id(i, t + 1)));
            } else if t == s && s >= 2 {
                e.retain(|&p| p != (id(i, s), x));
                e.push((id(i, 1), x));
            }
            edges.extend(e);
        }
        members.push(Graph::from_edges(format!("T{t}"), universe.clone(), edges)?);
    }
    GraphFamily::new(format!("ratio_{r}_{s}"), members)
}

/// The set `{(i,1) : i < r}`.
pub fn ratio_witness(r: usize, s: usize) -> VertexSet {
    VertexSet::from_ids(r * s + 1, (0..r - 1).map(|i| i * s))
}

/// Two stars `K_{1,r}` with centers `x`, `y` joined by `xy`, and the
/// exchange `+ x1y1 - xy`.
pub fn double_star(r: usize) -> (Graph, EdgeExchange) {
    let labels: Vec<String> = std::iter::once("x".to_string())
        .chain((1..=r).map(|i| format!("x{i}")))
        .chain(std::iter::once("y".to_string()))
        .chain((1..=r).map(|i| format!("y{i}")))
        .collect();
    let universe = Arc::new(VertexUniverse::new(labels).expect("distinct labels"));
    let (x, y) = (0, r + 1);
    let edges = (1..=r)
        .map(|i| (x, i))
        .chain((1..=r).map(|i| (y, y + i)))
        .chain(std::iter::once((x, y)));
    let g = Graph::from_edges("DS", universe, edges).expect("valid double star");
    (g, EdgeExchange::new((1, y + 1), (x, y)))
}

/// `K_r` and `K_{1,r-1}` on the same labels, each with a path of order `d`
/// hanging at `c`. Every family member shares a shortest path of length `d`.
pub fn complete_vs_star_with_path(r: usize, d: usize) -> Result<GraphFamily> {
    let labels: Vec<String> = std::iter::once("c".to_string())
        .chain((1..r).map(|i| format!("k{i}")))
        .chain((1..d).map(|i| if i + 1 == d { "b".to_string() } else { format!("p{i}") }))
        .collect();
    let universe = Arc::new(VertexUniverse::new(labels).expect("distinct labels"));
    let tail: Vec<(usize, usize)> = (0..d - 1).map(|i| (if i == 0 { 0 } else { r - 1 + i }, r + i)).collect();
    let clique = (0..r).flat_map(|a| (a + 1..r).map(move |b| (a, b)));
    let g1 = Graph::from_edges("G1", universe.clone(), clique.chain(tail.iter().copied()))?;
    let star = (1..r).map(|k| (0, k));
    let g2 = Graph::from_edges("G2", universe, star.chain(tail.iter().copied()))?;
    GraphFamily::new(format!("complete_star_{r}_{d}"), vec![g1, g2])
}

/// Stars on `n` vertices centered at the first three labels.
pub fn three_stars(n: usize) -> Result<GraphFamily> {
    let u = VertexUniverse::numbered("v", n);
    let members = (0..3)
        .map(|c| Graph::star(&format!("S{}", c + 1), u.clone(), c))
        .collect::<Result<Vec<_>>>()?;
    GraphFamily::new("three_stars", members)
}

#[derive(Debug, Clone)]
pub struct ExchangeChain {
    pub tree: Graph,
    pub exchanges: Vec<EdgeExchange>,
}

/// `k` copies of a `K_{1,3}` gadget (center `vi`, leaves `vi_1`, `vi_2`,
/// and `u` reached through `xi`, `yi`) glued at `u`, plus a leaf `y` at `u`.
/// Exchange `i` adds `u vi` and drops `xi yi`. With `host` set, `u` also
/// carries the leaf `t`, which keeps it a major vertex when `k = 1`.
pub fn upper_exchange_chain(k: usize, host: bool) -> ExchangeChain {
    let mut labels = vec!["u".to_string(), "y".to_string()];
    if host {
        labels.push("t".to_string());
    }
    for i in 1..=k {
        labels.extend([
            format!("x{i}"),
            format!("y{i}"),
            format!("v{i}"),
            format!("v{i}_1"),
            format!("v{i}_2"),
        ]);
    }
    let universe = Arc::new(VertexUniverse::new(labels).expect("distinct labels"));
    let id = |l: &str| universe.id(l).expect("label");
    let u = id("u");
    let mut edges = vec![(u, id("y"))];
    if host {
        edges.push((u, id("t")));
    }
    let mut exchanges = Vec::with_capacity(k);
    for i in 1..=k {
        let (x, y, v) = (id(&format!("x{i}")), id(&format!("y{i}")), id(&format!("v{i}")));
        edges.extend([(u, x), (x, y), (y, v), (v, id(&format!("v{i}_1"))), (v, id(&format!("v{i}_2")))]);
        exchanges.push(EdgeExchange::new((u, v), (x, y)));
    }
    let tree = Graph::from_edges("T", universe.clone(), edges).expect("valid tree");
    ExchangeChain { tree, exchanges }
}

/// Star `K_{1,2k+1}` at `x` with leaves `u1..u(k+1)`, `y1..yk`, each `yi`
/// carrying leaves `vi`, `zi`, `si`. Exchange `i` adds `ui vi` and drops
/// `x yi`. With `host` set, `x` also carries the leaf `u(k+2)`.
pub fn lower_exchange_chain(k: usize, host: bool) -> ExchangeChain {
    let extra = if host { k + 2 } else { k + 1 };
    let mut labels = vec!["x".to_string()];
    labels.extend((1..=extra).map(|i| format!("u{i}")));
    for i in 1..=k {
        labels.extend([format!("y{i}"), format!("v{i}"), format!("z{i}"), format!("s{i}")]);
    }
    let universe = Arc::new(VertexUniverse::new(labels).expect("distinct labels"));
    let id = |l: &str| universe.id(l).expect("label");
    let x = id("x");
    let mut edges: Vec<(usize, usize)> = (1..=extra).map(|i| (x, id(&format!("u{i}")))).collect();
    let mut exchanges = Vec::with_capacity(k);
    for i in 1..=k {
        let y = id(&format!("y{i}"));
        let v = id(&format!("v{i}"));
        edges.extend([(x, y), (y, v), (y, id(&format!("z{i}"))), (y, id(&format!("s{i}")))]);
        exchanges.push(EdgeExchange::new((id(&format!("u{i}")), v), (x, y)));
    }
    let tree = Graph::from_edges("T", universe.clone(), edges).expect("valid tree");
    ExchangeChain { tree, exchanges }
}
