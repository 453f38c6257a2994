//! Brute-force reference implementations shared by the integration tests.
//! Deliberately independent of the library: plain adjacency lists, BFS and
//! subset enumeration.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use itertools::Itertools;
use simdim::{parse_family, Graph, GraphFamily};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture_family(name: &str) -> GraphFamily {
    parse_family(&fixture(name)).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// All-pairs hop distances; `None` when disconnected.
pub fn bfs_distances(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist.contains(&usize::MAX) {
            return None;
        }
        out.push(dist);
    }
    Some(out)
}

pub fn resolves_all(s: &[usize], d: &[Vec<usize>]) -> bool {
    let n = d.len();
    let mut seen = std::collections::HashSet::with_capacity(n);
    (0..n).all(|v| seen.insert(s.iter().map(|&x| d[x][v]).collect::<Vec<_>>()))
}

/// Smallest `S` that resolves every member, with the lex-least such `S`.
pub fn brute_sd(fam: &GraphFamily) -> (usize, Vec<usize>) {
    let ds: Vec<_> = fam.members().iter().map(|g| bfs_distances(g).expect("connected")).collect();
    let n = fam.n();
    if n <= 1 {
        return (0, Vec::new());
    }
    for k in 1..=n {
        if let Some(s) = (0..n).combinations(k).find(|s| ds.iter().all(|d| resolves_all(s, d))) {
            return (k, s);
        }
    }
    unreachable!("V resolves every graph")
}

pub fn brute_dim(g: &Graph) -> usize {
    brute_sd(&GraphFamily::singleton(g.clone())).0
}

pub fn diameter(d: &[Vec<usize>]) -> usize {
    d.iter().flatten().copied().max().unwrap_or(0)
}
