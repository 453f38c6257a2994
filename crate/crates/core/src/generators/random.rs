//! Seeded random inputs for property checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::generators::hsp::HittingSetInstance;
use crate::graph::{Graph, GraphFamily, VertexUniverse};
use crate::trees::{tree_path, EdgeExchange};

/// Uniform labeled tree on `0..n` via a random Prüfer sequence.
pub fn random_tree_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn random_tree<R: Rng>(name: &str, universe: &Arc<VertexUniverse>, rng: &mut R) -> Result<Graph> {
    Graph::from_edges(name, universe.clone(), random_tree_edges(universe.len(), rng))
}

/// Random spanning tree plus every other pair independently with
/// probability `p`; always connected.
pub fn random_connected_graph<R: Rng>(name: &str, universe: &Arc<VertexUniverse>, p: f64, rng: &mut R) -> Result<Graph> {
    let n = universe.len();
    let mut edges = random_tree_edges(n, rng);
    for x in 0..n {
        for y in x + 1..n {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(name, universe.clone(), edges)
}

pub fn random_family<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<GraphFamily> {
    let universe = VertexUniverse::numbered("v", n);
    let members = (1..=k)
        .map(|i| random_connected_graph(&format!("G{i}"), &universe, p, rng))
        .collect::<Result<Vec<_>>>()?;
    GraphFamily::new("random", members)
}

/// Uniform non-edge `e` of tree `t`, then a uniform edge on the cycle `e`
/// closes. `None` when `t` is complete.
pub fn random_exchange<R: Rng>(t: &Graph, rng: &mut R) -> Option<EdgeExchange> {
    let n = t.n();
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !t.has_edge(x, y))
        .collect();
    let &(u, v) = non_edges.choose(rng)?;
    let path = tree_path(t, u, v);
    let i = rng.gen_range(0..path.len() - 1);
    Some(EdgeExchange::new((u, v), (path[i], path[i + 1])))
}

/// Random instance with `1..=max_elements` elements, `1..=max_sets`
/// non-empty sets and a uniform budget.
pub fn random_hitting_set_instance<R: Rng>(max_elements: usize, max_sets: usize, rng: &mut R) -> HittingSetInstance {
    let n = rng.gen_range(1..=max_elements);
    let k = rng.gen_range(1..=max_sets);
    let elements: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let sets: Vec<Vec<String>> = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            let mut pool = elements.clone();
            pool.shuffle(rng);
            pool.truncate(size);
            pool.sort_by_key(|l| elements.iter().position(|e| e == l));
            pool
        })
        .collect();
    let budget = rng.gen_range(1..=n);
    HittingSetInstance::new(elements, sets, budget).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::apply_exchange;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prufer_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..20 {
            let u = VertexUniverse::numbered("v", n);
            let t = random_tree("T", &u, &mut rng).unwrap();
            assert!(t.is_tree());
        }
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let fam = random_family(9, 3, 0.2, &mut rng).unwrap();
        assert!(fam.members().iter().all(Graph::is_connected));
    }

    #[test]
    fn exchanges_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = VertexUniverse::numbered("v", 10);
        for _ in 0..50 {
            let t = random_tree("T", &u, &mut rng).unwrap();
            let ex = random_exchange(&t, &mut rng).unwrap();
            assert!(apply_exchange(&t, &ex).unwrap().is_tree());
        }
        let k2 = Graph::path("P", VertexUniverse::numbered("v", 2), &[0, 1]).unwrap();
        assert!(random_exchange(&k2, &mut rng).is_none());
    }

    #[test]
    fn instances_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let inst = random_hitting_set_instance(6, 4, &mut rng);
            assert!(inst.sets().len() <= 4 && inst.elements().len() <= 6);
        }
    }
}
