mod common;

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simdim::constructions::{fig3_basis, fig3_graph, fig5_instance};
use simdim::generators::gb::{gen_gb_family, sample_gb_members, verify_gb_properties, GbOptions};
use simdim::generators::random::random_hitting_set_instance;
use simdim::generators::{gb_counting_formulas, gen_antipodal_cycle_family, gen_hsp_reduction, solve_hitting_set};
use simdim::resolution::is_metric_generator;
use simdim::{simultaneous_metric_dimension, Graph, VertexSet, VertexUniverse};

type Edges = Vec<(usize, usize)>;

/// Every labeled graph `G'` on the vertex set of `g` for which some `f`
/// fixing `b` gives `N_{G'}(f(v)) = f(N_G(v))` on the `(D-2)`-ball of `b`.
fn brute_gb(g: &Graph, b: &[usize]) -> BTreeSet<Edges> {
    let n = g.n();
    let d = common::bfs_distances(g).unwrap();
    let diam = common::diameter(&d);
    let core: Vec<usize> = (0..n)
        .filter(|&v| diam >= 2 && b.iter().any(|&x| d[x][v] <= diam - 2))
        .collect();
    let adj = common::adjacency(g);
    let moved: Vec<usize> = (0..n).filter(|v| !b.contains(v)).collect();
    let perms: Vec<Vec<usize>> = moved
        .iter()
        .copied()
        .permutations(moved.len())
        .map(|img| {
            let mut f: Vec<usize> = (0..n).collect();
            for (&from, &to) in moved.iter().zip(&img) {
                f[from] = to;
            }
            f
        })
        .collect();
    let pairs: Edges = (0..n).tuple_combinations().collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let mut nbrs = vec![BTreeSet::new(); n];
        for &(x, y) in &edges {
            nbrs[x].insert(y);
            nbrs[y].insert(x);
        }
        let member = perms.iter().any(|f| {
            core.iter().all(|&v| {
                let image: BTreeSet<usize> = adj[v].iter().map(|&w| f[w]).collect();
                nbrs[f[v]] == image
            })
        });
        if member {
            out.insert(edges);
        }
    }
    out
}

struct Counts {
    total: usize,
    connected: usize,
    paths: usize,
    basis: usize,
}

fn brute_counts(g: &Graph, b: &[usize]) -> Counts {
    let members = brute_gb(g, b);
    let mut c = Counts {
        total: members.len(),
        connected: 0,
        paths: 0,
        basis: 0,
    };
    for edges in &members {
        let h = Graph::from_edges("H", g.universe().clone(), edges.iter().copied()).unwrap();
        let Some(d) = common::bfs_distances(&h) else { continue };
        c.connected += 1;
        let degrees = common::adjacency(&h).iter().map(Vec::len).collect::<Vec<_>>();
        if edges.len() == h.n() - 1 && degrees.iter().all(|&x| x <= 2) {
            c.paths += 1;
        }
        if common::resolves_all(b, &d) && common::brute_dim(&h) == b.len() {
            c.basis += 1;
        }
    }
    c
}

fn library_counts(g: &Graph, b: &VertexSet) -> (u128, u128, u128, u128) {
    let out = gen_gb_family(g, b, &GbOptions::default()).unwrap();
    let c = out.census;
    assert!(c.exact);
    (c.total, c.connected.unwrap(), c.paths.unwrap(), c.basis_holds.unwrap())
}

#[test]
fn figure_three_census_matches_brute_force() {
    let g = fig3_graph();
    let b = fig3_basis();
    let brute = brute_counts(&g, &b.to_vec());
    assert_eq!((brute.connected, brute.paths, brute.basis), (1344, 48, 1296));
    let lib = library_counts(&g, &b);
    assert_eq!(lib, (brute.total as u128, 1344, 48, 1296));
    let formulas = gb_counting_formulas(&g, &b).unwrap();
    assert_eq!(formulas.total, brute.total as u128);
    assert_eq!(formulas.connected, Some(1344));
}

#[test]
fn six_cycle_census_matches_brute_force() {
    let u = VertexUniverse::numbered("v", 6);
    let c6 = Graph::cycle("C6", u, &[0, 1, 2, 3, 4, 5]).unwrap();
    for (basis, connected, paths) in [(vec![0, 1], 48, 24), (vec![0, 2], 24, 0)] {
        let b = VertexSet::from_ids(6, basis.iter().copied());
        let brute = brute_counts(&c6, &basis);
        assert_eq!((brute.connected, brute.paths), (connected, paths));
        let lib = library_counts(&c6, &b);
        assert_eq!(lib.0, brute.total as u128);
        assert_eq!((lib.1, lib.2, lib.3), (connected as u128, paths as u128, brute.basis as u128));
        assert_eq!(gb_counting_formulas(&c6, &b).unwrap().total, brute.total as u128);
    }
}

#[test]
fn six_cycle_members_are_all_generated_by_the_basis() {
    let u = VertexUniverse::numbered("v", 6);
    let c6 = Graph::cycle("C6", u, &[0, 1, 2, 3, 4, 5]).unwrap();
    for basis in [vec![0, 1], vec![0, 2]] {
        let b = VertexSet::from_ids(6, basis);
        let out = gen_gb_family(&c6, &b, &GbOptions::default()).unwrap();
        let samples: Vec<_> = out.members.iter().filter(|m| m.connected).map(|m| (m.f.clone(), m.graph.clone())).collect();
        for m in &samples {
            assert!(is_metric_generator(&b, &m.1).unwrap());
        }
        assert!(verify_gb_properties(&c6, &b, &samples).unwrap().iter().all(|r| r.holds()));
    }
}

#[test]
fn sampled_figure_three_members_are_generated_by_the_basis() {
    let g = fig3_graph();
    let b = fig3_basis();
    let members: HashSet<Edges> = brute_gb(&g, &b.to_vec()).into_iter().collect();
    let drawn = sample_gb_members(&g, &b, 600, 41, true).unwrap();
    assert_eq!(drawn.len(), 600);
    for (_, h) in &drawn {
        assert!(members.contains(&h.edges()));
        let d = common::bfs_distances(h).unwrap();
        assert!(common::resolves_all(&b.to_vec(), &d));
    }
    assert!(verify_gb_properties(&g, &b, &drawn).unwrap().iter().all(|r| r.holds()));
}

#[test]
fn sampling_is_seeded() {
    let g = fig3_graph();
    let b = fig3_basis();
    let a = sample_gb_members(&g, &b, 20, 5, false).unwrap();
    let c = sample_gb_members(&g, &b, 20, 5, false).unwrap();
    assert_eq!(
        a.iter().map(|(f, h)| (f.clone(), h.edges())).collect::<Vec<_>>(),
        c.iter().map(|(f, h)| (f.clone(), h.edges())).collect::<Vec<_>>()
    );
}

#[test]
fn antipodal_pairs_partition_the_complete_graph() {
    for n in [4, 6, 8, 10] {
        let fam = gen_antipodal_cycle_family(n).unwrap().family;
        assert_eq!(fam.len(), n - 1);
        let mut seen = HashSet::new();
        for c in fam.members() {
            assert!(c.is_cycle());
            let d = common::bfs_distances(c).unwrap();
            for (x, y) in (0..n).tuple_combinations() {
                if d[x][y] == n / 2 {
                    assert!(seen.insert((x, y)), "pair {x},{y} repeated");
                }
            }
        }
        assert_eq!(seen.len(), n * (n - 1) / 2);
    }
}

#[test]
fn antipodal_families_need_three_but_subfamilies_two() {
    for n in [4, 6, 8] {
        let fam = gen_antipodal_cycle_family(n).unwrap().family;
        assert_eq!(common::brute_sd(&fam).0, 3);
        for idx in (0..n - 1).combinations(n - 2) {
            assert_eq!(common::brute_sd(&fam.subfamily(&idx).unwrap()).0, 2);
        }
    }
}

fn brute_min_hitting(n: usize, sets: &[Vec<usize>]) -> usize {
    (0..=n)
        .find(|&k| (0..n).combinations(k).any(|s| sets.iter().all(|c| c.iter().any(|x| s.contains(x)))))
        .unwrap()
}

#[test]
fn hitting_set_reduction_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let inst = random_hitting_set_instance(6, 4, &mut rng);
        let h = brute_min_hitting(inst.elements().len(), inst.sets());
        assert_eq!(solve_hitting_set(&inst).size, h);
        let fam = gen_hsp_reduction(&inst).unwrap().family;
        assert!(fam.members().iter().all(Graph::is_tree));
        let sd = simultaneous_metric_dimension(&fam).unwrap().dimension;
        assert_eq!(sd, common::brute_sd(&fam).0);
        for k in 1..=inst.elements().len() {
            let red = gen_hsp_reduction(&inst.with_budget(k).unwrap()).unwrap();
            assert_eq!(red.budget, k + 1);
            assert_eq!(h <= k, sd <= k + 1, "instance {:?} with budget {k}", inst);
        }
    }
}

#[test]
fn figure_five_reduction() {
    let inst = fig5_instance();
    assert_eq!(brute_min_hitting(5, inst.sets()), 2);
    let fam = gen_hsp_reduction(&inst).unwrap().family;
    assert_eq!(common::brute_sd(&fam).0, 3);
}
