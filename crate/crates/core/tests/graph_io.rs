mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simdim::constructions::{
    complete_vs_star_with_path, double_star, fig1_family, fig2_family, fig3_graph, fig3_subfamily, fig4_family,
    fig5_instance, ratio_family, three_stars,
};
use simdim::generators::random::random_connected_graph;
use simdim::{parse_family, parse_hitting_set, serialize_family, serialize_hitting_set, Graph, GraphFamily, VertexUniverse};

fn same_family(a: &GraphFamily, b: &GraphFamily) {
    assert_eq!(a.name(), b.name());
    assert_eq!(a.universe().labels(), b.universe().labels());
    assert_eq!(a.len(), b.len());
    for (x, y) in a.members().iter().zip(b.members()) {
        assert_eq!(x.name(), y.name());
        assert_eq!(x.edges(), y.edges());
    }
}

#[test]
fn triangle_inequality_up_to_twenty() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=20 {
        let u = VertexUniverse::numbered("v", n);
        for p in [0.0, 0.1, 0.4] {
            let g = random_connected_graph("G", &u, p, &mut rng).unwrap();
            let d = g.distances().unwrap();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        assert!(d.get(x, y) <= d.get(x, z) + d.get(z, y));
                    }
                }
            }
        }
    }
}

#[test]
fn distances_agree_with_plain_bfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=15 {
        let u = VertexUniverse::numbered("v", n);
        let g = random_connected_graph("G", &u, 0.15, &mut rng).unwrap();
        let d = g.distances().unwrap();
        let reference = common::bfs_distances(&g).unwrap();
        for (x, row) in reference.iter().enumerate() {
            for (y, &want) in row.iter().enumerate() {
                assert_eq!(d.get(x, y) as usize, want);
            }
        }
        assert_eq!(d.diameter() as usize, common::diameter(&reference));
    }
}

#[test]
fn path_and_cycle_diameters() {
    for n in 3..=12 {
        let order: Vec<usize> = (0..n).collect();
        let u = VertexUniverse::numbered("v", n);
        let p = Graph::path("P", u.clone(), &order).unwrap();
        let c = Graph::cycle("C", u, &order).unwrap();
        assert_eq!(p.distances().unwrap().diameter() as usize, n - 1);
        assert_eq!(c.distances().unwrap().diameter() as usize, n / 2);
    }
}

#[test]
fn disconnected_graphs_parse_but_have_no_metric() {
    let fam = common::fixture_family("disconnected.fam");
    assert!(!fam.members()[0].is_connected());
    assert!(fam.members()[0].distances().is_err());
    assert!(simdim::metric_dimension(&fam.members()[0]).is_err());
}

#[test]
fn fixtures_match_constructions() {
    let mut fig3 = GraphFamily::singleton(fig3_graph());
    fig3 = GraphFamily::new("fig3", fig3.members().to_vec()).unwrap();
    let fixtures: Vec<(&str, GraphFamily)> = vec![
        ("fig1.fam", fig1_family()),
        ("fig2.fam", fig2_family()),
        ("fig3.fam", fig3),
        ("fig3_gf.fam", fig3_subfamily()),
        ("fig4.fam", fig4_family()),
        ("ratio_3_3.fam", ratio_family(3, 3).unwrap()),
        ("complete_star_4_3.fam", complete_vs_star_with_path(4, 3).unwrap()),
        ("three_stars.fam", three_stars(5).unwrap()),
    ];
    for (file, built) in fixtures {
        let parsed = common::fixture_family(file);
        assert_eq!(parsed.universe().labels(), built.universe().labels(), "{file}");
        assert_eq!(parsed.len(), built.len(), "{file}");
        for (x, y) in parsed.members().iter().zip(built.members()) {
            assert_eq!(x.edges(), y.edges(), "{file}");
        }
    }
    let (ds, _) = double_star(3);
    assert_eq!(common::fixture_family("doublestar.fam").members()[0].edges(), ds.edges());
    let hsp = parse_hitting_set(&common::fixture("fig5.hsp")).unwrap();
    assert_eq!(hsp, fig5_instance());
}

#[test]
fn fixture_round_trips() {
    for file in [
        "fig1.fam",
        "fig2.fam",
        "fig3.fam",
        "fig3_gf.fam",
        "fig4.fam",
        "k5.fam",
        "doublestar.fam",
        "ratio_3_3.fam",
        "complete_star_4_3.fam",
        "three_stars.fam",
        "disconnected.fam",
    ] {
        let fam = common::fixture_family(file);
        same_family(&fam, &parse_family(&serialize_family(&fam)).unwrap());
    }
    let inst = fig5_instance();
    assert_eq!(parse_hitting_set(&serialize_hitting_set(&inst)).unwrap(), inst);
}

fn arb_family() -> impl Strategy<Value = GraphFamily> {
    (1usize..12, 1usize..4).prop_flat_map(|(n, k)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), pairs), k).prop_map(move |masks| {
            let u: Arc<VertexUniverse> = VertexUniverse::numbered("v", n);
            let all: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
            let members = masks
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    // The file format has no edgeless blocks beyond one vertex.
                    let mut m = m.clone();
                    if !m.is_empty() && !m.contains(&true) {
                        m[0] = true;
                    }
                    let edges = all.iter().zip(&m).filter(|(_, &keep)| keep).map(|(&e, _)| e);
                    Graph::from_edges(format!("G{}", i + 1), u.clone(), edges).unwrap()
                })
                .collect();
            GraphFamily::new("arb", members).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(fam in arb_family()) {
        let back = parse_family(&serialize_family(&fam)).unwrap();
        prop_assert_eq!(back.universe().labels(), fam.universe().labels());
        for (x, y) in back.members().iter().zip(fam.members()) {
            prop_assert_eq!(x.name(), y.name());
            prop_assert_eq!(x.edges(), y.edges());
        }
    }
}
