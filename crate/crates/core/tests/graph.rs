mod common;

use common::{arb_graph, corpus, UPTO7};
use proptest::prelude::*;
use toughham::graph::*;
use toughham::Rational;

#[test]
fn corpus_shape() {
    let gs = corpus();
    assert_eq!(gs.len(), 1253);
    assert_eq!(gs.iter().filter(|g| g.n() == 7).count(), 1044);
}

#[test]
fn corpus_round_trips_bit_exact() {
    for line in UPTO7.lines() {
        let g = parse_graph6(line.as_bytes()).unwrap();
        assert_eq!(write_graph6(&g), line);
        assert!(g.check_invariants());
    }
}

#[test]
fn random_graphs_round_trip() {
    for i in 0..10_000u64 {
        let n = (i % 64) as usize + 1;
        let p = Rational::new((i % 9 + 1) as i64, 10);
        let g = random_gnp(n, p, i).unwrap();
        let code = write_graph6(&g);
        let back = parse_graph6(code.as_bytes()).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph6(&back), code);
    }
}

#[test]
fn named_graphs() {
    assert_eq!(write_graph6(&complete(3).unwrap()), "Bw");
    let p = petersen();
    assert_eq!((p.n(), p.edge_count()), (10, 15));
    assert!((0..10).all(|v| p.degree(v) == 3));
    assert_eq!(parse_graph6(write_graph6(&p).as_bytes()).unwrap(), p);

    let mut pattern = path(2).unwrap();
    for _ in 0..4 {
        pattern = disjoint_union(&pattern, &path(1).unwrap()).unwrap();
    }
    assert_eq!((pattern.n(), pattern.edge_count()), (6, 1));
    assert_eq!(pattern, toughham::structure::p2kp1_pattern(4).unwrap());

    // K_{2,3} without its 2-side leaves three isolated vertices
    let k23 = complete_bipartite(2, 3).unwrap();
    assert_eq!(k23.components_after_removing(VertexSet::from_iter([0, 1])), 3);
}

#[test]
fn malformed_inputs() {
    for bad in ["", "~", "B", "Bww", "B\u{7f}", "A "] {
        assert!(parse_graph6(bad.as_bytes()).is_err(), "{bad:?}");
    }
    assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    assert!(Graph::new(65).is_err());
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph(0, 64)) {
        let code = write_graph6(&g);
        prop_assert_eq!(parse_graph6(code.as_bytes()).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn surgery_keeps_invariants(g in arb_graph(1, 20), h in arb_graph(0, 20), mask in any::<u64>()) {
        let s = VertexSet::from_mask(mask).intersection(g.vertices());
        prop_assert!(g.check_invariants());
        prop_assert!(g.remove_vertices(s).check_invariants());
        let (sub, labels) = g.induced_subgraph(s);
        prop_assert!(sub.check_invariants());
        prop_assert_eq!(labels.len(), s.len());
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate() {
                prop_assert_eq!(sub.has_edge(i, j), i != j && g.has_edge(a, b));
            }
        }
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert!(u.check_invariants());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn components_partition(g in arb_graph(0, 24)) {
        let parts = g.components();
        let mut seen = VertexSet::EMPTY;
        for &p in &parts {
            prop_assert!(!p.is_empty());
            prop_assert!(seen.is_disjoint(p));
            seen = seen.union(p);
            let (sub, _) = g.induced_subgraph(p);
            prop_assert!(sub.is_connected());
            // nothing leaves the part
            prop_assert!(g.set_neighbors(p).is_subset(p));
        }
        prop_assert_eq!(seen, g.vertices());
    }
}
