#![allow(dead_code)]

use proptest::prelude::*;
use toughham::graph::{parse_graph6, Graph};

pub const UPTO7: &str = include_str!("../../fixtures/upto7.g6");

/// Every graph with at most 7 vertices, up to isomorphism.
pub fn corpus() -> Vec<Graph> {
    UPTO7.lines().map(|l| parse_graph6(l.as_bytes()).unwrap()).collect()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}
