#![allow(dead_code)]

use graph_inertia::Graph;
use proptest::prelude::*;

/// P_4 on 0-1-2-3.
pub fn p4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

/// P_4 plus a vertex twin to the endpoint 0.
pub fn h1() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1)]).unwrap()
}

/// P_4 plus a vertex joined to both inner vertices.
pub fn h2() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap()
}

/// P_4 as y-x-v-w (0-1-2-3) plus u = 4 with N(u) = {y, v, w}.
pub fn h3() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 2), (4, 3)]).unwrap()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[b] {
                edges.push((i, j));
            }
            b += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graphs on `1..=max_n` vertices with edge probability 1/2.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A graph together with a permutation of its vertices.
pub fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
