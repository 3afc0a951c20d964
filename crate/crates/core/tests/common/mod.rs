#![allow(dead_code)]

use minorfree::Graph;
use proptest::prelude::*;

/// Random simple graph on `lo..=hi` vertices.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs), 0u8..4)
    })
    .prop_map(|(n, bits, sparsity)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                // bias toward sparse graphs: keep roughly half, a third, ...
                if bits[i] && (i as u8).wrapping_add(sparsity).is_multiple_of(sparsity + 1) {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Exhaustive bipartiteness by trying every 2-coloring.
pub fn brute_bipartite(g: &Graph) -> bool {
    (0u32..1 << g.n()).any(|c| g.edges().all(|(u, v)| (c >> u & 1) != (c >> v & 1)))
}
