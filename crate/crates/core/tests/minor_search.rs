mod common;

use common::{brute_bipartite, graph};
use minorfree::graph::GraphSpec;
use minorfree::minor::{find_minor_model, find_odd_minor_model, has_odd_minor, verify_model, verify_odd_model};
use minorfree::Graph;
use proptest::prelude::*;

/// Tries every labeling of `g`'s vertices with `unused` or a pattern vertex,
/// optionally with a color, and checks the model conditions directly.
fn brute_force(g: &Graph, h: &Graph, odd: bool) -> bool {
    let n = g.n();
    let k = h.n();
    let options = if odd { 2 * k + 1 } else { k + 1 };
    let total = (options as u64).pow(n as u32);
    'labels: for code in 0..total {
        let mut c = code;
        let mut label = vec![usize::MAX; n];
        let mut color = vec![0u8; n];
        for v in 0..n {
            let x = (c % options as u64) as usize;
            c /= options as u64;
            if x > 0 {
                label[v] = (x - 1) % k;
                color[v] = ((x - 1) / k) as u8;
            }
        }
        for a in 0..k {
            let set: Vec<usize> = (0..n).filter(|&v| label[v] == a).collect();
            let Some(&start) = set.first() else { continue 'labels };
            // connectivity, through bichromatic edges when odd
            let mut seen = vec![start];
            let mut i = 0;
            while i < seen.len() {
                let u = seen[i];
                for &w in g.neighbors(u) {
                    if label[w] == a && !seen.contains(&w) && (!odd || color[w] != color[u]) {
                        seen.push(w);
                    }
                }
                i += 1;
            }
            if seen.len() != set.len() {
                continue 'labels;
            }
        }
        let realised = h.edges().all(|(a, b)| {
            g.edges().any(|(x, y)| {
                let pair = (label[x] == a && label[y] == b) || (label[x] == b && label[y] == a);
                pair && (!odd || color[x] == color[y])
            })
        });
        if realised {
            return true;
        }
    }
    false
}

fn patterns() -> Vec<Graph> {
    vec![
        GraphSpec::Complete(2).build(),
        GraphSpec::Path(3).build(),
        GraphSpec::Complete(3).build(),
        GraphSpec::Cycle(4).build(),
        GraphSpec::Star(3).build(),
        Graph::from_edges(3, &[(0, 1)]).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minor_search_matches_brute_force(g in graph(0, 7), which in 0usize..6) {
        let h = &patterns()[which];
        let found = find_minor_model(&g, h).unwrap();
        if let Some(m) = &found {
            prop_assert!(verify_model(&g, h, m).unwrap());
        }
        prop_assert_eq!(found.is_some(), brute_force(&g, h, false));
    }

    #[test]
    fn odd_minor_search_matches_brute_force(g in graph(0, 6), which in 0usize..6) {
        let h = &patterns()[which];
        let found = find_odd_minor_model(&g, h).unwrap();
        if let Some((m, c)) = &found {
            prop_assert!(verify_model(&g, h, m).unwrap());
            let recolored = verify_odd_model(&g, h, m).unwrap();
            prop_assert_eq!(recolored.as_ref(), Some(c));
            for (x, y) in m.tree_edges.iter().flatten() {
                prop_assert_ne!(c.color[x], c.color[y]);
            }
            for (x, y) in m.connectors.values() {
                prop_assert_eq!(c.color[x], c.color[y]);
            }
        }
        prop_assert_eq!(found.is_some(), brute_force(&g, h, true));
    }

    #[test]
    fn odd_triangle_iff_odd_cycle(g in graph(0, 12)) {
        let k3 = GraphSpec::Complete(3).build();
        prop_assert_eq!(has_odd_minor(&g, &k3).unwrap(), !brute_bipartite(&g));
    }
}

#[test]
fn k4_pattern_against_brute_force() {
    let k4 = GraphSpec::Complete(4).build();
    for g in [
        GraphSpec::Grid { rows: 2, cols: 4 }.build(),
        GraphSpec::Grid { rows: 2, cols: 3 }.build(),
        GraphSpec::Cycle(7).build(),
        GraphSpec::Complete(4).build(),
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (5, 3)]).unwrap(),
    ] {
        assert_eq!(find_minor_model(&g, &k4).unwrap().is_some(), brute_force(&g, &k4, false));
    }
}

#[test]
fn prism_has_k4_but_no_odd_k4() {
    let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (5, 3)]).unwrap();
    let k4 = GraphSpec::Complete(4).build();
    assert!(find_minor_model(&prism, &k4).unwrap().is_some());
    assert_eq!(has_odd_minor(&prism, &k4).unwrap(), brute_force(&prism, &k4, true));
}
