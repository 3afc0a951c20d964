use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::TreeDecomposition;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    MinDegree,
    MinFill,
}

/// Greedy elimination ordering; ties go to the lowest vertex id.
pub fn elimination_order(g: &Graph, strategy: Strategy) -> Vec<Vertex> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let score = match strategy {
                    Strategy::MinDegree => adj[v].len(),
                    Strategy::MinFill => fill_in(&adj, v),
                };
                (score, v)
            })
            .expect("a live vertex remains");
        eliminate(&mut adj, best);
        alive[best] = false;
        order.push(best);
    }
    order
}

fn fill_in(adj: &[BTreeSet<Vertex>], v: Vertex) -> usize {
    let nb: Vec<Vertex> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

fn eliminate(adj: &mut [BTreeSet<Vertex>], v: Vertex) -> Vec<Vertex> {
    let nb: Vec<Vertex> = std::mem::take(&mut adj[v]).into_iter().collect();
    for &a in &nb {
        adj[a].remove(&v);
        for &b in &nb {
            if a != b {
                adj[a].insert(b);
            }
        }
    }
    nb
}

/// Tree decomposition induced by eliminating vertices in `order`: one bag per
/// vertex holding it and its neighbours at elimination time, attached to the
/// bag of the earliest-eliminated such neighbour.
pub fn decomposition_from_order(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n, "elimination order must list every vertex");
    if n == 0 {
        return TreeDecomposition::new(0, vec![Vec::new()], Vec::new());
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let nb = eliminate(&mut adj, v);
        match nb.iter().min_by_key(|&&u| pos[u]) {
            Some(&u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
        let mut bag = nb;
        bag.push(v);
        bags.push(bag);
    }
    // bags of different components share no vertex, so chaining roots is safe
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    let mut td = TreeDecomposition::new(n, bags, edges);
    td.root = roots.last().copied();
    td
}

pub fn heuristic_decompose(g: &Graph, strategy: Strategy) -> TreeDecomposition {
    decomposition_from_order(g, &elimination_order(g, strategy))
}
