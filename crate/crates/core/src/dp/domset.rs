//! Minimum dominating set of a target set.
//!
//! Digit states per bag vertex: `UNDEC` (no requirement yet), `DOM` (must
//! already be dominated by a chosen vertex of the subtree), `IN` (chosen).
//! Tables are monotone (`UNDEC` never costs more than `DOM`), which lets a
//! join split each `DOM` requirement to exactly one side.

use super::{check_input, neighbor_positions, position, stats, Certificate, DpSolution, Radix};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::treedec::{NiceTreeDecomposition, NodeKind};

const INF: i64 = i64::MAX / 2;
const UNDEC: usize = 0;
const DOM: usize = 1;
const IN: usize = 2;

/// Smallest `S` such that every target is in `S` or adjacent to it.
pub fn solve_ds(g: &Graph, ntd: &NiceTreeDecomposition, targets: &[Vertex]) -> Result<DpSolution> {
    check_input(g, ntd, 3)?;
    let mut is_target = vec![false; g.n()];
    for &t in targets {
        g.check_vertex(t)?;
        is_target[t] = true;
    }
    let radix = Radix::new(3, ntd.width() + 1);
    let mut tables: Vec<Vec<i64>> = Vec::with_capacity(ntd.len());
    let mut entries = 0u64;
    for node in &ntd.nodes {
        let size = radix.size(node.bag.len());
        let mut t = vec![INF; size];
        match node.kind {
            NodeKind::Leaf => t[0] = 0,
            NodeKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let p = position(&node.bag, v);
                let nbs = neighbor_positions(g, &node.bag, v);
                for (s, slot) in t.iter_mut().enumerate() {
                    if let Some((c, cost)) = introduce_child(&radix, s, p, &nbs) {
                        if child[c] < INF {
                            *slot = child[c] + cost;
                        }
                    }
                }
            }
            NodeKind::Forget(v) => {
                let child = &tables[node.children[0]];
                let p = position(&ntd.nodes[node.children[0]].bag, v);
                for (s, slot) in t.iter_mut().enumerate() {
                    *slot = forget_options(is_target[v])
                        .iter()
                        .map(|&d| child[radix.insert(s, p, d)])
                        .min()
                        .unwrap();
                }
            }
            NodeKind::Join => {
                let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                for (s, slot) in t.iter_mut().enumerate() {
                    *slot = join_splits(&radix, s, node.bag.len())
                        .map(|(a, b, ins)| if l[a] >= INF || r[b] >= INF { INF } else { l[a] + r[b] - ins })
                        .min()
                        .unwrap();
                }
            }
        }
        entries += size as u64;
        tables.push(t);
    }
    let best = tables[ntd.root][0];
    debug_assert!(best < INF, "targets are always dominable");

    let mut chosen = vec![false; g.n()];
    let mut stack = vec![(ntd.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let node = &ntd.nodes[i];
        let here = tables[i][s];
        match node.kind {
            NodeKind::Leaf => {}
            NodeKind::Introduce(v) => {
                let p = position(&node.bag, v);
                if radix.digit(s, p) == IN {
                    chosen[v] = true;
                }
                let nbs = neighbor_positions(g, &node.bag, v);
                let (c, _) = introduce_child(&radix, s, p, &nbs).expect("feasible state");
                stack.push((node.children[0], c));
            }
            NodeKind::Forget(v) => {
                let c = node.children[0];
                let p = position(&ntd.nodes[c].bag, v);
                let next = forget_options(is_target[v])
                    .iter()
                    .map(|&d| radix.insert(s, p, d))
                    .find(|&x| tables[c][x] == here)
                    .expect("some option realises the value");
                stack.push((c, next));
            }
            NodeKind::Join => {
                let (lc, rc) = (node.children[0], node.children[1]);
                let (a, b, _) = join_splits(&radix, s, node.bag.len())
                    .find(|&(a, b, ins)| tables[lc][a] + tables[rc][b] - ins == here)
                    .expect("some split realises the value");
                stack.push((rc, b));
                stack.push((lc, a));
            }
        }
    }
    let set: Vec<Vertex> = g.vertices().filter(|&v| chosen[v]).collect();
    Ok(DpSolution { value: best as u64, certificate: Certificate::Vertices(set), stats: stats(ntd, entries) })
}

fn forget_options(target: bool) -> &'static [usize] {
    if target {
        &[DOM, IN]
    } else {
        &[DOM, UNDEC, IN]
    }
}

/// Child state and added cost for introduce-node state `s`, or `None` when
/// `s` is infeasible.
fn introduce_child(radix: &Radix, s: usize, p: usize, nbs: &[usize]) -> Option<(usize, i64)> {
    match radix.digit(s, p) {
        IN => {
            let mut c = s;
            for &q in nbs {
                if radix.digit(s, q) == DOM {
                    c -= radix.pow(q);
                }
            }
            Some((radix.remove(c, p), 1))
        }
        DOM => nbs
            .iter()
            .any(|&q| radix.digit(s, q) == IN)
            .then(|| (radix.remove(s, p), 0)),
        _ => Some((radix.remove(s, p), 0)),
    }
}

/// All `(left, right, |IN|)` state pairs combining into join state `s`: each
/// `DOM` vertex is dominated on exactly one side.
fn join_splits(radix: &Radix, s: usize, len: usize) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
    let dom: Vec<usize> = (0..len).filter(|&p| radix.digit(s, p) == DOM).collect();
    let ins = (0..len).filter(|&p| radix.digit(s, p) == IN).count() as i64;
    (0..1usize << dom.len()).map(move |mask| {
        let (mut a, mut b) = (s, s);
        for (k, &p) in dom.iter().enumerate() {
            if mask >> k & 1 == 1 {
                a -= radix.pow(p);
            } else {
                b -= radix.pow(p);
            }
        }
        (a, b, ins)
    })
}
