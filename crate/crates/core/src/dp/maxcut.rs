use super::{check_input, check_total, neighbor_positions, position, stats, Certificate, DpSolution, Radix};
use crate::error::Result;
use crate::graph::{EdgeWeights, Graph};
use crate::treedec::{NiceTreeDecomposition, NodeKind};

/// Maximum-weight cut. States are side labels of the bag vertices; an edge is
/// scored when its later endpoint is introduced, and joins subtract the
/// bag-internal edges counted on both sides.
pub fn solve_maxcut(g: &Graph, weights: &EdgeWeights, ntd: &NiceTreeDecomposition) -> Result<DpSolution> {
    check_input(g, ntd, 2)?;
    weights.check(g)?;
    check_total(g.edges().map(|(u, v)| weights.get(u, v) as u128).sum())?;
    let radix = Radix::new(2, ntd.width() + 1);
    let mut tables: Vec<Vec<i64>> = Vec::with_capacity(ntd.len());
    let mut entries = 0u64;
    for node in &ntd.nodes {
        let size = radix.size(node.bag.len());
        let t: Vec<i64> = match node.kind {
            NodeKind::Leaf => vec![0],
            NodeKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let p = position(&node.bag, v);
                let nbs: Vec<(usize, i64)> = neighbor_positions(g, &node.bag, v)
                    .into_iter()
                    .map(|q| (q, weights.get(v, node.bag[q]) as i64))
                    .collect();
                (0..size)
                    .map(|s| {
                        let side = s >> p & 1;
                        let gained: i64 = nbs.iter().filter(|&&(q, _)| s >> q & 1 != side).map(|&(_, w)| w).sum();
                        child[radix.remove(s, p)] + gained
                    })
                    .collect()
            }
            NodeKind::Forget(v) => {
                let child = &tables[node.children[0]];
                let p = position(&ntd.nodes[node.children[0]].bag, v);
                (0..size)
                    .map(|s| child[radix.insert(s, p, 0)].max(child[radix.insert(s, p, 1)]))
                    .collect()
            }
            NodeKind::Join => {
                let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                let internal = internal_edges(g, weights, &node.bag);
                (0..size).map(|s| l[s] + r[s] - cut_in_bag(&internal, s)).collect()
            }
        };
        entries += size as u64;
        tables.push(t);
    }
    let best = tables[ntd.root][0];

    let mut side = vec![0u8; g.n()];
    let mut stack = vec![(ntd.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let node = &ntd.nodes[i];
        match node.kind {
            NodeKind::Leaf => {}
            NodeKind::Introduce(v) => {
                let p = position(&node.bag, v);
                side[v] = (s >> p & 1) as u8;
                stack.push((node.children[0], radix.remove(s, p)));
            }
            NodeKind::Forget(v) => {
                let c = node.children[0];
                let p = position(&ntd.nodes[c].bag, v);
                let zero = radix.insert(s, p, 0);
                let next = if tables[c][zero] == tables[i][s] { zero } else { radix.insert(s, p, 1) };
                stack.push((c, next));
            }
            NodeKind::Join => {
                stack.push((node.children[1], s));
                stack.push((node.children[0], s));
            }
        }
    }
    Ok(DpSolution { value: best as u64, certificate: Certificate::Bipartition(side), stats: stats(ntd, entries) })
}

fn internal_edges(g: &Graph, weights: &EdgeWeights, bag: &[usize]) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for i in 0..bag.len() {
        for j in i + 1..bag.len() {
            if g.has_edge(bag[i], bag[j]) {
                out.push((i, j, weights.get(bag[i], bag[j]) as i64));
            }
        }
    }
    out
}

fn cut_in_bag(internal: &[(usize, usize, i64)], s: usize) -> i64 {
    internal
        .iter()
        .filter(|&&(i, j, _)| (s >> i ^ s >> j) & 1 == 1)
        .map(|&(_, _, w)| w)
        .sum()
}
