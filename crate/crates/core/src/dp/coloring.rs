use super::{check_input, neighbor_positions, position, stats, Certificate, DpSolution, DpStats, Radix};
use crate::error::Result;
use crate::graph::Graph;
use crate::treedec::{NiceTreeDecomposition, NodeKind};

/// Proper `q`-coloring if one exists, with the run's statistics.
pub fn q_coloring(g: &Graph, ntd: &NiceTreeDecomposition, q: usize) -> Result<(Option<Vec<usize>>, DpStats)> {
    check_input(g, ntd, q.max(1) as u64)?;
    if q == 0 {
        return Ok(((g.n() == 0).then(Vec::new), stats(ntd, 0)));
    }
    let radix = Radix::new(q, ntd.width() + 1);
    let mut tables: Vec<Vec<bool>> = Vec::with_capacity(ntd.len());
    let mut entries = 0u64;
    for node in &ntd.nodes {
        let size = radix.size(node.bag.len());
        let t: Vec<bool> = match node.kind {
            NodeKind::Leaf => vec![true],
            NodeKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let p = position(&node.bag, v);
                let nbs = neighbor_positions(g, &node.bag, v);
                (0..size)
                    .map(|s| {
                        let c = radix.digit(s, p);
                        nbs.iter().all(|&x| radix.digit(s, x) != c) && child[radix.remove(s, p)]
                    })
                    .collect()
            }
            NodeKind::Forget(v) => {
                let child = &tables[node.children[0]];
                let p = position(&ntd.nodes[node.children[0]].bag, v);
                (0..size).map(|s| (0..q).any(|c| child[radix.insert(s, p, c)])).collect()
            }
            NodeKind::Join => {
                let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                (0..size).map(|s| l[s] && r[s]).collect()
            }
        };
        entries += size as u64;
        tables.push(t);
    }
    let run_stats = stats(ntd, entries);
    if !tables[ntd.root][0] {
        return Ok((None, run_stats));
    }
    let mut color = vec![0usize; g.n()];
    let mut stack = vec![(ntd.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let node = &ntd.nodes[i];
        match node.kind {
            NodeKind::Leaf => {}
            NodeKind::Introduce(v) => {
                let p = position(&node.bag, v);
                color[v] = radix.digit(s, p);
                stack.push((node.children[0], radix.remove(s, p)));
            }
            NodeKind::Forget(v) => {
                let c = node.children[0];
                let p = position(&ntd.nodes[c].bag, v);
                let next = (0..q)
                    .map(|d| radix.insert(s, p, d))
                    .find(|&x| tables[c][x])
                    .expect("feasible state has a feasible child");
                stack.push((c, next));
            }
            NodeKind::Join => {
                stack.push((node.children[1], s));
                stack.push((node.children[0], s));
            }
        }
    }
    Ok((Some(color), run_stats))
}

/// Chromatic number by trying `q = 1, 2, ..., width + 1`. The reported stats
/// are those of the successful run.
pub fn chromatic_number(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<DpSolution> {
    if g.n() == 0 {
        return Ok(DpSolution { value: 0, certificate: Certificate::Coloring(Vec::new()), stats: stats(ntd, 0) });
    }
    for q in 1..=ntd.width() + 1 {
        if let (Some(color), st) = q_coloring(g, ntd, q)? {
            return Ok(DpSolution { value: q as u64, certificate: Certificate::Coloring(color), stats: st });
        }
    }
    unreachable!("a graph of treewidth w is (w + 1)-colorable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::nice_decompose;
    use crate::graph::GraphSpec;
    use crate::treedec::Strategy;

    fn chi(spec: GraphSpec) -> u64 {
        let g = spec.build();
        let sol = chromatic_number(&g, &nice_decompose(&g, Strategy::MinFill)).unwrap();
        let Certificate::Coloring(c) = &sol.certificate else { panic!() };
        assert!(g.edges().all(|(u, v)| c[u] != c[v]));
        assert!(c.iter().all(|&x| (x as u64) < sol.value));
        sol.value
    }

    #[test]
    fn examples() {
        assert_eq!(chi(GraphSpec::Cycle(6)), 2);
        assert_eq!(chi(GraphSpec::Cycle(5)), 3);
        assert_eq!(chi(GraphSpec::Complete(4)), 4);
        assert_eq!(chi(GraphSpec::Empty(3)), 1);
        assert_eq!(chi(GraphSpec::Empty(0)), 0);
        assert_eq!(chi(GraphSpec::Petersen), 3);
    }
}
