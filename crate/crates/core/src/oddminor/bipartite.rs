use super::flow::FlowNetwork;
use crate::dp::{Certificate, DpSolution, DpStats, ForcedSets};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring, Vertex, VertexWeights};

/// Side label (0 = left, 1 = right) of every vertex.
pub type Sides = [u8];

pub fn check_sides(g: &Graph, sides: &Sides) -> Result<()> {
    if sides.len() != g.n() {
        return Err(Error::InvalidBipartition(format!("{} labels for {} vertices", sides.len(), g.n())));
    }
    if let Some(v) = sides.iter().position(|&s| s > 1) {
        return Err(Error::InvalidBipartition(format!("vertex {v} has side {}", sides[v])));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| sides[u] == sides[v]) {
        return Err(Error::InvalidBipartition(format!("edge {u} {v} does not cross")));
    }
    Ok(())
}

/// Sides from a BFS 2-coloring, or an error naming an odd cycle.
pub fn sides_of(g: &Graph) -> Result<Vec<u8>> {
    match g.two_coloring() {
        TwoColoring::Bipartite(c) => Ok(c),
        TwoColoring::OddCycle(c) => Err(Error::InvalidBipartition(format!("odd cycle {c:?}"))),
    }
}

/// Maximum-cardinality matching, edges reported as `(left, right)`.
pub fn max_bipartite_matching(g: &Graph, sides: &Sides) -> Result<Vec<(Vertex, Vertex)>> {
    check_sides(g, sides)?;
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    let mut cross = Vec::new();
    for v in g.vertices() {
        if sides[v] == 0 {
            net.add_arc(s, v, 1);
            for &u in g.neighbors(v) {
                cross.push((net.add_arc(v, u, 1), v, u));
            }
        } else {
            net.add_arc(v, t, 1);
        }
    }
    net.max_flow(s, t);
    Ok(cross.into_iter().filter(|&(a, _, _)| net.flow_on(a) == 1).map(|(_, l, r)| (l, r)).collect())
}

/// Minimum-weight vertex cover of a bipartite graph by minimum cut.
///
/// Source arcs carry left weights, sink arcs right weights, edges are
/// uncuttable. A forced-out vertex gets an uncuttable terminal arc (so its
/// neighbours are pushed into the cover); a forced-in vertex gets a free one
/// and is added to the cover afterwards.
pub fn bip_weighted_vc(g: &Graph, sides: &Sides, weights: &VertexWeights, forced: &ForcedSets) -> Result<DpSolution> {
    check_sides(g, sides)?;
    weights.check(g)?;
    let st = forced.states(g.n())?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| st[u] == 2 && st[v] == 2) {
        return Err(Error::Infeasible(format!("edge {u} {v} has both ends forced out")));
    }
    let total: u128 = weights.0.iter().map(|&w| w as u128).sum();
    if total >= (u64::MAX / 4) as u128 {
        return Err(Error::WeightOverflow);
    }
    let inf = total as u64 + 1;
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in g.vertices() {
        let cap = match st[v] {
            1 => 0,
            2 => inf,
            _ => weights.get(v),
        };
        if sides[v] == 0 {
            net.add_arc(s, v, cap);
            for &u in g.neighbors(v) {
                net.add_arc(v, u, inf);
            }
        } else {
            net.add_arc(v, t, cap);
        }
    }
    let cut = net.min_cut(s, t);
    debug_assert!(cut.value < inf);
    let cover: Vec<Vertex> = g
        .vertices()
        .filter(|&v| st[v] == 1 || (sides[v] == 0) != cut.source_side[v])
        .collect();
    let value = weights.sum_over(&cover);
    debug_assert_eq!(value, cut.value + forced.forced_in.iter().map(|&v| weights.get(v)).sum::<u64>());
    Ok(DpSolution { value, certificate: Certificate::Vertices(cover), stats: DpStats::default() })
}

/// Maximum-weight independent set as the complement of a minimum cover.
pub fn bip_weighted_is(g: &Graph, sides: &Sides, weights: &VertexWeights, forced: &ForcedSets) -> Result<DpSolution> {
    let swapped = ForcedSets::new(forced.forced_out.clone(), forced.forced_in.clone());
    let vc = bip_weighted_vc(g, sides, weights, &swapped).map_err(|e| match e {
        Error::Infeasible(_) => Error::Infeasible("forced-in vertices are adjacent".into()),
        other => other,
    })?;
    let cover = vc.certificate.vertices().unwrap_or_default();
    let mut in_cover = vec![false; g.n()];
    for &v in cover {
        in_cover[v] = true;
    }
    let set: Vec<Vertex> = g.vertices().filter(|&v| !in_cover[v]).collect();
    let value = weights.sum_over(&set);
    Ok(DpSolution { value, certificate: Certificate::Vertices(set), stats: DpStats::default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn sides(g: &Graph) -> Vec<u8> {
        sides_of(g).unwrap()
    }

    #[test]
    fn matching_examples() {
        let c4 = GraphSpec::Cycle(4).build();
        assert_eq!(max_bipartite_matching(&c4, &sides(&c4)).unwrap().len(), 2);
        let star = GraphSpec::Star(4).build();
        assert_eq!(max_bipartite_matching(&star, &sides(&star)).unwrap().len(), 1);
        let grid = GraphSpec::Grid { rows: 3, cols: 3 }.build();
        let checker: Vec<u8> = (0..9).map(|v| ((v / 3 + v % 3) % 2) as u8).collect();
        let m = max_bipartite_matching(&grid, &checker).unwrap();
        assert_eq!(m.len(), 4);
        let mut ends: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        ends.dedup();
        assert_eq!(ends.len(), 8);
        assert!(m.iter().all(|&(a, b)| grid.has_edge(a, b)));
    }

    #[test]
    fn invalid_bipartition_is_rejected() {
        let c4 = GraphSpec::Cycle(4).build();
        assert!(matches!(max_bipartite_matching(&c4, &[0, 0, 1, 1]), Err(Error::InvalidBipartition(_))));
    }

    #[test]
    fn weighted_vc_examples() {
        let k2 = GraphSpec::Complete(2).build();
        assert_eq!(bip_weighted_vc(&k2, &[0, 1], &VertexWeights::unit(2), &ForcedSets::none()).unwrap().value, 1);
        let p3 = GraphSpec::Path(3).build();
        let sol = bip_weighted_vc(&p3, &[0, 1, 0], &VertexWeights(vec![1, 5, 1]), &ForcedSets::none()).unwrap();
        assert_eq!((sol.value, sol.certificate), (2, Certificate::Vertices(vec![0, 2])));
        let c4 = GraphSpec::Cycle(4).build();
        assert_eq!(bip_weighted_vc(&c4, &sides(&c4), &VertexWeights::unit(4), &ForcedSets::none()).unwrap().value, 2);
    }

    #[test]
    fn weighted_is_examples() {
        let k2 = GraphSpec::Complete(2).build();
        assert_eq!(bip_weighted_is(&k2, &[0, 1], &VertexWeights(vec![3, 4]), &ForcedSets::none()).unwrap().value, 4);
        let c4 = GraphSpec::Cycle(4).build();
        assert_eq!(bip_weighted_is(&c4, &sides(&c4), &VertexWeights::unit(4), &ForcedSets::none()).unwrap().value, 2);
        let e3 = Graph::empty(3);
        assert_eq!(bip_weighted_is(&e3, &[0, 0, 0], &VertexWeights(vec![1, 2, 3]), &ForcedSets::none()).unwrap().value, 6);
    }

    #[test]
    fn forcing() {
        let p3 = GraphSpec::Path(3).build();
        let w = VertexWeights(vec![1, 5, 1]);
        let sol = bip_weighted_vc(&p3, &[0, 1, 0], &w, &ForcedSets::new(vec![1], vec![])).unwrap();
        assert_eq!((sol.value, sol.certificate), (5, Certificate::Vertices(vec![1])));
        let sol = bip_weighted_vc(&p3, &[0, 1, 0], &w, &ForcedSets::new(vec![], vec![0])).unwrap();
        assert_eq!(sol.value, 5);
        assert!(bip_weighted_vc(&p3, &[0, 1, 0], &w, &ForcedSets::new(vec![], vec![0, 1])).is_err());
        let sol = bip_weighted_is(&p3, &[0, 1, 0], &w, &ForcedSets::new(vec![0], vec![])).unwrap();
        assert_eq!(sol.value, 2);
        assert!(bip_weighted_is(&p3, &[0, 1, 0], &w, &ForcedSets::new(vec![0, 1], vec![])).is_err());
    }
}
