use super::{check_input, check_total, neighbor_positions, position, stats, Certificate, DpSolution, ForcedSets, Radix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexWeights};
use crate::treedec::{NiceTreeDecomposition, NodeKind};

const NEG: i64 = i64::MIN / 2;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Independent,
    Cover,
}

/// Maximum-weight independent set respecting `forced`.
pub fn solve_wis(
    g: &Graph,
    weights: &VertexWeights,
    ntd: &NiceTreeDecomposition,
    forced: &ForcedSets,
) -> Result<DpSolution> {
    weights.check(g)?;
    let st = forced.states(g.n())?;
    for (u, v) in g.edges() {
        if st[u] == 1 && st[v] == 1 {
            return Err(Error::Infeasible(format!("forced-in vertices {u} and {v} are adjacent")));
        }
    }
    let total = check_total(weights.0.iter().map(|&w| w as u128).sum())?;
    let gain: Vec<i64> = weights.0.iter().map(|&w| w as i64).collect();
    let (best, set, entries) = run(g, ntd, &gain, &st, Mode::Independent)?;
    debug_assert!(best <= total);
    Ok(DpSolution { value: best as u64, certificate: Certificate::Vertices(set), stats: stats(ntd, entries) })
}

/// Minimum-weight vertex cover respecting `forced`.
pub fn solve_wvc(
    g: &Graph,
    weights: &VertexWeights,
    ntd: &NiceTreeDecomposition,
    forced: &ForcedSets,
) -> Result<DpSolution> {
    weights.check(g)?;
    let st = forced.states(g.n())?;
    for (u, v) in g.edges() {
        if st[u] == 2 && st[v] == 2 {
            return Err(Error::Infeasible(format!("edge {u} {v} has both ends forced out")));
        }
    }
    check_total(weights.0.iter().map(|&w| w as u128).sum())?;
    let gain: Vec<i64> = weights.0.iter().map(|&w| -(w as i64)).collect();
    let (best, set, entries) = run(g, ntd, &gain, &st, Mode::Cover)?;
    Ok(DpSolution { value: (-best) as u64, certificate: Certificate::Vertices(set), stats: stats(ntd, entries) })
}

/// Maximises the total gain of a chosen set subject to the per-mode edge rule.
fn run(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    gain: &[i64],
    forced: &[u8],
    mode: Mode,
) -> Result<(i64, Vec<usize>, u64)> {
    check_input(g, ntd, 2)?;
    let radix = Radix::new(2, ntd.width() + 1);
    let mut tables: Vec<Vec<i64>> = Vec::with_capacity(ntd.len());
    let mut entries = 0u64;
    for node in &ntd.nodes {
        let size = radix.size(node.bag.len());
        let mut t = vec![NEG; size];
        match node.kind {
            NodeKind::Leaf => t[0] = 0,
            NodeKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let p = position(&node.bag, v);
                let nb_mask = neighbor_positions(g, &node.bag, v)
                    .into_iter()
                    .fold(0usize, |m, i| m | (1 << i));
                for (s, slot) in t.iter_mut().enumerate() {
                    let c = child[radix.remove(s, p)];
                    if c == NEG {
                        continue;
                    }
                    let inside = radix.digit(s, p) == 1;
                    let ok = match (mode, inside) {
                        (_, true) if forced[v] == 2 => false,
                        (_, false) if forced[v] == 1 => false,
                        (Mode::Independent, true) => s & nb_mask == 0,
                        (Mode::Cover, false) => s & nb_mask == nb_mask,
                        _ => true,
                    };
                    if ok {
                        *slot = if inside { c + gain[v] } else { c };
                    }
                }
            }
            NodeKind::Forget(v) => {
                let child = &tables[node.children[0]];
                let p = position(&ntd.nodes[node.children[0]].bag, v);
                for (s, slot) in t.iter_mut().enumerate() {
                    *slot = child[radix.insert(s, p, 0)].max(child[radix.insert(s, p, 1)]);
                }
            }
            NodeKind::Join => {
                let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                for (s, slot) in t.iter_mut().enumerate() {
                    if l[s] == NEG || r[s] == NEG {
                        continue;
                    }
                    *slot = l[s] + r[s] - bag_gain(&node.bag, s, gain);
                }
            }
        }
        entries += size as u64;
        tables.push(t);
    }
    let best = tables[ntd.root][0];
    if best == NEG {
        return Err(Error::Infeasible("no solution respects the forced sets".into()));
    }
    let mut chosen = vec![false; g.n()];
    let mut stack = vec![(ntd.root, 0usize)];
    while let Some((i, s)) = stack.pop() {
        let node = &ntd.nodes[i];
        match node.kind {
            NodeKind::Leaf => {}
            NodeKind::Introduce(v) => {
                let p = position(&node.bag, v);
                if radix.digit(s, p) == 1 {
                    chosen[v] = true;
                }
                stack.push((node.children[0], radix.remove(s, p)));
            }
            NodeKind::Forget(v) => {
                let c = node.children[0];
                let p = position(&ntd.nodes[c].bag, v);
                let out = radix.insert(s, p, 0);
                let next = if tables[c][out] == tables[i][s] { out } else { radix.insert(s, p, 1) };
                stack.push((c, next));
            }
            NodeKind::Join => {
                stack.push((node.children[1], s));
                stack.push((node.children[0], s));
            }
        }
    }
    let set = chosen.iter().enumerate().filter(|(_, &c)| c).map(|(v, _)| v).collect();
    Ok((best, set, entries))
}

fn bag_gain(bag: &[usize], s: usize, gain: &[i64]) -> i64 {
    bag.iter()
        .enumerate()
        .filter(|(i, _)| s >> i & 1 == 1)
        .map(|(_, &v)| gain[v])
        .sum()
}
