use super::{decomposition_from_order, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const EXACT_TREEWIDTH_MAX_N: usize = 18;

/// Exact treewidth by dynamic programming over elimination prefixes.
///
/// `tw[S]` is the best width of eliminating `S` first. Eliminating `v` after
/// `S` creates a bag whose size minus one is the number of vertices outside
/// `S + v` reachable from `v` through `S`.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > EXACT_TREEWIDTH_MAX_N {
        return Err(Error::TooLarge(format!(
            "exact treewidth supports at most {EXACT_TREEWIDTH_MAX_N} vertices, got {n}"
        )));
    }
    let nbr: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q_size(&nbr, prev, v) as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    let mut reversed = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let v = (0..n)
            .find(|&v| {
                s & (1 << v) != 0 && {
                    let prev = s & !(1 << v);
                    tw[prev as usize].max(q_size(&nbr, prev, v) as u8) == target
                }
            })
            .expect("some vertex realises the optimum");
        reversed.push(v);
        s &= !(1 << v);
    }
    reversed.reverse();
    let td = decomposition_from_order(g, &reversed);
    let width = tw[full as usize] as usize;
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Number of vertices outside `s + v` reachable from `v` via paths inside `s`.
fn q_size(nbr: &[u32], s: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    while frontier != 0 {
        let mut reach = 0u32;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            reach |= nbr[x];
        }
        frontier = reach & s & !comp;
        comp |= frontier;
    }
    let mut boundary = 0u32;
    let mut c = comp;
    while c != 0 {
        let x = c.trailing_zeros() as usize;
        c &= c - 1;
        boundary |= nbr[x];
    }
    (boundary & !comp & !s).count_ones()
}
