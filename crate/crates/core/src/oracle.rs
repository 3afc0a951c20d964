//! Exhaustive ground truth for every optimisation problem, capped at 20
//! vertices, plus independent certificate checkers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::dp::{Certificate, ForcedSets};
use crate::error::{Error, Result};
use crate::graph::{EdgeWeights, Graph, Vertex, VertexWeights, WeightMap};

pub const ORACLE_MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Is,
    Vc,
    Ds,
    Maxcut,
    Chromatic,
}

impl Problem {
    pub const ALL: [Problem; 5] = [Problem::Is, Problem::Vc, Problem::Ds, Problem::Maxcut, Problem::Chromatic];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Is => "is",
            Problem::Vc => "vc",
            Problem::Ds => "ds",
            Problem::Maxcut => "maxcut",
            Problem::Chromatic => "chromatic",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown problem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub problem: Problem,
    pub value: u64,
    pub certificate: Certificate,
    /// Wall time in microseconds; not part of equality-relevant output.
    #[serde(skip)]
    pub elapsed_us: u128,
}

/// Exact optimum by enumeration. `weights` must match the problem: vertex
/// weights for `is`/`vc`, edge weights for `maxcut`; absent means unit.
pub fn oracle(problem: Problem, g: &Graph, weights: Option<&WeightMap>) -> Result<OracleResult> {
    check_size(g)?;
    let start = Instant::now();
    let vertex_w = |g: &Graph| -> Result<VertexWeights> {
        match weights {
            None => Ok(VertexWeights::unit(g.n())),
            Some(WeightMap::Vertex(w)) => {
                w.check(g)?;
                Ok(w.clone())
            }
            Some(WeightMap::Edge(_)) => Err(Error::InvalidArgument(format!("{problem} needs vertex weights"))),
        }
    };
    let (value, certificate) = match problem {
        Problem::Is => {
            let (v, s) = max_weight_is(g, &vertex_w(g)?, &ForcedSets::none())?;
            (v, Certificate::Vertices(s))
        }
        Problem::Vc => {
            let (v, s) = min_weight_vc(g, &vertex_w(g)?, &ForcedSets::none())?;
            (v, Certificate::Vertices(s))
        }
        Problem::Ds => {
            let all: Vec<Vertex> = g.vertices().collect();
            let (v, s) = min_dominating_set(g, &all)?;
            (v, Certificate::Vertices(s))
        }
        Problem::Maxcut => {
            let ew = match weights {
                None => EdgeWeights::unit(),
                Some(WeightMap::Edge(w)) => {
                    w.check(g)?;
                    w.clone()
                }
                Some(WeightMap::Vertex(_)) => return Err(Error::InvalidArgument("maxcut needs edge weights".into())),
            };
            let (v, side) = max_cut(g, &ew)?;
            (v, Certificate::Bipartition(side))
        }
        Problem::Chromatic => {
            let (q, c) = chromatic_number(g)?;
            (q, Certificate::Coloring(c))
        }
    };
    Ok(OracleResult { problem, value, certificate, elapsed_us: start.elapsed().as_micros() })
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > ORACLE_MAX_N {
        Err(Error::TooLarge(format!("oracle supports at most {ORACLE_MAX_N} vertices, got {}", g.n())))
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

fn set_of(mask: u32, n: usize) -> Vec<Vertex> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn forced_masks(forced: &ForcedSets, n: usize) -> Result<(u32, u32)> {
    forced.states(n)?;
    let fold = |s: &[Vertex]| s.iter().fold(0u32, |m, &v| m | (1 << v));
    Ok((fold(&forced.forced_in), fold(&forced.forced_out)))
}

/// Maximum-weight independent set; `None`-free error when forcing is infeasible.
pub fn max_weight_is(g: &Graph, w: &VertexWeights, forced: &ForcedSets) -> Result<(u64, Vec<Vertex>)> {
    check_size(g)?;
    let n = g.n();
    let nb = masks(g);
    let (fin, fout) = forced_masks(forced, n)?;
    let mut best: Option<(u64, u32)> = None;
    for s in 0..(1u32 << n) {
        if s & fin != fin || s & fout != 0 {
            continue;
        }
        if (0..n).any(|v| s >> v & 1 == 1 && nb[v] & s != 0) {
            continue;
        }
        let val: u64 = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| w.get(v)).sum();
        if best.is_none_or(|(b, _)| val > b) {
            best = Some((val, s));
        }
    }
    let (v, s) = best.ok_or_else(|| Error::Infeasible("no independent set respects forcing".into()))?;
    Ok((v, set_of(s, n)))
}

pub fn min_weight_vc(g: &Graph, w: &VertexWeights, forced: &ForcedSets) -> Result<(u64, Vec<Vertex>)> {
    check_size(g)?;
    let n = g.n();
    let (fin, fout) = forced_masks(forced, n)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best: Option<(u64, u32)> = None;
    for s in 0..(1u32 << n) {
        if s & fin != fin || s & fout != 0 {
            continue;
        }
        if edges.iter().any(|&(a, b)| (s >> a | s >> b) & 1 == 0) {
            continue;
        }
        let val: u64 = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| w.get(v)).sum();
        if best.is_none_or(|(b, _)| val < b) {
            best = Some((val, s));
        }
    }
    let (v, s) = best.ok_or_else(|| Error::Infeasible("no vertex cover respects forcing".into()))?;
    Ok((v, set_of(s, n)))
}

pub fn min_dominating_set(g: &Graph, targets: &[Vertex]) -> Result<(u64, Vec<Vertex>)> {
    check_size(g)?;
    let n = g.n();
    let nb = masks(g);
    let want = targets.iter().fold(0u32, |m, &v| m | (1 << v));
    let mut best = (u64::MAX, 0u32);
    for s in 0..(1u32 << n) {
        let size = s.count_ones() as u64;
        if size >= best.0 {
            continue;
        }
        let closed = (0..n).filter(|&v| s >> v & 1 == 1).fold(s, |m, v| m | nb[v]);
        if closed & want == want {
            best = (size, s);
        }
    }
    Ok((best.0, set_of(best.1, n)))
}

pub fn max_cut(g: &Graph, w: &EdgeWeights) -> Result<(u64, Vec<u8>)> {
    check_size(g)?;
    let n = g.n();
    let edges: Vec<(usize, usize, u64)> = g.edges().map(|(a, b)| (a, b, w.get(a, b))).collect();
    let mut best = (0u64, 0u32);
    // vertex 0 stays on side 0
    let half = if n == 0 { 1 } else { 1u32 << (n - 1) };
    for s in 0..half {
        let s = s << 1;
        let val: u64 = edges.iter().filter(|&&(a, b, _)| (s >> a ^ s >> b) & 1 == 1).map(|e| e.2).sum();
        if val > best.0 {
            best = (val, s);
        }
    }
    Ok((best.0, (0..n).map(|v| (best.1 >> v & 1) as u8).collect()))
}

/// Chromatic number by trying `q = 1, 2, ...` with exhaustive backtracking.
pub fn chromatic_number(g: &Graph) -> Result<(u64, Vec<usize>)> {
    check_size(g)?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    for q in 1..=g.n() {
        let mut color = vec![usize::MAX; g.n()];
        if color_from(g, 0, q, &mut color) {
            return Ok((q as u64, color));
        }
    }
    unreachable!("n colors always suffice")
}

fn color_from(g: &Graph, v: usize, q: usize, color: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    // colors above the largest used so far are interchangeable
    let used = color[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..q.min(used + 1) {
        if g.neighbors(v).iter().all(|&u| color[u] != c) {
            color[v] = c;
            if color_from(g, v + 1, q, color) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

/// Certificate checkers, independent of the solvers.
pub mod check {
    use super::*;

    pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
        let mut inside = vec![false; g.n()];
        for &v in set {
            if v >= g.n() {
                return false;
            }
            inside[v] = true;
        }
        g.edges().all(|(u, v)| !(inside[u] && inside[v]))
    }

    pub fn is_vertex_cover(g: &Graph, set: &[Vertex]) -> bool {
        let mut inside = vec![false; g.n()];
        for &v in set {
            if v >= g.n() {
                return false;
            }
            inside[v] = true;
        }
        g.edges().all(|(u, v)| inside[u] || inside[v])
    }

    pub fn dominates(g: &Graph, set: &[Vertex], targets: &[Vertex]) -> bool {
        let mut covered = vec![false; g.n()];
        for &v in set {
            if v >= g.n() {
                return false;
            }
            covered[v] = true;
            for &u in g.neighbors(v) {
                covered[u] = true;
            }
        }
        targets.iter().all(|&t| covered[t])
    }

    pub fn respects(set: &[Vertex], forced: &ForcedSets) -> bool {
        forced.forced_in.iter().all(|v| set.contains(v)) && forced.forced_out.iter().all(|v| !set.contains(v))
    }

    pub fn cut_weight(g: &Graph, w: &EdgeWeights, side: &[u8]) -> u64 {
        g.edges().filter(|&(u, v)| side[u] != side[v]).map(|(u, v)| w.get(u, v)).sum()
    }

    pub fn is_proper_coloring(g: &Graph, color: &[usize]) -> bool {
        color.len() == g.n() && g.edges().all(|(u, v)| color[u] != color[v])
    }

    pub fn colors_used(color: &[usize]) -> usize {
        let mut c = color.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn weight_of(w: &VertexWeights, set: &[Vertex]) -> u64 {
        w.sum_over(set)
    }
}
