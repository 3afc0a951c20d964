//! Dynamic programming over nice tree decompositions.
//!
//! Every engine fills one table per nice node, bottom-up in node index order,
//! keeps all tables, and reconstructs a certificate top-down from the root.
//! Table states encode one digit per bag position (bag sorted ascending).

mod coloring;
mod domset;
mod maxcut;
mod subset;

pub use coloring::{chromatic_number, q_coloring};
pub use domset::solve_ds;
pub use maxcut::solve_maxcut;
pub use subset::{solve_wis, solve_wvc};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::treedec::{heuristic_decompose, make_nice, NiceTreeDecomposition, Strategy};

/// Per-run instrumentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DpStats {
    pub width: usize,
    pub nodes: usize,
    pub table_entries: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    Vertices(Vec<Vertex>),
    /// Side (0 or 1) of every vertex.
    Bipartition(Vec<u8>),
    /// Color of every vertex, `0..value`.
    Coloring(Vec<usize>),
}

impl Certificate {
    pub fn vertices(&self) -> Option<&[Vertex]> {
        match self {
            Certificate::Vertices(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpSolution {
    pub value: u64,
    pub certificate: Certificate,
    pub stats: DpStats,
}

/// Vertices that must (`forced_in`) or must not (`forced_out`) be in the solution.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ForcedSets {
    pub forced_in: Vec<Vertex>,
    pub forced_out: Vec<Vertex>,
}

impl ForcedSets {
    pub fn none() -> Self {
        ForcedSets::default()
    }

    pub fn new(mut forced_in: Vec<Vertex>, mut forced_out: Vec<Vertex>) -> Self {
        forced_in.sort_unstable();
        forced_in.dedup();
        forced_out.sort_unstable();
        forced_out.dedup();
        ForcedSets { forced_in, forced_out }
    }

    pub fn is_empty(&self) -> bool {
        self.forced_in.is_empty() && self.forced_out.is_empty()
    }

    /// Range and disjointness check; returns per-vertex state (0 free, 1 in, 2 out).
    pub(crate) fn states(&self, n: usize) -> Result<Vec<u8>> {
        let mut st = vec![0u8; n];
        for &v in &self.forced_in {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            st[v] = 1;
        }
        for &v in &self.forced_out {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if st[v] == 1 {
                return Err(Error::Infeasible(format!("vertex {v} forced both in and out")));
            }
            st[v] = 2;
        }
        Ok(st)
    }

    /// Restriction to a subgraph with new-to-old map `map`.
    pub fn restrict(&self, map: &[Vertex]) -> ForcedSets {
        let pick = |set: &[Vertex]| {
            map.iter()
                .enumerate()
                .filter(|(_, v)| set.binary_search(v).is_ok())
                .map(|(i, _)| i)
                .collect()
        };
        let sorted = ForcedSets::new(self.forced_in.clone(), self.forced_out.clone());
        ForcedSets { forced_in: pick(&sorted.forced_in), forced_out: pick(&sorted.forced_out) }
    }
}

/// Largest table (entries per node) any engine will allocate.
pub const MAX_TABLE_ENTRIES: u64 = 1 << 26;

/// Heuristic decomposition followed by nice-form conversion.
pub fn nice_decompose(g: &Graph, strategy: Strategy) -> NiceTreeDecomposition {
    let td = heuristic_decompose(g, strategy);
    let root = td.root.unwrap_or(0);
    make_nice(&td, root)
}

pub(crate) fn check_input(g: &Graph, ntd: &NiceTreeDecomposition, base: u64) -> Result<()> {
    if ntd.host_n != g.n() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition is over {} vertices, graph has {}",
            ntd.host_n,
            g.n()
        )));
    }
    if ntd.nodes.iter().flat_map(|x| &x.bag).any(|&v| v >= g.n()) {
        return Err(Error::InvalidDecomposition("bag vertex out of range".into()));
    }
    let width = ntd.width();
    let entries = base.checked_pow(width as u32 + 1).unwrap_or(u64::MAX);
    if entries > MAX_TABLE_ENTRIES {
        return Err(Error::WidthCap { width, cap: max_width_for(base) });
    }
    Ok(())
}

fn max_width_for(base: u64) -> usize {
    let mut w = 0;
    while base.saturating_pow(w as u32 + 2) <= MAX_TABLE_ENTRIES {
        w += 1;
    }
    w
}

/// Weight sums must stay far from the sentinels.
pub(crate) fn check_total(total: u128) -> Result<i64> {
    if total > (i64::MAX / 4) as u128 {
        Err(Error::WeightOverflow)
    } else {
        Ok(total as i64)
    }
}

/// Mixed-radix state arithmetic: digit `p` is the state of bag position `p`.
#[derive(Debug, Clone)]
pub(crate) struct Radix {
    base: usize,
    pow: Vec<usize>,
}

impl Radix {
    pub fn new(base: usize, max_len: usize) -> Self {
        let mut pow = vec![1usize; max_len + 2];
        for i in 1..pow.len() {
            pow[i] = pow[i - 1].saturating_mul(base);
        }
        Radix { base, pow }
    }

    #[inline]
    pub fn size(&self, len: usize) -> usize {
        self.pow[len]
    }

    #[inline]
    pub fn pow(&self, p: usize) -> usize {
        self.pow[p]
    }

    #[inline]
    pub fn digit(&self, s: usize, p: usize) -> usize {
        (s / self.pow[p]) % self.base
    }

    #[inline]
    pub fn remove(&self, s: usize, p: usize) -> usize {
        s % self.pow[p] + (s / self.pow[p + 1]) * self.pow[p]
    }

    #[inline]
    pub fn insert(&self, s: usize, p: usize, d: usize) -> usize {
        s % self.pow[p] + d * self.pow[p] + (s / self.pow[p]) * self.pow[p + 1]
    }
}

pub(crate) fn position(bag: &[Vertex], v: Vertex) -> usize {
    bag.binary_search(&v).expect("vertex in bag")
}

/// Bag positions of the neighbours of `v` inside `bag`.
pub(crate) fn neighbor_positions(g: &Graph, bag: &[Vertex], v: Vertex) -> Vec<usize> {
    bag.iter()
        .enumerate()
        .filter(|&(_, &u)| g.has_edge(u, v))
        .map(|(i, _)| i)
        .collect()
}

pub(crate) fn stats(ntd: &NiceTreeDecomposition, table_entries: u64) -> DpStats {
    DpStats { width: ntd.width(), nodes: ntd.len(), table_entries }
}
