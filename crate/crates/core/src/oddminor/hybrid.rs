//! Exact Vertex Cover / Independent Set over a mixed piece decomposition.
//!
//! Every in/out assignment of the boundary is tried. An assignment fixes the
//! boundary vertices, which translates into forcing on the interior of each
//! piece; pieces are then solved independently (bounded-treewidth pieces by
//! tree-decomposition DP, bipartite pieces by minimum cut) and summed. Each
//! boundary vertex is counted once, globally.

use serde::{Deserialize, Serialize};

use super::bipartite::{bip_weighted_is, bip_weighted_vc, sides_of};
use crate::dp::{nice_decompose, solve_wis, solve_wvc, Certificate, DpSolution, DpStats, ForcedSets};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{Graph, Vertex, VertexWeights};
use crate::oracle::Problem;
use crate::treedec::{NiceTreeDecomposition, Strategy};

pub const BOUNDARY_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceKind {
    #[serde(rename = "tw")]
    BoundedTreewidth,
    #[serde(rename = "bip")]
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub vertices: Vec<Vertex>,
    pub kind: PieceKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDecomposition {
    pub pieces: Vec<Piece>,
    pub boundary: Vec<Vertex>,
}

impl PieceDecomposition {
    /// Single-piece decomposition with an empty boundary.
    pub fn single(g: &Graph, kind: PieceKind) -> Self {
        PieceDecomposition {
            pieces: vec![Piece { vertices: g.vertices().collect(), kind }],
            boundary: Vec::new(),
        }
    }

    /// Adds every vertex lying in two or more pieces to the boundary.
    pub fn with_shared_boundary(mut self, n: usize) -> Self {
        let mut count = vec![0usize; n];
        for p in &self.pieces {
            for &v in &p.vertices {
                if v < n {
                    count[v] += 1;
                }
            }
        }
        self.boundary.extend((0..n).filter(|&v| count[v] >= 2));
        self.boundary.sort_unstable();
        self.boundary.dedup();
        self
    }

    pub fn validate(&self, g: &Graph, boundary_cap: usize) -> Result<()> {
        let n = g.n();
        let bad = |m: String| Err(Error::InvalidArgument(format!("piece decomposition: {m}")));
        let mut in_boundary = vec![false; n];
        for &b in &self.boundary {
            g.check_vertex(b)?;
            in_boundary[b] = true;
        }
        let mut boundary: Vec<Vertex> = self.boundary.clone();
        boundary.sort_unstable();
        boundary.dedup();
        if boundary.len() > boundary_cap {
            return Err(Error::BoundaryCap { size: boundary.len(), cap: boundary_cap });
        }
        let mut owners: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, p) in self.pieces.iter().enumerate() {
            for &v in &p.vertices {
                g.check_vertex(v)?;
                if owners[v].last() != Some(&i) {
                    owners[v].push(i);
                }
            }
        }
        for v in g.vertices() {
            if owners[v].is_empty() {
                return bad(format!("vertex {v} is in no piece"));
            }
            if owners[v].len() > 1 && !in_boundary[v] {
                return bad(format!("vertex {v} is shared by pieces but not in the boundary"));
            }
        }
        for (u, v) in g.edges() {
            if !owners[u].iter().any(|p| owners[v].contains(p)) {
                return bad(format!("edge {u} {v} lies in no single piece"));
            }
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if p.kind == PieceKind::Bipartite {
                let interior: Vec<Vertex> = p.vertices.iter().copied().filter(|&v| !in_boundary[v]).collect();
                if !g.induced_subgraph(&interior).0.is_bipartite() {
                    return Err(Error::PieceKindMismatch { piece: i });
                }
            }
        }
        Ok(())
    }
}

/// Piece interior (piece minus boundary) prepared once for all assignments.
struct Prepared {
    graph: Graph,
    map: Vec<Vertex>,
    weights: VertexWeights,
    solver: PieceSolver,
    /// For each interior vertex, its boundary neighbours inside the piece.
    boundary_nbrs: Vec<Vec<usize>>,
}

enum PieceSolver {
    Dp(NiceTreeDecomposition),
    Cut(Vec<u8>),
}

pub fn hybrid_solve(
    g: &Graph,
    pd: &PieceDecomposition,
    problem: Problem,
    weights: &VertexWeights,
    width_cap: usize,
) -> Result<DpSolution> {
    hybrid_solve_with(g, pd, problem, weights, width_cap, Exec::default())
}

pub fn hybrid_solve_with(
    g: &Graph,
    pd: &PieceDecomposition,
    problem: Problem,
    weights: &VertexWeights,
    width_cap: usize,
    exec: Exec,
) -> Result<DpSolution> {
    if !matches!(problem, Problem::Vc | Problem::Is) {
        return Err(Error::InvalidArgument(format!("hybrid solver handles vc and is, not {problem}")));
    }
    weights.check(g)?;
    pd.validate(g, BOUNDARY_CAP)?;
    let mut boundary = pd.boundary.clone();
    boundary.sort_unstable();
    boundary.dedup();
    let mut bpos = vec![usize::MAX; g.n()];
    for (i, &b) in boundary.iter().enumerate() {
        bpos[b] = i;
    }

    let mut prepared = Vec::with_capacity(pd.pieces.len());
    let mut max_width = 0;
    let mut nodes = 0;
    for p in &pd.pieces {
        let interior: Vec<Vertex> = p.vertices.iter().copied().filter(|&v| bpos[v] == usize::MAX).collect();
        let (graph, map) = g.induced_subgraph(&interior);
        let solver = match p.kind {
            PieceKind::BoundedTreewidth => {
                let ntd = nice_decompose(&graph, Strategy::MinFill);
                if ntd.width() > width_cap {
                    return Err(Error::WidthCap { width: ntd.width(), cap: width_cap });
                }
                max_width = max_width.max(ntd.width());
                nodes += ntd.len();
                PieceSolver::Dp(ntd)
            }
            PieceKind::Bipartite => PieceSolver::Cut(sides_of(&graph)?),
        };
        let mut piece_set = p.vertices.clone();
        piece_set.sort_unstable();
        let boundary_nbrs = map
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&u| bpos[u] != usize::MAX && piece_set.binary_search(&u).is_ok())
                    .map(|&u| bpos[u])
                    .collect()
            })
            .collect();
        prepared.push(Prepared { weights: weights.restrict(&map), graph, map, solver, boundary_nbrs });
    }
    let boundary_edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| bpos[u] != usize::MAX && bpos[v] != usize::MAX)
        .map(|(u, v)| (bpos[u], bpos[v]))
        .collect();

    let total: u64 = 1u64 << boundary.len();
    let chunks = 64u64.min(total);
    let ranges: Vec<(u64, u64)> = (0..chunks).map(|c| (c * total / chunks, (c + 1) * total / chunks)).collect();
    let minimize = problem == Problem::Vc;
    let evaluate = |mask: u64| -> Result<Option<(u64, Vec<Vertex>)>> {
        let inside = |b: usize| mask >> b & 1 == 1;
        let feasible = boundary_edges.iter().all(|&(a, b)| match problem {
            Problem::Vc => inside(a) || inside(b),
            _ => !(inside(a) && inside(b)),
        });
        if !feasible {
            return Ok(None);
        }
        let mut chosen: Vec<Vertex> = (0..boundary.len()).filter(|&b| inside(b)).map(|b| boundary[b]).collect();
        let mut value: u64 = chosen.iter().map(|&v| weights.get(v)).sum();
        for piece in &prepared {
            // a boundary vertex outside a cover forces its neighbours in; one
            // inside an independent set forces its neighbours out
            let forced: Vec<usize> = (0..piece.map.len())
                .filter(|&i| {
                    piece.boundary_nbrs[i].iter().any(|&b| if minimize { !inside(b) } else { inside(b) })
                })
                .collect();
            let forced = if minimize { ForcedSets::new(forced, vec![]) } else { ForcedSets::new(vec![], forced) };
            let sol = match (&piece.solver, problem) {
                (PieceSolver::Dp(ntd), Problem::Vc) => solve_wvc(&piece.graph, &piece.weights, ntd, &forced)?,
                (PieceSolver::Dp(ntd), _) => solve_wis(&piece.graph, &piece.weights, ntd, &forced)?,
                (PieceSolver::Cut(s), Problem::Vc) => bip_weighted_vc(&piece.graph, s, &piece.weights, &forced)?,
                (PieceSolver::Cut(s), _) => bip_weighted_is(&piece.graph, s, &piece.weights, &forced)?,
            };
            value += sol.value;
            chosen.extend(sol.certificate.vertices().unwrap_or_default().iter().map(|&i| piece.map[i]));
        }
        chosen.sort_unstable();
        Ok(Some((value, chosen)))
    };
    let better = |a: &(u64, Vec<Vertex>), b: &(u64, Vec<Vertex>)| if minimize { a.0 < b.0 } else { a.0 > b.0 };
    let per_chunk = exec.map(ranges, |(lo, hi)| -> Result<Option<(u64, Vec<Vertex>)>> {
        let mut best: Option<(u64, Vec<Vertex>)> = None;
        for mask in lo..hi {
            if let Some(cand) = evaluate(mask)? {
                if best.as_ref().is_none_or(|b| better(&cand, b)) {
                    best = Some(cand);
                }
            }
        }
        Ok(best)
    });
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    for cand in per_chunk {
        if let Some(cand) = cand? {
            if best.as_ref().is_none_or(|b| better(&cand, b)) {
                best = Some(cand);
            }
        }
    }
    let (value, set) = best.ok_or_else(|| Error::Infeasible("no boundary assignment is feasible".into()))?;
    Ok(DpSolution {
        value,
        certificate: Certificate::Vertices(set),
        stats: DpStats { width: max_width, nodes, table_entries: total },
    })
}
