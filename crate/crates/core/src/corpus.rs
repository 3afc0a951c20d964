//! Deterministic test corpus. Every instance records the properties it has
//! by construction.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dp::ForcedSets;
use crate::graph::{EdgeWeights, Graph, GraphSpec, Vertex, VertexWeights};
use crate::oddminor::{Piece, PieceDecomposition, PieceKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Tags {
    pub planar: bool,
    pub bipartite: bool,
    /// Full or randomly thinned grid.
    pub grid: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub id: usize,
    pub name: String,
    pub graph: Graph,
    pub tags: Tags,
    /// Present on two-piece composites.
    pub pieces: Option<PieceDecomposition>,
}

fn sub_seed(seed: u64, salt: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt.wrapping_mul(0xbf58_476d_1ce4_e5b9)
}

/// Joins `a` and `b` by identifying the last `shared` vertices of `a` with
/// the first `shared` vertices of `b`.
fn glue(a: &Graph, b: &Graph, shared: usize) -> (Graph, PieceDecomposition) {
    let offset = a.n() - shared;
    let n = offset + b.n();
    let edges = a.edges().chain(b.edges().map(|(u, v)| (u + offset, v + offset)));
    let g = Graph::from_edges_lossy(n, edges);
    let pd = PieceDecomposition {
        pieces: vec![
            Piece { vertices: (0..a.n()).collect(), kind: PieceKind::BoundedTreewidth },
            Piece { vertices: (offset..n).collect(), kind: PieceKind::Bipartite },
        ],
        boundary: (offset..a.n()).collect(),
    };
    (g, pd)
}

pub fn corpus(seed: u64) -> Vec<Instance> {
    let mut out: Vec<Instance> = Vec::new();
    let mut push = |name: String, graph: Graph, tags: Tags, pieces: Option<PieceDecomposition>| {
        out.push(Instance { id: out.len(), name, graph, tags, pieces });
    };
    let planar_bip = Tags { planar: true, bipartite: true, grid: false };

    for rows in 2..=6 {
        for cols in rows..=6 {
            let g = GraphSpec::Grid { rows, cols }.build();
            push(format!("grid-{rows}x{cols}"), g, Tags { grid: true, ..planar_bip }, None);
        }
    }
    let mut salt = 0;
    for (rows, cols) in [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (6, 6)] {
        for p in [0.6, 0.8] {
            for rep in 0..2 {
                salt += 1;
                let spec = GraphSpec::RandomSubgrid { rows, cols, p, seed: sub_seed(seed, salt) };
                push(format!("subgrid-{rows}x{cols}-p{p}-r{rep}"), spec.build(), Tags { grid: true, ..planar_bip }, None);
            }
        }
    }
    for n in 3..=10 {
        let tags = Tags { planar: true, bipartite: n % 2 == 0, grid: false };
        push(format!("cycle-{n}"), GraphSpec::Cycle(n).build(), tags, None);
    }
    for k in 2..=8 {
        push(format!("star-{k}"), GraphSpec::Star(k).build(), planar_bip, None);
    }
    for n in 1..=6 {
        let tags = Tags { planar: n <= 4, bipartite: n <= 2, grid: false };
        push(format!("complete-{n}"), GraphSpec::Complete(n).build(), tags, None);
    }
    push("petersen".into(), GraphSpec::Petersen.build(), Tags::default(), None);
    for (a, b) in [(2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (5, 6), (6, 6), (7, 7), (8, 8)] {
        for p in [0.3, 0.5] {
            salt += 1;
            let spec = GraphSpec::RandomBipartite { a, b, p, seed: sub_seed(seed, salt) };
            let tags = Tags { bipartite: true, ..Tags::default() };
            push(format!("bipartite-{a}x{b}-p{p}"), spec.build(), tags, None);
        }
    }

    let tw_parts: Vec<(&str, Graph)> = vec![
        ("k4", GraphSpec::Complete(4).build()),
        ("c5", GraphSpec::Cycle(5).build()),
        ("grid3x3", GraphSpec::Grid { rows: 3, cols: 3 }.build()),
        ("petersen", GraphSpec::Petersen.build()),
        ("c7", GraphSpec::Cycle(7).build()),
        ("k5", GraphSpec::Complete(5).build()),
    ];
    for (name, a) in &tw_parts {
        for shared in 1..=3 {
            for p in [0.4, 0.7] {
                salt += 1;
                let budget = 16 - (a.n() - shared);
                let sides = (budget / 2).clamp(2, 5);
                let b = GraphSpec::RandomBipartite { a: sides, b: budget - sides, p, seed: sub_seed(seed, salt) }.build();
                let (g, pd) = glue(a, &b, shared);
                let bipartite = g.is_bipartite();
                push(format!("composite-{name}-s{shared}-p{p}"), g, Tags { bipartite, ..Tags::default() }, Some(pd));
            }
        }
    }
    out
}

/// A graph with weights and forced sets for exercising the DP engines.
#[derive(Debug, Clone, PartialEq)]
pub struct DpInstance {
    pub id: usize,
    pub name: String,
    pub graph: Graph,
    pub weights: VertexWeights,
    pub edge_weights: EdgeWeights,
    pub forced: ForcedSets,
}

/// Variants per graph of [`dp_instances`]: one unit-weight, the rest with
/// random weights and forcing.
pub const DP_VARIANTS: usize = 6;

/// Forced sets where `forced_in` and `forced_out` are both independent, so the
/// instance is feasible for independent set and vertex cover alike.
fn random_forcing(g: &Graph, rng: &mut ChaCha8Rng) -> ForcedSets {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    let mut state = vec![0u8; g.n()];
    for v in order {
        let pick = rng.gen_range(0..10u8);
        let want = match pick {
            0 => 1,
            1 => 2,
            _ => continue,
        };
        if g.neighbors(v).iter().all(|&u| state[u] != want) {
            state[v] = want;
        }
    }
    let pick = |s| g.vertices().filter(|&v| state[v] == s).collect();
    ForcedSets::new(pick(1), pick(2))
}

pub fn dp_instances(seed: u64, max_n: usize) -> Vec<DpInstance> {
    let mut out = Vec::new();
    for inst in corpus(seed).into_iter().filter(|i| i.graph.n() <= max_n) {
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, 1_000_000 + inst.id as u64));
        for variant in 0..DP_VARIANTS {
            let g = &inst.graph;
            let (weights, edge_weights, forced) = if variant == 0 {
                (VertexWeights::unit(g.n()), EdgeWeights::unit(), ForcedSets::none())
            } else {
                let w = VertexWeights((0..g.n()).map(|_| rng.gen_range(0..10)).collect());
                let e = EdgeWeights(g.edges().map(|e| (e, rng.gen_range(0..10))).collect());
                (w, e, random_forcing(g, &mut rng))
            };
            out.push(DpInstance {
                id: out.len(),
                name: format!("{}#{variant}", inst.name),
                graph: g.clone(),
                weights,
                edge_weights,
                forced,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(corpus(1), corpus(1));
        assert_ne!(corpus(1), corpus(2));
        assert_eq!(dp_instances(1, 16), dp_instances(1, 16));
    }

    #[test]
    fn contains_grid_4x4() {
        let c = corpus(1);
        let g = &c.iter().find(|i| i.name == "grid-4x4").unwrap().graph;
        assert_eq!((g.n(), g.m()), (16, 24));
    }

    #[test]
    fn tags_hold() {
        for inst in corpus(1) {
            inst.graph.audit().unwrap();
            if inst.tags.bipartite {
                assert!(inst.graph.is_bipartite(), "{}", inst.name);
            }
            if let Some(pd) = &inst.pieces {
                pd.validate(&inst.graph, 20).unwrap();
                assert!(inst.graph.n() <= 16, "{}", inst.name);
            }
        }
    }

    #[test]
    fn enough_dp_instances() {
        let d = dp_instances(1, 16);
        assert!(d.len() >= 500, "{}", d.len());
        for inst in &d {
            assert!(inst.forced.states(inst.graph.n()).is_ok());
        }
    }
}
