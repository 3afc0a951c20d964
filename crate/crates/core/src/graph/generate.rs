use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;

/// Instance families. Grid vertex `(i, j)` has id `i * cols + j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSpec {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Grid { rows: usize, cols: usize },
    Petersen,
    RandomSubgrid { rows: usize, cols: usize, p: f64, seed: u64 },
    RandomBipartite { a: usize, b: usize, p: f64, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Graph {
        match *self {
            GraphSpec::Empty(n) => Graph::empty(n),
            GraphSpec::Path(n) => Graph::from_edges_lossy(n, (1..n).map(|i| (i - 1, i))),
            GraphSpec::Cycle(n) if n < 3 => GraphSpec::Path(n).build(),
            GraphSpec::Cycle(n) => Graph::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n))),
            GraphSpec::Complete(n) => {
                Graph::from_edges_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            GraphSpec::CompleteBipartite(a, b) => {
                Graph::from_edges_lossy(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            GraphSpec::Star(k) => Graph::from_edges_lossy(k + 1, (1..=k).map(|v| (0, v))),
            GraphSpec::Grid { rows, cols } => {
                Graph::from_edges_lossy(rows * cols, grid_edges(rows, cols))
            }
            GraphSpec::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                Graph::from_edges_lossy(10, outer.chain(spokes).chain(inner))
            }
            GraphSpec::RandomSubgrid { rows, cols, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let p = p.clamp(0.0, 1.0);
                let kept: Vec<_> = grid_edges(rows, cols).filter(|_| rng.gen_bool(p)).collect();
                Graph::from_edges_lossy(rows * cols, kept)
            }
            GraphSpec::RandomBipartite { a, b, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let p = p.clamp(0.0, 1.0);
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in a..a + b {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges_lossy(a + b, edges)
            }
        }
    }
}

fn grid_edges(rows: usize, cols: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..rows).flat_map(move |i| {
        (0..cols).flat_map(move |j| {
            let v = i * cols + j;
            let right = (j + 1 < cols).then_some((v, v + 1));
            let down = (i + 1 < rows).then_some((v, v + cols));
            right.into_iter().chain(down)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let g = GraphSpec::Grid { rows: 2, cols: 2 }.build();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(GraphSpec::CompleteBipartite(2, 3).build().m(), 6);
        let full = GraphSpec::RandomSubgrid { rows: 3, cols: 3, p: 1.0, seed: 7 }.build();
        assert_eq!(full, GraphSpec::Grid { rows: 3, cols: 3 }.build());
        assert_eq!(full.m(), 12);
        let pet = GraphSpec::Petersen.build();
        assert_eq!((pet.n(), pet.m()), (10, 15));
    }

    #[test]
    fn random_families_are_seed_deterministic_and_audited() {
        for seed in 0..20 {
            let s = GraphSpec::RandomSubgrid { rows: 4, cols: 5, p: 0.6, seed };
            let g = s.build();
            assert_eq!(g, s.build());
            g.audit().unwrap();
            let full = GraphSpec::Grid { rows: 4, cols: 5 }.build();
            assert!(g.edges().all(|(u, v)| full.has_edge(u, v)));
            let b = GraphSpec::RandomBipartite { a: 4, b: 5, p: 0.5, seed }.build();
            b.audit().unwrap();
            assert!(b.is_bipartite());
        }
    }
}
