//! Simple undirected graphs on dense vertex ids `0..n`.

mod generate;

pub use generate::GraphSpec;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
///
/// Values are immutable once built; every constructor restores the simple-graph
/// invariants (no loops, no parallel edges, symmetric sorted adjacency).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edges may be given in either orientation.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::InvalidArgument(format!(
                    "duplicate edge {} {}",
                    v.min(dup),
                    v.max(dup)
                )));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Like [`Graph::from_edges`] but silently drops loops and parallel edges.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { adj, m: m / 2 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v, self.n()))
        }
    }

    /// Checks every representation invariant. Used on parsed and generated graphs.
    pub fn audit(&self) -> Result<()> {
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            total += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency of {v} not strictly sorted"
                    )));
                }
            }
            for &u in list {
                if u >= self.n() {
                    return Err(Error::VertexOutOfRange(u, self.n()));
                }
                if u == v {
                    return Err(Error::InvalidArgument(format!("self-loop at {v}")));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::InvalidArgument(format!("asymmetric edge {v} {u}")));
                }
            }
        }
        if total != 2 * self.m {
            return Err(Error::InvalidArgument(format!(
                "edge count {} disagrees with adjacency length {total}",
                self.m
            )));
        }
        Ok(())
    }

    /// Subgraph induced by `keep`. The returned map lists the old id of each
    /// new vertex, i.e. `keep` sorted and deduplicated.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &u in &self.adj[v] {
                if new_id[u] != usize::MAX {
                    adj[i].push(new_id[u]);
                    m += 1;
                }
            }
        }
        (Graph { adj, m: m / 2 }, map)
    }

    /// Graph with the listed vertices deleted, plus the new-to-old id map.
    pub fn without(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut drop = vec![false; self.n()];
        for &v in removed {
            drop[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Contracts the edge `uv`. The merged vertex keeps id `min(u, v)`; ids above
    /// `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |x: Vertex| match x.cmp(&hi) {
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => x - 1,
            std::cmp::Ordering::Less => x,
        };
        Ok(Graph::from_edges_lossy(
            self.n() - 1,
            self.edges().map(|(a, b)| (relabel(a), relabel(b))),
        ))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS levels from `roots`, or from the lowest vertex of each component.
    pub fn bfs_layers(&self, roots: Option<&[Vertex]>) -> Result<LevelMap> {
        let n = self.n();
        let mut level = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let roots: Vec<Vertex> = match roots {
            Some(rs) => {
                for &r in rs {
                    self.check_vertex(r)?;
                }
                let mut rs = rs.to_vec();
                rs.sort_unstable();
                rs.dedup();
                rs
            }
            None => self.components().iter().map(|c| c[0]).collect(),
        };
        for &r in &roots {
            level[r] = 0;
            queue.push_back(r);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if let Some(v) = level.iter().position(|&l| l == usize::MAX) {
            return Err(Error::UncoveredComponent(v));
        }
        Ok(LevelMap { level, roots })
    }

    /// Proper 2-coloring, or an odd cycle as a vertex sequence.
    pub fn two_coloring(&self) -> TwoColoring {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in self.vertices() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return TwoColoring::OddCycle(tree_cycle(x, y, &parent, &depth));
                    }
                }
            }
        }
        TwoColoring::Bipartite(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.two_coloring(), TwoColoring::Bipartite(_))
    }
}

// serialized as {n, edges}
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.n(), edges: self.edges().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let r = Repr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

/// Closes the BFS-tree paths from `x` and `y` to their common ancestor.
fn tree_cycle(x: Vertex, y: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Vec<u8>),
    OddCycle(Vec<Vertex>),
}

/// BFS distance of every vertex to its nearest root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelMap {
    pub level: Vec<usize>,
    pub roots: Vec<Vertex>,
}

impl LevelMap {
    pub fn max_level(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// Vertex count per level, indexed by level.
    pub fn populations(&self) -> Vec<usize> {
        let mut pop = vec![0; if self.level.is_empty() { 0 } else { self.max_level() + 1 }];
        for &l in &self.level {
            pop[l] += 1;
        }
        pop
    }
}

/// Non-negative vertex weights, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWeights(pub Vec<u64>);

impl VertexWeights {
    pub fn unit(n: usize) -> Self {
        VertexWeights(vec![1; n])
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0[v]
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "{} vertex weights for {} vertices",
                self.0.len(),
                g.n()
            )));
        }
        Ok(())
    }

    pub fn restrict(&self, map: &[Vertex]) -> VertexWeights {
        VertexWeights(map.iter().map(|&v| self.0[v]).collect())
    }

    pub fn sum_over(&self, set: &[Vertex]) -> u64 {
        set.iter().map(|&v| self.0[v]).sum()
    }
}

/// Non-negative edge weights keyed by `(u, v)` with `u < v`. Missing edges weigh 1.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EdgeWeights(pub BTreeMap<(Vertex, Vertex), u64>);

impl EdgeWeights {
    pub fn unit() -> Self {
        EdgeWeights::default()
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u64 {
        let key = (u.min(v), u.max(v));
        self.0.get(&key).copied().unwrap_or(1)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        for &(u, v) in self.0.keys() {
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }

    /// Weights for the subgraph whose vertex `i` is `map[i]` in this graph.
    pub fn restrict(&self, g: &Graph, map: &[Vertex]) -> EdgeWeights {
        EdgeWeights(g.edges().map(|(a, b)| ((a, b), self.get(map[a], map[b]))).collect())
    }

    pub fn total(&self, g: &Graph) -> u64 {
        g.edges().map(|(u, v)| self.get(u, v)).sum()
    }
}

/// Either kind of weight assignment, as read from a weight file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightMap {
    Vertex(VertexWeights),
    Edge(EdgeWeights),
}

impl WeightMap {
    pub fn check(&self, g: &Graph) -> Result<()> {
        match self {
            WeightMap::Vertex(w) => w.check(g),
            WeightMap::Edge(w) => w.check(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        GraphSpec::Path(n).build()
    }

    #[test]
    fn bfs_path_levels() {
        let lm = path(3).bfs_layers(Some(&[0])).unwrap();
        assert_eq!(lm.level, vec![0, 1, 2]);
    }

    #[test]
    fn bfs_grid_populations() {
        let g = GraphSpec::Grid { rows: 5, cols: 5 }.build();
        let lm = g.bfs_layers(Some(&[0])).unwrap();
        assert_eq!(lm.populations(), vec![1, 2, 3, 4, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn bfs_auto_roots_per_component() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bfs_layers(None).unwrap().level, vec![0, 1, 0, 1]);
    }

    #[test]
    fn bfs_uncovered_component_is_reported() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bfs_layers(Some(&[1])), Err(Error::UncoveredComponent(2)));
    }

    #[test]
    fn contraction_examples() {
        let k3 = GraphSpec::Complete(3).build();
        assert_eq!(k3.contract_edge(1, 2).unwrap(), GraphSpec::Complete(2).build());
        let c4 = GraphSpec::Cycle(4).build();
        let c3 = c4.contract_edge(0, 3).unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        let k2 = GraphSpec::Complete(2).build();
        assert_eq!(k2.contract_edge(0, 1).unwrap(), Graph::empty(1));
        assert_eq!(c4.contract_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn contraction_renumbers() {
        // star centred at 3; contracting 1-3 keeps id 1 and shifts 4 down to 3
        let g = Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3), (3, 4)]).unwrap();
        let h = g.contract_edge(3, 1).unwrap();
        assert_eq!(h.neighbors(1), &[0, 2, 3]);
        h.audit().unwrap();
    }

    #[test]
    fn induced_examples() {
        let c4 = GraphSpec::Cycle(4).build();
        let (p, map) = c4.induced_subgraph(&[2, 0, 1]);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p, path(3));
        let (e, map) = c4.induced_subgraph(&[]);
        assert_eq!((e.n(), map.len()), (0, 0));
        let (k3, _) = GraphSpec::Complete(4).build().induced_subgraph(&[0, 2, 3]);
        assert_eq!(k3, GraphSpec::Complete(3).build());
    }

    #[test]
    fn two_coloring_examples() {
        assert!(GraphSpec::Cycle(4).build().is_bipartite());
        match GraphSpec::Cycle(5).build().two_coloring() {
            TwoColoring::OddCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("expected odd cycle, got {other:?}"),
        }
        assert_eq!(Graph::empty(3).two_coloring(), TwoColoring::Bipartite(vec![0, 0, 0]));
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 5)],
        )
        .unwrap();
        let TwoColoring::OddCycle(c) = g.two_coloring() else { panic!() };
        assert_eq!(c.len() % 2, 1);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), c.len());
    }

    #[test]
    fn from_edges_rejects_duplicates_and_loops() {
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
    }
}
