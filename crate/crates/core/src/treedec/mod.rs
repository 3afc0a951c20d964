//! Tree decompositions: validation, width/adhesion, elimination-order
//! heuristics, exact treewidth at small scale, and the nice normal form.

mod exact;
mod heuristic;
mod nice;

pub use exact::{exact_treewidth, EXACT_TREEWIDTH_MAX_N};
pub use heuristic::{decomposition_from_order, elimination_order, heuristic_decompose, Strategy};
pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default)]
    pub host_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Tree edges do not form a tree on the bag nodes.
    NotATree(String),
    BagVertexOutOfRange { node: usize, vertex: Vertex },
    VertexUncovered(Vertex),
    EdgeUncovered(Vertex, Vertex),
    /// The bags holding `vertex` split into several subtrees.
    Disconnected { vertex: Vertex, nodes: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree(why) => write!(f, "non-tree: {why}"),
            Violation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} holds out-of-range vertex {vertex}")
            }
            Violation::VertexUncovered(v) => write!(f, "coverage: vertex {v} in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge-coverage: edge {u} {v} uncovered"),
            Violation::Disconnected { vertex, nodes } => {
                write!(f, "connectivity: bags of vertex {vertex} ({nodes:?}) are not connected")
            }
        }
    }
}

impl TreeDecomposition {
    pub fn new(host_n: usize, bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, edges, root: None, host_n }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one (0 for decompositions with only empty bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Largest intersection of the two bags across any tree edge.
    pub fn adhesion(&self) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| intersection_len(&self.bags[a], &self.bags[b]))
            .max()
            .unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        adj
    }

    /// All violated conditions; empty iff `self` is a tree decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.bags.len();
        if k == 0 {
            if g.n() > 0 {
                out.push(Violation::NotATree("no bags".into()));
                out.extend(g.vertices().map(Violation::VertexUncovered));
            }
            return out;
        }
        if let Some(why) = tree_check(k, &self.edges) {
            out.push(Violation::NotATree(why));
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    out.push(Violation::BagVertexOutOfRange { node: i, vertex: v });
                } else {
                    holders[v].push(i);
                }
            }
        }
        for (v, h) in holders.iter().enumerate() {
            if h.is_empty() {
                out.push(Violation::VertexUncovered(v));
            }
        }
        for (u, v) in g.edges() {
            let covered = holders[u]
                .iter()
                .any(|&i| self.bags[i].binary_search(&v).is_ok());
            if !covered {
                out.push(Violation::EdgeUncovered(u, v));
            }
        }
        let adj = self.adjacency();
        let mut mark = vec![usize::MAX; k];
        for (v, h) in holders.iter().enumerate() {
            if h.len() < 2 {
                continue;
            }
            for &i in h {
                mark[i] = v;
            }
            let mut seen = vec![h[0]];
            let mut visited = vec![false; k];
            visited[h[0]] = true;
            let mut idx = 0;
            while idx < seen.len() {
                let x = seen[idx];
                idx += 1;
                for &y in &adj[x] {
                    if !visited[y] && mark[y] == v {
                        visited[y] = true;
                        seen.push(y);
                    }
                }
            }
            if seen.len() != h.len() {
                out.push(Violation::Disconnected { vertex: v, nodes: h.clone() });
            }
        }
        out
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_empty()
    }

    /// Decomposition of a subgraph given its new-to-old vertex map, keeping
    /// the tree shape and translating bags.
    pub fn restrict_to(&self, map: &[Vertex]) -> TreeDecomposition {
        let mut new_id = vec![usize::MAX; self.host_n.max(map.iter().map(|v| v + 1).max().unwrap_or(0))];
        for (i, &v) in map.iter().enumerate() {
            new_id[v] = i;
        }
        let bags = self
            .bags
            .iter()
            .map(|b| b.iter().filter_map(|&v| new_id.get(v).copied().filter(|&x| x != usize::MAX)).collect())
            .collect();
        let mut td = TreeDecomposition::new(map.len(), bags, self.edges.clone());
        td.root = self.root;
        td
    }
}

fn intersection_len(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

fn tree_check(k: usize, edges: &[(usize, usize)]) -> Option<String> {
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= k || b >= k) {
        return Some(format!("tree edge ({a},{b}) names a missing node"));
    }
    if edges.len() + 1 != k {
        return Some(format!("{} tree edges for {k} nodes", edges.len()));
    }
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Some(format!("tree edge ({a},{b}) closes a cycle"));
        }
        parent[ra] = rb;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn p3() -> Graph {
        GraphSpec::Path(3).build()
    }

    #[test]
    fn p3_two_bags_is_valid() {
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert!(td.validate(&p3()).is_empty());
        assert_eq!((td.width(), td.adhesion()), (1, 1));
    }

    #[test]
    fn uncovered_edge_is_reported() {
        let td = TreeDecomposition::new(3, vec![vec![0], vec![1, 2]], vec![(0, 1)]);
        assert_eq!(td.validate(&p3()), vec![Violation::EdgeUncovered(0, 1)]);
    }

    #[test]
    fn separated_bags_break_connectivity() {
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![2], vec![0, 1]], vec![(0, 1), (1, 2)]);
        let v = td.validate(&p3());
        assert!(v.iter().any(|x| matches!(x, Violation::Disconnected { vertex: 0, .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::EdgeUncovered(1, 2))));
    }

    #[test]
    fn non_tree_is_reported() {
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2], vec![1]], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(td.validate(&p3())[0], Violation::NotATree(_)));
    }

    #[test]
    fn width_and_adhesion_examples() {
        let k4 = TreeDecomposition::new(4, vec![vec![0, 1, 2, 3]], vec![]);
        assert!(k4.is_valid(&GraphSpec::Complete(4).build()));
        assert_eq!((k4.width(), k4.adhesion()), (3, 0));
        let two = TreeDecomposition::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]], vec![(0, 1)]);
        assert_eq!(two.adhesion(), 2);
    }
}
