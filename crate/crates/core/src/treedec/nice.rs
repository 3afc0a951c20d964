use serde::{Deserialize, Serialize};

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// Rooted decomposition in nice form. Children always precede their parent,
/// so iterating `nodes` in index order is a valid bottom-up schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    pub host_n: usize,
}

impl NiceTreeDecomposition {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Plain view for [`TreeDecomposition::validate`].
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i)))
            .collect();
        let mut td = TreeDecomposition::new(
            self.host_n,
            self.nodes.iter().map(|x| x.bag.clone()).collect(),
            edges,
        );
        td.root = Some(self.root);
        td
    }

    /// Checks the node-kind bag relations, child ordering and empty root bag.
    pub fn check_shape(&self) -> Result<()> {
        let bad = |i: usize, why: &str| Err(Error::InvalidDecomposition(format!("node {i}: {why}")));
        if self.nodes.is_empty() || self.root != self.nodes.len() - 1 {
            return bad(self.root, "root must be the last node");
        }
        if !self.nodes[self.root].bag.is_empty() {
            return bad(self.root, "root bag must be empty");
        }
        for (i, x) in self.nodes.iter().enumerate() {
            if x.children.iter().any(|&c| c >= i) {
                return bad(i, "child does not precede parent");
            }
            let child_bag = |k: usize| &self.nodes[x.children[k]].bag;
            let ok = match x.kind {
                NodeKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    x.children.len() == 1
                        && child_bag(0).binary_search(&v).is_err()
                        && with(child_bag(0), v) == x.bag
                }
                NodeKind::Forget(v) => {
                    x.children.len() == 1
                        && x.bag.binary_search(&v).is_err()
                        && with(&x.bag, v) == *child_bag(0)
                }
                NodeKind::Join => {
                    x.children.len() == 2 && *child_bag(0) == x.bag && *child_bag(1) == x.bag
                }
            };
            if !ok {
                return bad(i, "bag relation violated");
            }
        }
        Ok(())
    }
}

fn with(bag: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut b = bag.to_vec();
    let at = b.binary_search(&v).unwrap_or_else(|e| e);
    b.insert(at, v);
    b
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forgets then introduces (both in sorted order) to move from the bag of
    /// `top` to `target`.
    fn morph(&mut self, mut top: usize, target: &[Vertex]) -> usize {
        let current = self.nodes[top].bag.clone();
        let mut bag = current.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            bag.retain(|&x| x != v);
            top = self.push(NodeKind::Forget(v), bag.clone(), vec![top]);
        }
        for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
            bag = with(&bag, v);
            top = self.push(NodeKind::Introduce(v), bag.clone(), vec![top]);
        }
        top
    }
}

/// Converts a valid decomposition into nice form rooted at bag `root`.
pub fn make_nice(t: &TreeDecomposition, root: usize) -> NiceTreeDecomposition {
    let mut b = Builder { nodes: Vec::new() };
    if t.bags.is_empty() {
        let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
        return NiceTreeDecomposition { nodes: b.nodes, root: leaf, host_n: t.host_n };
    }
    assert!(root < t.bags.len(), "root {root} out of range");
    let adj = t.adjacency();
    // iterative DFS for a post-order of the rooted bag tree
    let mut parent = vec![usize::MAX; t.bags.len()];
    let mut order = Vec::with_capacity(t.bags.len());
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in adj[x].iter().rev() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut top = vec![usize::MAX; t.bags.len()];
    for &x in order.iter().rev() {
        let bag = &t.bags[x];
        let branches: Vec<usize> = adj[x]
            .iter()
            .filter(|&&y| parent[y] == x && y != x)
            .map(|&y| b.morph(top[y], bag))
            .collect();
        top[x] = match branches.split_first() {
            None => {
                let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
                b.morph(leaf, bag)
            }
            Some((&first, rest)) => rest.iter().fold(first, |acc, &br| {
                b.push(NodeKind::Join, bag.clone(), vec![acc, br])
            }),
        };
    }
    let root_node = b.morph(top[root], &[]);
    NiceTreeDecomposition { nodes: b.nodes, root: root_node, host_n: t.host_n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;
    use crate::treedec::{heuristic_decompose, Strategy};

    #[test]
    fn empty_bag_becomes_single_leaf() {
        let t = TreeDecomposition::new(0, vec![vec![]], vec![]);
        let nice = make_nice(&t, 0);
        assert_eq!(nice.nodes.len(), 1);
        assert_eq!(nice.nodes[0].kind, NodeKind::Leaf);
        nice.check_shape().unwrap();
    }

    #[test]
    fn p3_chain() {
        let g = GraphSpec::Path(3).build();
        let t = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let nice = make_nice(&t, 0);
        nice.check_shape().unwrap();
        assert!(nice.to_tree_decomposition().is_valid(&g));
        assert_eq!(nice.width(), 1);
        assert!(nice
            .nodes
            .iter()
            .all(|x| matches!(x.kind, NodeKind::Leaf | NodeKind::Introduce(_) | NodeKind::Forget(_))));
    }

    #[test]
    fn joins_appear_for_branching_trees() {
        let g = GraphSpec::Star(4).build();
        let t = TreeDecomposition::new(
            5,
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        );
        let nice = make_nice(&t, 0);
        nice.check_shape().unwrap();
        assert!(nice.to_tree_decomposition().is_valid(&g));
        assert_eq!(nice.nodes.iter().filter(|x| x.kind == NodeKind::Join).count(), 3);
        let nice2 = make_nice(&t, 3);
        nice2.check_shape().unwrap();
        assert!(nice2.to_tree_decomposition().is_valid(&g));
    }

    #[test]
    fn heuristic_decompositions_stay_valid() {
        for seed in 0..10 {
            let g = GraphSpec::RandomSubgrid { rows: 4, cols: 4, p: 0.7, seed }.build();
            let td = heuristic_decompose(&g, Strategy::MinFill);
            let nice = make_nice(&td, td.root.unwrap_or(0));
            nice.check_shape().unwrap();
            assert!(nice.to_tree_decomposition().is_valid(&g));
            assert_eq!(nice.width(), td.width());
            assert!(nice.len() <= 4 * (td.width() + 1) * g.n().max(1));
        }
    }
}
