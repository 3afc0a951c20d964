use std::collections::VecDeque;

/// Directed network with integer capacities, solved by shortest augmenting
/// paths in BFS layers (Dinic).
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    original: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new(), original: Vec::new() }
    }

    pub fn nodes(&self) -> usize {
        self.head.len()
    }

    /// Adds arc `u -> v` and its residual twin; returns the arc id.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: u64) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.original.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.original.push(0);
        id
    }

    /// Flow currently routed through arc `id`.
    pub fn flow_on(&self, id: usize) -> u64 {
        self.original[id] - self.cap[id]
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0usize; self.nodes()];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total = total.saturating_add(pushed);
            }
        }
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.nodes()];
        level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    q.push_back(y);
                }
            }
        }
        level
    }

    fn augment(&mut self, x: usize, t: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if x == t {
            return limit;
        }
        while next[x] < self.head[x].len() {
            let a = self.head[x][next[x]];
            let y = self.to[a];
            if self.cap[a] > 0 && level[y] == level[x] + 1 {
                let got = self.augment(y, t, limit.min(self.cap[a]), level, next);
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            next[x] += 1;
        }
        0
    }

    /// Max flow plus the residual source side, with the cut capacity
    /// recomputed from the original capacities and checked against the flow.
    pub fn min_cut(&mut self, s: usize, t: usize) -> MinCut {
        let value = self.max_flow(s, t);
        let level = self.levels(s);
        let source_side: Vec<bool> = level.iter().map(|&l| l != usize::MAX).collect();
        let cut = self.cut_capacity(&source_side);
        assert_eq!(cut, value, "max-flow/min-cut duality violated");
        MinCut { value, source_side }
    }

    /// Total original capacity of arcs leaving `side`.
    pub fn cut_capacity(&self, side: &[bool]) -> u64 {
        let mut total = 0u64;
        for (u, arcs) in self.head.iter().enumerate() {
            for &a in arcs {
                if a % 2 == 0 && side[u] && !side[self.to[a]] {
                    total = total.saturating_add(self.original[a]);
                }
            }
        }
        total
    }
}
