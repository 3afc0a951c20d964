//! Exact minor and odd-minor containment for small graphs.
//!
//! Search rests on one normalisation: a free vertex adjacent to a branch set
//! can join it through a single new tree edge (colored opposite to its
//! neighbour), which keeps both models and odd models valid. So whenever `g`
//! has a model, it has one whose branch sets partition a union of connected
//! components of `g` into exactly `|V(h)|` connected parts, and only those
//! partitions are enumerated.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const MINOR_MAX_H: usize = 5;
pub const MINOR_MAX_G: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MinorModel {
    /// Indexed by vertex of `h`.
    pub branch_sets: Vec<Vec<Vertex>>,
    /// Spanning tree of each branch set.
    pub tree_edges: Vec<Vec<(Vertex, Vertex)>>,
    /// Keyed by `h`-edge `(a, b)` with `a < b`; the value runs from
    /// `branch_sets[a]` to `branch_sets[b]`.
    pub connectors: BTreeMap<(usize, usize), (Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OddColoring {
    pub color: BTreeMap<Vertex, u8>,
}

/// Serialized model, optionally carrying its odd coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub branch_sets: Vec<Vec<Vertex>>,
    pub tree_edges: Vec<Vec<(Vertex, Vertex)>>,
    pub connectors: BTreeMap<String, (Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<Vertex, u8>>,
}

impl ModelDocument {
    pub fn new(model: &MinorModel, coloring: Option<&OddColoring>) -> Self {
        ModelDocument {
            branch_sets: model.branch_sets.clone(),
            tree_edges: model.tree_edges.clone(),
            connectors: model.connectors.iter().map(|(&(a, b), &e)| (format!("{a}-{b}"), e)).collect(),
            coloring: coloring.map(|c| c.color.clone()),
        }
    }

    pub fn into_parts(self) -> Result<(MinorModel, Option<OddColoring>)> {
        let mut connectors = BTreeMap::new();
        for (key, e) in self.connectors {
            let parsed = key.split_once('-').and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            let Some((a, b)) = parsed else {
                return Err(Error::MalformedModel(format!("connector key {key:?} is not of the form \"u-v\"")));
            };
            let (key, e) = if a <= b { ((a, b), e) } else { ((b, a), (e.1, e.0)) };
            connectors.insert(key, e);
        }
        let model = MinorModel { branch_sets: self.branch_sets, tree_edges: self.tree_edges, connectors };
        Ok((model, self.coloring.map(|color| OddColoring { color })))
    }
}

fn check_ids(g: &Graph, h: &Graph, m: &MinorModel) -> Result<()> {
    let bad = |msg: String| Err(Error::MalformedModel(msg));
    if m.branch_sets.len() != h.n() {
        return bad(format!("{} branch sets for a pattern on {} vertices", m.branch_sets.len(), h.n()));
    }
    if m.tree_edges.len() != h.n() {
        return bad(format!("{} tree edge lists for a pattern on {} vertices", m.tree_edges.len(), h.n()));
    }
    let in_g = |v: Vertex| v < g.n();
    for (i, set) in m.branch_sets.iter().enumerate() {
        if let Some(&v) = set.iter().find(|&&v| !in_g(v)) {
            return bad(format!("branch set {i} names vertex {v}, graph has {}", g.n()));
        }
    }
    for (i, tree) in m.tree_edges.iter().enumerate() {
        if let Some(&(u, v)) = tree.iter().find(|&&(u, v)| !in_g(u) || !in_g(v)) {
            return bad(format!("tree edge {u} {v} of set {i} is out of range"));
        }
    }
    for (&(a, b), &(x, y)) in &m.connectors {
        if a >= h.n() || b >= h.n() {
            return bad(format!("connector key {a}-{b} is out of range"));
        }
        if !in_g(x) || !in_g(y) {
            return bad(format!("connector {x} {y} is out of range"));
        }
    }
    Ok(())
}

/// Structural check of a model. Ids outside either graph are an error;
/// any other defect yields `false`.
pub fn verify_model(g: &Graph, h: &Graph, m: &MinorModel) -> Result<bool> {
    check_ids(g, h, m)?;
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Ok(false);
        }
        for &v in set {
            if owner[v] != usize::MAX {
                return Ok(false);
            }
            owner[v] = i;
        }
    }
    for (i, (set, tree)) in m.branch_sets.iter().zip(&m.tree_edges).enumerate() {
        if tree.len() + 1 != set.len() {
            return Ok(false);
        }
        let mut uf = UnionFind::new(g.n());
        for &(u, v) in tree {
            if owner[u] != i || owner[v] != i || !g.has_edge(u, v) || !uf.union(u, v, 0) {
                return Ok(false);
            }
        }
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    if m.connectors.len() != edges.len() || edges.iter().any(|e| !m.connectors.contains_key(e)) {
        return Ok(false);
    }
    Ok(m.connectors.iter().all(|(&(a, b), &(x, y))| {
        g.has_edge(x, y) && ((owner[x], owner[y]) == (a, b) || (owner[x], owner[y]) == (b, a))
    }))
}

/// Union-find whose links carry the parity between a node and its parent.
struct UnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), parity: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// Records `bit(x) ^ bit(y) == d`; false if already joined (any parity).
    fn union(&mut self, x: usize, y: usize, d: u8) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ d;
        true
    }

    /// Like `union`, but an existing link is fine when its parity agrees.
    fn constrain(&mut self, x: usize, y: usize, d: u8) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == d;
        }
        self.union(x, y, d)
    }
}

/// Finds colors making every tree edge bichromatic and every connector
/// monochromatic. Tree colorings are fixed up to one flip per branch set,
/// and each connector fixes the parity between two flips.
pub fn verify_odd_model(g: &Graph, h: &Graph, m: &MinorModel) -> Result<Option<OddColoring>> {
    if !verify_model(g, h, m)? {
        return Err(Error::MalformedModel("not a valid model".into()));
    }
    let mut base = vec![u8::MAX; g.n()];
    let mut owner = vec![usize::MAX; g.n()];
    for (i, (set, tree)) in m.branch_sets.iter().zip(&m.tree_edges).enumerate() {
        let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for &(u, v) in tree {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        base[set[0]] = 0;
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &w in adj.get(&u).map(Vec::as_slice).unwrap_or_default() {
                if base[w] == u8::MAX {
                    base[w] = base[u] ^ 1;
                    stack.push(w);
                }
            }
        }
        for &v in set {
            owner[v] = i;
        }
    }
    let mut flips = UnionFind::new(h.n());
    for &(x, y) in m.connectors.values() {
        if !flips.constrain(owner[x], owner[y], base[x] ^ base[y]) {
            return Ok(None);
        }
    }
    let color = m
        .branch_sets
        .iter()
        .flatten()
        .map(|&v| (v, base[v] ^ flips.find(owner[v]).1))
        .collect();
    Ok(Some(OddColoring { color }))
}

fn check_caps(g: &Graph, h: &Graph) -> Result<()> {
    if h.n() > MINOR_MAX_H || g.n() > MINOR_MAX_G {
        return Err(Error::MinorSearchTooLarge(format!(
            "pattern on {} vertices (cap {MINOR_MAX_H}), host on {} vertices (cap {MINOR_MAX_G})",
            h.n(),
            g.n()
        )));
    }
    Ok(())
}

pub fn find_minor_model(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    check_caps(g, h)?;
    let search = Search::new(g, h);
    let mut found = None;
    let _ = search.models(&mut |parts, assign| {
        found = Some(search.build(parts, assign, None));
        ControlFlow::Break(())
    });
    Ok(found)
}

pub fn find_odd_minor_model(g: &Graph, h: &Graph) -> Result<Option<(MinorModel, OddColoring)>> {
    check_caps(g, h)?;
    let search = Search::new(g, h);
    let mut cache = HashMap::new();
    let mut found = None;
    let _ = search.models(&mut |parts, assign| match search.odd_colors(parts, assign, &mut cache) {
        Some(colors) => {
            let model = search.build(parts, assign, Some(colors));
            let coloring = verify_odd_model(g, h, &model)
                .expect("constructed model verifies")
                .expect("constructed model admits its coloring");
            found = Some((model, coloring));
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    Ok(found)
}

pub fn has_odd_minor(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_odd_minor_model(g, h)?.is_some())
}

type Visit<'v> = dyn FnMut(&[u32]) -> ControlFlow<()> + 'v;
type ModelVisit<'v> = dyn FnMut(&[u32], &[usize]) -> ControlFlow<()> + 'v;

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    adj: Vec<u32>,
    /// Pattern vertices by decreasing degree, ties by id.
    order: Vec<usize>,
    h_adj: Vec<u32>,
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let mask = |gr: &Graph, v: usize| gr.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u);
        let mut order: Vec<usize> = h.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        Search {
            g,
            h,
            adj: g.vertices().map(|v| mask(g, v)).collect(),
            order,
            h_adj: h.vertices().map(|v| mask(h, v)).collect(),
        }
    }

    fn closure(&self, within: u32, start: u32) -> u32 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn component_count(&self, mut mask: u32) -> usize {
        let mut c = 0;
        while mask != 0 {
            mask &= !self.closure(mask, mask & mask.wrapping_neg());
            c += 1;
        }
        c
    }

    /// Every connected subset of `allowed` that contains `set` and avoids
    /// `excluded`, each exactly once.
    fn connected_sets(&self, allowed: u32, set: u32, ext: u32, excluded: u32, visit: &mut dyn FnMut(u32) -> ControlFlow<()>) -> ControlFlow<()> {
        if ext == 0 {
            return visit(set);
        }
        let u = ext & ext.wrapping_neg();
        let grown = set | u;
        let ext_in = (ext | self.adj[u.trailing_zeros() as usize]) & allowed & !grown & !excluded;
        self.connected_sets(allowed, grown, ext_in, excluded, visit)?;
        self.connected_sets(allowed, set, ext & !u, excluded | u, visit)
    }

    /// Partitions of `mask` into exactly `k` connected parts, appended to `acc`.
    fn partitions(&self, mask: u32, k: usize, acc: &mut Vec<u32>, visit: &mut Visit) -> ControlFlow<()> {
        if k == 0 {
            return if mask == 0 { visit(acc) } else { ControlFlow::Continue(()) };
        }
        if (mask.count_ones() as usize) < k || self.component_count(mask) > k {
            return ControlFlow::Continue(());
        }
        let low = mask & mask.wrapping_neg();
        if k == 1 {
            acc.push(mask);
            let r = visit(acc);
            acc.pop();
            return r;
        }
        let ext = self.adj[low.trailing_zeros() as usize] & mask;
        self.connected_sets(mask, low, ext, 0, &mut |part| {
            if part == mask {
                return ControlFlow::Continue(());
            }
            acc.push(part);
            let r = self.partitions(mask & !part, k - 1, acc, visit);
            acc.pop();
            r
        })
    }

    /// Exactly `k` connected parts spread over a subset of the components
    /// from `comps[i..]`, each chosen component fully covered.
    fn over_components(&self, comps: &[u32], k: usize, acc: &mut Vec<u32>, visit: &mut Visit) -> ControlFlow<()> {
        if k == 0 {
            return visit(acc);
        }
        let Some((&first, rest)) = comps.split_first() else {
            return ControlFlow::Continue(());
        };
        for j in 1..=k.min(first.count_ones() as usize) {
            self.partitions(first, j, acc, &mut |acc| {
                let mut acc = acc.to_vec();
                self.over_components(rest, k - j, &mut acc, visit)
            })?;
        }
        self.over_components(rest, k, acc, visit)
    }

    /// Calls `visit(parts, assign)` for every normalised model, where
    /// `assign[a]` is the part realising pattern vertex `a`.
    fn models(&self, visit: &mut ModelVisit) -> ControlFlow<()> {
        let k = self.h.n();
        let comps: Vec<u32> = self.g.components().iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut h_degrees: Vec<usize> = self.h.vertices().map(|v| self.h.degree(v)).collect();
        h_degrees.sort_unstable_by(|a, b| b.cmp(a));
        self.over_components(&comps, k, &mut Vec::new(), &mut |parts| {
            let quotient: Vec<u32> = parts
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    let reach = bits(p).fold(0, |m, v| m | self.adj[v]);
                    (0..parts.len()).filter(|&j| j != i && reach & parts[j] != 0).fold(0, |m, j| m | 1 << j)
                })
                .collect();
            let mut q_degrees: Vec<usize> = quotient.iter().map(|q| q.count_ones() as usize).collect();
            q_degrees.sort_unstable_by(|a, b| b.cmp(a));
            if q_degrees.iter().zip(&h_degrees).any(|(q, h)| q < h) {
                return ControlFlow::Continue(());
            }
            let mut assign = vec![usize::MAX; k];
            self.assign(0, 0, &quotient, &mut assign, &mut |assign| visit(parts, assign))
        })
    }

    fn assign(&self, depth: usize, used: u32, quotient: &[u32], assign: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&a) = self.order.get(depth) else {
            return visit(assign);
        };
        for p in 0..quotient.len() {
            if used & 1 << p != 0 {
                continue;
            }
            let fits = bits(self.h_adj[a]).all(|b| assign[b] == usize::MAX || quotient[p] & 1 << assign[b] != 0);
            if fits {
                assign[a] = p;
                self.assign(depth + 1, used | 1 << p, quotient, assign, visit)?;
                assign[a] = usize::MAX;
            }
        }
        ControlFlow::Continue(())
    }

    /// Colorings of `part` (bit set = color 1) whose bichromatic edges connect
    /// it, deduplicated on the vertices in `boundary`.
    fn achievable(&self, part: u32, boundary: u32) -> Vec<u32> {
        let low = part & part.wrapping_neg();
        let free = part & !low;
        let mut seen = HashMap::new();
        let mut sub = 0u32;
        loop {
            let mut reach = low;
            let mut frontier = low;
            while frontier != 0 {
                let next = bits(frontier)
                    .fold(0, |m, v| m | (self.adj[v] & if sub & 1 << v != 0 { !sub } else { sub }))
                    & part
                    & !reach;
                reach |= next;
                frontier = next;
            }
            if reach == part {
                seen.entry(sub & boundary).or_insert(sub);
                let flipped = part & !sub;
                seen.entry(flipped & boundary).or_insert(flipped);
            }
            if sub == free {
                break;
            }
            sub = (sub.wrapping_sub(free)) & free;
        }
        let mut out: Vec<u32> = seen.into_values().collect();
        out.sort_unstable();
        out
    }

    /// A coloring per part (indexed like `parts`) making every pattern edge
    /// realisable by a monochromatic edge.
    fn odd_colors(&self, parts: &[u32], assign: &[usize], cache: &mut HashMap<(u32, u32), Vec<u32>>) -> Option<Vec<u32>> {
        let all = parts.iter().fold(0, |m, &p| m | p);
        let options: Vec<Vec<u32>> = parts
            .iter()
            .map(|&p| {
                let boundary = bits(p).filter(|&v| self.adj[v] & all & !p != 0).fold(0, |m, v| m | 1 << v);
                cache.entry((p, boundary)).or_insert_with(|| self.achievable(p, boundary)).clone()
            })
            .collect();
        let mut chosen = vec![0u32; parts.len()];
        let ok = self.choose_colors(0, parts, assign, &options, &mut chosen);
        ok.then_some(chosen)
    }

    fn mono_edge(&self, pa: u32, ca: u32, pb: u32, cb: u32) -> Option<(Vertex, Vertex)> {
        bits(pa).find_map(|x| {
            let same = if ca & 1 << x != 0 { cb } else { pb & !cb };
            let hit = self.adj[x] & pb & same;
            (hit != 0).then(|| (x, hit.trailing_zeros() as usize))
        })
    }

    fn choose_colors(&self, depth: usize, parts: &[u32], assign: &[usize], options: &[Vec<u32>], chosen: &mut [u32]) -> bool {
        let Some(&a) = self.order.get(depth) else {
            return true;
        };
        let pa = assign[a];
        let placed: Vec<usize> = bits(self.h_adj[a]).filter(|&b| self.order[..depth].contains(&b)).collect();
        for &c in &options[pa] {
            let ok = placed.iter().all(|&b| self.mono_edge(parts[pa], c, parts[assign[b]], chosen[assign[b]]).is_some());
            if ok {
                chosen[pa] = c;
                if self.choose_colors(depth + 1, parts, assign, options, chosen) {
                    return true;
                }
            }
        }
        false
    }

    fn build(&self, parts: &[u32], assign: &[usize], colors: Option<Vec<u32>>) -> MinorModel {
        let mut model = MinorModel::default();
        for &p in assign.iter().map(|&i| &parts[i]) {
            model.branch_sets.push(bits(p).collect());
        }
        for &pi in assign {
            let p = parts[pi];
            let c = colors.as_ref().map(|c| c[pi]);
            let root = p.trailing_zeros() as usize;
            let mut seen = 1u32 << root;
            let mut queue = std::collections::VecDeque::from([root]);
            let mut tree = Vec::new();
            while let Some(u) = queue.pop_front() {
                let mut next = self.adj[u] & p & !seen;
                if let Some(c) = c {
                    next &= if c & 1 << u != 0 { !c } else { c };
                }
                for w in bits(next) {
                    seen |= 1 << w;
                    tree.push((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
            debug_assert_eq!(seen, p);
            tree.sort_unstable();
            model.tree_edges.push(tree);
        }
        for (a, b) in self.h.edges() {
            let (pa, pb) = (parts[assign[a]], parts[assign[b]]);
            let e = match &colors {
                Some(c) => self.mono_edge(pa, c[assign[a]], pb, c[assign[b]]),
                None => self.mono_edge(pa, 0, pb, 0).or_else(|| self.mono_edge(pa, pa, pb, 0)),
            };
            model.connectors.insert((a, b), e.expect("quotient edge exists"));
        }
        model
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn k(n: usize) -> Graph {
        GraphSpec::Complete(n).build()
    }

    fn singletons(g: &Graph, h: &Graph, sets: Vec<Vec<usize>>) -> MinorModel {
        let mut connectors = BTreeMap::new();
        for (a, b) in h.edges() {
            let e = sets[a].iter().flat_map(|&x| sets[b].iter().map(move |&y| (x, y))).find(|&(x, y)| g.has_edge(x, y));
            connectors.insert((a, b), e.unwrap_or((sets[a][0], sets[b][0])));
        }
        MinorModel { tree_edges: vec![Vec::new(); sets.len()], branch_sets: sets, connectors }
    }

    #[test]
    fn verify_examples() {
        let k2 = k(2);
        let m = singletons(&k2, &k2, vec![vec![0], vec![1]]);
        assert!(verify_model(&k2, &k2, &m).unwrap());
        let overlap = singletons(&k2, &k2, vec![vec![0], vec![0]]);
        assert!(!verify_model(&k2, &k2, &overlap).unwrap());
        let m = singletons(&k(4), &k(3), vec![vec![0], vec![1], vec![2]]);
        assert!(verify_model(&k(4), &k(3), &m).unwrap());
        let out_of_range = singletons(&k2, &k2, vec![vec![0], vec![7]]);
        assert!(matches!(verify_model(&k2, &k2, &out_of_range), Err(Error::MalformedModel(_))));
        let mut missing = m.clone();
        missing.connectors.remove(&(0, 1));
        assert!(!verify_model(&k(4), &k(3), &missing).unwrap());
    }

    #[test]
    fn odd_verify_examples() {
        let k3 = k(3);
        let m = singletons(&k3, &k3, vec![vec![0], vec![1], vec![2]]);
        let c = verify_odd_model(&k3, &k3, &m).unwrap().unwrap();
        assert!(c.color.values().all(|&x| x == 0));
        let p3 = GraphSpec::Path(3).build();
        let m = MinorModel {
            branch_sets: vec![vec![0], vec![1, 2]],
            tree_edges: vec![vec![], vec![(1, 2)]],
            connectors: BTreeMap::from([((0, 1), (0, 1))]),
        };
        let c = verify_odd_model(&p3, &k(2), &m).unwrap().unwrap();
        assert_eq!(c.color[&0], c.color[&1]);
        assert_ne!(c.color[&1], c.color[&2]);
        // K3 in C4 via a path branch set: connectors force an odd cycle of parities
        let c4 = GraphSpec::Cycle(4).build();
        let m = MinorModel {
            branch_sets: vec![vec![0], vec![1], vec![2, 3]],
            tree_edges: vec![vec![], vec![], vec![(2, 3)]],
            connectors: BTreeMap::from([((0, 1), (0, 1)), ((0, 2), (0, 3)), ((1, 2), (1, 2))]),
        };
        assert!(verify_model(&c4, &k(3), &m).unwrap());
        assert_eq!(verify_odd_model(&c4, &k(3), &m).unwrap(), None);
    }

    #[test]
    fn find_examples() {
        let m = find_minor_model(&k(5), &k(4)).unwrap().unwrap();
        assert!(verify_model(&k(5), &k(4), &m).unwrap());
        let grid = GraphSpec::Grid { rows: 4, cols: 4 }.build();
        assert_eq!(find_minor_model(&grid, &k(5)).unwrap(), None);
        let k4 = find_minor_model(&grid, &k(4)).unwrap().unwrap();
        assert!(verify_model(&grid, &k(4), &k4).unwrap());
        let c4 = GraphSpec::Cycle(4).build();
        let m = find_minor_model(&c4, &k(3)).unwrap().unwrap();
        assert!(verify_model(&c4, &k(3), &m).unwrap());
        assert_eq!(find_minor_model(&GraphSpec::Path(5).build(), &k(3)).unwrap(), None);
        assert!(find_minor_model(&GraphSpec::Petersen.build(), &k(5)).unwrap().is_some());
    }

    #[test]
    fn caps() {
        let big = Graph::empty(21);
        let err = find_minor_model(&big, &k(2)).unwrap_err();
        assert!(err.to_string().contains("instance too large for exact minor search"));
        assert!(has_odd_minor(&k(3), &k(6)).is_err());
    }

    #[test]
    fn odd_minor_examples() {
        assert!(!has_odd_minor(&GraphSpec::Cycle(4).build(), &k(3)).unwrap());
        assert!(has_odd_minor(&k(3), &k(3)).unwrap());
        let c5 = GraphSpec::Cycle(5).build();
        let (m, c) = find_odd_minor_model(&c5, &k(3)).unwrap().unwrap();
        assert_eq!(verify_odd_model(&c5, &k(3), &m).unwrap(), Some(c));
        assert!(!has_odd_minor(&GraphSpec::Grid { rows: 3, cols: 3 }.build(), &k(3)).unwrap());
        assert!(has_odd_minor(&k(4), &k(4)).unwrap());
    }

    #[test]
    fn empty_pattern_and_disconnected_hosts() {
        assert_eq!(find_minor_model(&k(3), &Graph::empty(0)).unwrap(), Some(MinorModel::default()));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let pattern = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let m = find_minor_model(&two_edges, &pattern).unwrap().unwrap();
        assert!(verify_model(&two_edges, &pattern, &m).unwrap());
        assert_eq!(find_minor_model(&two_edges, &GraphSpec::Path(3).build()).unwrap(), None);
    }

    #[test]
    fn document_round_trip() {
        let c5 = GraphSpec::Cycle(5).build();
        let (m, c) = find_odd_minor_model(&c5, &k(3)).unwrap().unwrap();
        let doc = ModelDocument::new(&m, Some(&c));
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"0-1\""));
        let back: ModelDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_parts().unwrap(), (m, Some(c)));
    }
}
