//! Guess and conquer for parameterized Vertex Cover.
//!
//! Kernelize (high-degree rule, then the LP kernel from the bipartite double
//! cover), then dispatch on the reduced parameter: when `k' <= beta * log2 n`
//! a bounded search tree costs at most `n^beta` leaves and runs directly;
//! otherwise the kernel is decomposed and solved by treewidth DP. Both
//! kernels only delete vertices, so the reduced graph is an induced subgraph
//! (hence a minor) of the input.

use serde::{Deserialize, Serialize};

use crate::dp::{nice_decompose, solve_wvc, ForcedSets};
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexWeights};
use crate::oddminor::bip_weighted_vc;
use crate::treedec::Strategy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Vertex of degree above the remaining budget taken into the cover.
    HighDegree,
    IsolatedRemoved,
    /// More than `k'^2` edges survive the high-degree rule.
    EdgeBound,
    BudgetExhausted,
    LpForcedIn,
    LpRemoved,
    LpBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelResult {
    pub graph: Graph,
    pub k_prime: usize,
    /// Original vertices contained in some optimum, already paid for.
    pub forced_in: Vec<Vertex>,
    /// Original id of each kernel vertex.
    pub vmap: Vec<Vertex>,
    pub rule_trace: Vec<(Rule, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelOutcome {
    Reduced(KernelResult),
    NoInstance { rule_trace: Vec<(Rule, usize)> },
}

impl KernelOutcome {
    pub fn reduced(&self) -> Option<&KernelResult> {
        match self {
            KernelOutcome::Reduced(k) => Some(k),
            KernelOutcome::NoInstance { .. } => None,
        }
    }
}

/// High-degree (Buss) kernel: at most `k'^2` edges on non-isolated vertices.
pub fn kernel_vc_buss(g: &Graph, k: usize) -> KernelOutcome {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut budget = k as i64;
    let mut forced = Vec::new();
    let mut trace = Vec::new();
    while let Some(v) = (0..n).find(|&v| alive[v] && degree[v] as i64 > budget) {
        if budget == 0 {
            trace.push((Rule::BudgetExhausted, 1));
            return KernelOutcome::NoInstance { rule_trace: trace };
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        forced.push(v);
        budget -= 1;
        push_rule(&mut trace, Rule::HighDegree);
    }
    let isolated = (0..n).filter(|&v| alive[v] && degree[v] == 0).count();
    if isolated > 0 {
        trace.push((Rule::IsolatedRemoved, isolated));
    }
    let keep: Vec<Vertex> = (0..n).filter(|&v| alive[v] && degree[v] > 0).collect();
    let (kernel, vmap) = g.induced_subgraph(&keep);
    let budget = budget as usize;
    if kernel.m() > budget * budget {
        trace.push((Rule::EdgeBound, kernel.m()));
        return KernelOutcome::NoInstance { rule_trace: trace };
    }
    forced.sort_unstable();
    KernelOutcome::Reduced(KernelResult { graph: kernel, k_prime: budget, forced_in: forced, vmap, rule_trace: trace })
}

fn push_rule(trace: &mut Vec<(Rule, usize)>, r: Rule) {
    match trace.last_mut() {
        Some((last, c)) if *last == r => *c += 1,
        _ => trace.push((r, 1)),
    }
}

/// Half-integral LP optimum `x` (values doubled: 0, 1 or 2) from a minimum
/// vertex cover of the bipartite double cover, via König's theorem.
pub fn half_integral_lp(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    let cover = Graph::from_edges_lossy(2 * n, edges);
    let sides: Vec<u8> = (0..2 * n).map(|i| (i >= n) as u8).collect();
    let sol = bip_weighted_vc(&cover, &sides, &VertexWeights::unit(2 * n), &ForcedSets::none())
        .expect("double cover is bipartite with unit weights");
    let mut x = vec![0u8; n];
    for &c in sol.certificate.vertices().unwrap_or_default() {
        x[c % n] += 1;
    }
    x
}

/// LP (Nemhauser–Trotter) kernel with at most `2 k'` vertices.
pub fn kernel_vc_nt(g: &Graph, k: usize) -> KernelOutcome {
    let x = half_integral_lp(g);
    let doubled_lp: usize = x.iter().map(|&v| v as usize).sum();
    let mut trace = Vec::new();
    if doubled_lp > 2 * k {
        trace.push((Rule::LpBound, doubled_lp));
        return KernelOutcome::NoInstance { rule_trace: trace };
    }
    let forced: Vec<Vertex> = g.vertices().filter(|&v| x[v] == 2).collect();
    let removed = g.vertices().filter(|&v| x[v] == 0).count();
    let half: Vec<Vertex> = g.vertices().filter(|&v| x[v] == 1).collect();
    if !forced.is_empty() {
        trace.push((Rule::LpForcedIn, forced.len()));
    }
    if removed > 0 {
        trace.push((Rule::LpRemoved, removed));
    }
    let (kernel, vmap) = g.induced_subgraph(&half);
    let k_prime = k - forced.len();
    debug_assert!(kernel.n() <= 2 * k_prime);
    KernelOutcome::Reduced(KernelResult { graph: kernel, k_prime, forced_in: forced, vmap, rule_trace: trace })
}

/// Bounded search tree: branch on the endpoints of an edge at a maximum-degree
/// vertex. Returns a cover of size at most `k` if one exists.
pub fn branch_vc(g: &Graph, k: usize) -> (bool, Option<Vec<Vertex>>) {
    let mut removed = vec![false; g.n()];
    let mut chosen = Vec::new();
    if branch(g, k, &mut removed, &mut chosen) {
        chosen.sort_unstable();
        (true, Some(chosen))
    } else {
        (false, None)
    }
}

fn branch(g: &Graph, k: usize, removed: &mut [bool], chosen: &mut Vec<Vertex>) -> bool {
    let live_degree = |v: usize, removed: &[bool]| g.neighbors(v).iter().filter(|&&u| !removed[u]).count();
    let mut edges = 0;
    let mut pick: Option<(usize, Vertex)> = None;
    for v in g.vertices().filter(|&v| !removed[v]) {
        let d = live_degree(v, removed);
        edges += d;
        if d > 0 && pick.is_none_or(|(bd, _)| d > bd) {
            pick = Some((d, v));
        }
    }
    let Some((max_deg, v)) = pick else { return true };
    edges /= 2;
    if k == 0 || edges > k * max_deg {
        return false;
    }
    let u = *g.neighbors(v).iter().find(|&&u| !removed[u]).expect("v has a live neighbour");
    for w in [v, u] {
        removed[w] = true;
        chosen.push(w);
        if branch(g, k - 1, removed, chosen) {
            return true;
        }
        chosen.pop();
        removed[w] = false;
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum KernelChoice {
    /// High-degree rule, then the LP kernel.
    #[default]
    Both,
    Buss,
    Nt,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GncConfig {
    pub beta: f64,
    pub width_cap: usize,
    pub kernel: KernelChoice,
}

impl Default for GncConfig {
    fn default() -> Self {
        GncConfig { beta: 1.0, width_cap: 25, kernel: KernelChoice::Both }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Polynomial,
    Subexponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Decided by a kernelization rule alone.
    Kernel,
    Branch,
    TreewidthDp,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GncReport {
    pub regime: Regime,
    pub kernel_vertices: usize,
    pub k_prime: Option<usize>,
    pub decomposition_width: Option<usize>,
    pub method: Method,
    /// Set when the kernel was too wide for DP and the search tree ran instead.
    pub width_fallback: bool,
    pub predicted_exponent: f64,
    pub rule_trace: Vec<(Rule, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GncOutcome {
    pub decision: bool,
    pub certificate: Option<Vec<Vertex>>,
    pub report: GncReport,
}

fn compose(outer: KernelResult, inner: KernelOutcome) -> KernelOutcome {
    match inner {
        KernelOutcome::NoInstance { mut rule_trace } => {
            let mut trace = outer.rule_trace;
            trace.append(&mut rule_trace);
            KernelOutcome::NoInstance { rule_trace: trace }
        }
        KernelOutcome::Reduced(mut r) => {
            let mut forced = outer.forced_in;
            forced.extend(r.forced_in.iter().map(|&v| outer.vmap[v]));
            forced.sort_unstable();
            let mut trace = outer.rule_trace;
            trace.append(&mut r.rule_trace);
            KernelOutcome::Reduced(KernelResult {
                vmap: r.vmap.iter().map(|&v| outer.vmap[v]).collect(),
                graph: r.graph,
                k_prime: r.k_prime,
                forced_in: forced,
                rule_trace: trace,
            })
        }
    }
}

pub fn kernelize(g: &Graph, k: usize, choice: KernelChoice) -> KernelOutcome {
    match choice {
        KernelChoice::Buss => kernel_vc_buss(g, k),
        KernelChoice::Nt => kernel_vc_nt(g, k),
        KernelChoice::Both => match kernel_vc_buss(g, k) {
            KernelOutcome::Reduced(r) => {
                let inner = kernel_vc_nt(&r.graph, r.k_prime);
                compose(r, inner)
            }
            no => no,
        },
    }
}

/// Whether `k' <= beta * log2 n`, i.e. the search tree is polynomial in `n`.
pub fn is_polynomial_regime(k_prime: usize, n: usize, beta: f64) -> bool {
    let log_n = if n > 1 { (n as f64).log2() } else { 0.0 };
    k_prime as f64 <= beta * log_n
}

pub fn gnc_solve_vc(g: &Graph, k: usize, config: &GncConfig) -> Result<GncOutcome> {
    let kernel = match kernelize(g, k, config.kernel) {
        KernelOutcome::NoInstance { rule_trace } => {
            let regime = if is_polynomial_regime(k, g.n(), config.beta) {
                Regime::Polynomial
            } else {
                Regime::Subexponential
            };
            return Ok(GncOutcome {
                decision: false,
                certificate: None,
                report: GncReport {
                    regime,
                    kernel_vertices: 0,
                    k_prime: None,
                    decomposition_width: None,
                    method: Method::Kernel,
                    width_fallback: false,
                    predicted_exponent: 0.0,
                    rule_trace,
                },
            });
        }
        KernelOutcome::Reduced(r) => r,
    };
    let kv = kernel.graph.n();
    let mut report = GncReport {
        regime: Regime::Polynomial,
        kernel_vertices: kv,
        k_prime: Some(kernel.k_prime),
        decomposition_width: None,
        method: Method::Branch,
        width_fallback: false,
        predicted_exponent: (kv as f64).sqrt(),
        rule_trace: kernel.rule_trace.clone(),
    };
    let inner: Option<Vec<Vertex>> = if is_polynomial_regime(kernel.k_prime, g.n(), config.beta) {
        branch_vc(&kernel.graph, kernel.k_prime).1
    } else {
        report.regime = Regime::Subexponential;
        let ntd = nice_decompose(&kernel.graph, Strategy::MinFill);
        report.decomposition_width = Some(ntd.width());
        if ntd.width() > config.width_cap {
            report.width_fallback = true;
            branch_vc(&kernel.graph, kernel.k_prime).1
        } else {
            report.method = Method::TreewidthDp;
            let sol = solve_wvc(&kernel.graph, &VertexWeights::unit(kv), &ntd, &ForcedSets::none())?;
            let cover = sol.certificate.vertices().unwrap_or_default().to_vec();
            (sol.value as usize <= kernel.k_prime).then_some(cover)
        }
    };
    let certificate = inner.map(|c| {
        let mut cert = kernel.forced_in.clone();
        cert.extend(c.iter().map(|&v| kernel.vmap[v]));
        cert.sort_unstable();
        cert
    });
    Ok(GncOutcome { decision: certificate.is_some(), certificate, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;
    use crate::oracle::check::is_vertex_cover;

    #[test]
    fn buss_examples() {
        let star = GraphSpec::Star(5).build();
        let r = kernel_vc_buss(&star, 1);
        let r = r.reduced().expect("yes-instance");
        assert_eq!((r.forced_in.clone(), r.k_prime, r.graph.n()), (vec![0], 0, 0));
        assert!(matches!(kernel_vc_buss(&GraphSpec::Complete(4).build(), 1), KernelOutcome::NoInstance { .. }));
        let r = kernel_vc_buss(&Graph::empty(4), 0);
        assert_eq!(r.reduced().unwrap().graph.n(), 0);
    }

    #[test]
    fn nt_examples() {
        let k2 = GraphSpec::Complete(2).build();
        assert_eq!(half_integral_lp(&k2).iter().map(|&x| x as usize).sum::<usize>(), 2);
        let r = kernel_vc_nt(&k2, 1);
        assert!(r.reduced().unwrap().graph.n() <= 2);
        assert!(matches!(kernel_vc_nt(&GraphSpec::Cycle(5).build(), 2), KernelOutcome::NoInstance { .. }));
        let r = kernel_vc_nt(&GraphSpec::Star(4).build(), 1);
        let r = r.reduced().unwrap();
        assert_eq!((r.forced_in.clone(), r.graph.n(), r.k_prime), (vec![0], 0, 0));
    }

    #[test]
    fn branch_examples() {
        assert_eq!(branch_vc(&GraphSpec::Path(3).build(), 1), (true, Some(vec![1])));
        assert!(!branch_vc(&GraphSpec::Complete(3).build(), 1).0);
        let matching = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(branch_vc(&matching, 3).0);
        assert!(!branch_vc(&matching, 2).0);
    }

    #[test]
    fn solve_examples() {
        let g = GraphSpec::Grid { rows: 4, cols: 4 }.build();
        let out = gnc_solve_vc(&g, 8, &GncConfig::default()).unwrap();
        let cert = out.certificate.unwrap();
        assert!(out.decision && cert.len() == 8 && is_vertex_cover(&g, &cert));
        assert!(!gnc_solve_vc(&g, 7, &GncConfig::default()).unwrap().decision);
        let c5 = GraphSpec::Cycle(5).build();
        assert!(!gnc_solve_vc(&c5, 2, &GncConfig::default()).unwrap().decision);
        let k5 = GraphSpec::Complete(5).build();
        assert!(gnc_solve_vc(&k5, 5, &GncConfig::default()).unwrap().decision);
    }

    #[test]
    fn beta_selects_regime() {
        let g = GraphSpec::Grid { rows: 6, cols: 6 }.build();
        for (beta, want) in [(0.0, Regime::Subexponential), (8.0, Regime::Polynomial)] {
            let cfg = GncConfig { beta, ..GncConfig::default() };
            let out = gnc_solve_vc(&g, 18, &cfg).unwrap();
            assert_eq!(out.report.regime, want);
            assert!(out.decision);
            assert!(is_vertex_cover(&g, out.certificate.as_ref().unwrap()));
        }
    }
}
