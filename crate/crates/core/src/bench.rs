//! Benchmark suites: every solver run is paired with its brute-force optimum
//! and the declared guarantee is checked per record. Failures are recorded,
//! never thrown.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::baker::{ptas_domset, ptas_is, ptas_maxcut, PtasConfig};
use crate::corpus::{corpus, dp_instances, Instance};
use crate::dp::{chromatic_number, nice_decompose, solve_ds, solve_maxcut, solve_wis, solve_wvc, Certificate, DpSolution, ForcedSets};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gnc::{gnc_solve_vc, kernelize, GncConfig, KernelChoice, KernelOutcome};
use crate::graph::{EdgeWeights, Graph, GraphSpec, Vertex, VertexWeights};
use crate::io::CsvRow;
use crate::oddminor::{bip_weighted_vc, hybrid_solve_with, max_bipartite_matching, sides_of};
use crate::oracle::{self, check, Problem};
use crate::treedec::Strategy;

/// Largest instance the suites run through the oracle.
pub const SUITE_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ptas,
    Gnc,
    Hybrid,
    Dp,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Ptas, Suite::Gnc, Suite::Hybrid, Suite::Dp];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ptas" => Ok(Suite::Ptas),
            "gnc" => Ok(Suite::Gnc),
            "hybrid" => Ok(Suite::Hybrid),
            "dp" => Ok(Suite::Dp),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance_id: usize,
    pub instance: String,
    pub algorithm: String,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub beta: Option<f64>,
    pub value: Option<u64>,
    pub oracle: Option<u64>,
    pub width: Option<usize>,
    pub table_entries: Option<u64>,
    pub passed: bool,
    /// Failure reason, empty on success.
    pub note: String,
    /// Only filled when timings are requested, so default output is stable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_us: Option<u64>,
}

impl BenchRecord {
    fn new(instance_id: usize, instance: &str, algorithm: &str) -> Self {
        BenchRecord {
            instance_id,
            instance: instance.to_string(),
            algorithm: algorithm.to_string(),
            t: None,
            k: None,
            beta: None,
            value: None,
            oracle: None,
            width: None,
            table_entries: None,
            passed: false,
            note: String::new(),
            wall_us: None,
        }
    }

    fn verdict(mut self, failure: Option<String>) -> Self {
        self.passed = failure.is_none();
        self.note = failure.unwrap_or_default();
        self
    }

    fn with_solution(mut self, sol: &DpSolution) -> Self {
        self.value = Some(sol.value);
        self.width = Some(sol.stats.width);
        self.table_entries = Some(sol.stats.table_entries);
        self
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl CsvRow for BenchRecord {
    fn header() -> &'static [&'static str] {
        &[
            "instance_id", "instance", "algorithm", "t", "k", "beta", "value", "oracle", "width", "table_entries",
            "passed", "note", "wall_us",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.instance_id.to_string(),
            self.instance.clone(),
            self.algorithm.clone(),
            opt(&self.t),
            opt(&self.k),
            opt(&self.beta),
            opt(&self.value),
            opt(&self.oracle),
            opt(&self.width),
            opt(&self.table_entries),
            self.passed.to_string(),
            self.note.clone(),
            opt(&self.wall_us),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BenchOptions {
    pub exec: Exec,
    pub timings: bool,
}

pub fn bench_run(suite: Suite, seed: u64) -> Vec<BenchRecord> {
    bench_run_with(suite, seed, BenchOptions::default())
}

/// Runs a suite; instances are spread over `exec` and the output is ordered
/// by instance id whatever the schedule.
pub fn bench_run_with(suite: Suite, seed: u64, opts: BenchOptions) -> Vec<BenchRecord> {
    let timed = |f: &dyn Fn() -> Vec<BenchRecord>| {
        let start = Instant::now();
        let mut recs = f();
        if opts.timings {
            let us = start.elapsed().as_micros() as u64;
            for r in &mut recs {
                r.wall_us = Some(us);
            }
        }
        recs
    };
    let batches: Vec<Vec<BenchRecord>> = match suite {
        Suite::Dp => {
            let items = dp_instances(seed, SUITE_MAX_N);
            opts.exec.map(items, |d| timed(&|| dp_records(&d)))
        }
        Suite::Ptas => opts.exec.map(small_corpus(seed), |inst| timed(&|| ptas_records(&inst))),
        Suite::Gnc => opts.exec.map(small_corpus(seed), |inst| timed(&|| gnc_records(&inst))),
        Suite::Hybrid => {
            let mut items: Vec<HybridItem> = small_corpus(seed).into_iter().map(HybridItem::Corpus).collect();
            let base = items.len();
            items.extend((0..KONIG_GRAPHS).map(|i| HybridItem::Konig(base + i, seed)));
            opts.exec.map(items, |item| timed(&|| hybrid_records(&item)))
        }
    };
    batches.into_iter().flatten().collect()
}

pub fn all_passed(records: &[BenchRecord]) -> bool {
    records.iter().all(|r| r.passed)
}

fn small_corpus(seed: u64) -> Vec<Instance> {
    corpus(seed).into_iter().filter(|i| i.graph.n() <= SUITE_MAX_N).collect()
}

fn compare(value: u64, opt: u64, sound: bool) -> Option<String> {
    if !sound {
        Some("certificate does not match value".into())
    } else if value != opt {
        Some(format!("value {value} differs from optimum {opt}"))
    } else {
        None
    }
}

fn dp_records(d: &crate::corpus::DpInstance) -> Vec<BenchRecord> {
    let g = &d.graph;
    let ntd = nice_decompose(g, Strategy::MinFill);
    let all: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    let rec = |alg: &str| BenchRecord::new(d.id, &d.name, alg);

    let mut run = |alg: &str, sol: Result<DpSolution>, truth: Result<u64>, sound: &dyn Fn(&DpSolution) -> bool| {
        let r = rec(alg);
        out.push(match (sol, truth) {
            (Ok(sol), Ok(opt)) => {
                let mut r = r.with_solution(&sol);
                r.oracle = Some(opt);
                let verdict = compare(sol.value, opt, sound(&sol));
                r.verdict(verdict)
            }
            (Err(e), _) | (_, Err(e)) => r.verdict(Some(e.to_string())),
        });
    };
    let verts = |s: &DpSolution| s.certificate.vertices().unwrap_or_default().to_vec();

    run(
        "wis",
        solve_wis(g, &d.weights, &ntd, &d.forced),
        oracle::max_weight_is(g, &d.weights, &d.forced).map(|r| r.0),
        &|s| {
            let set = verts(s);
            check::is_independent(g, &set) && check::respects(&set, &d.forced) && check::weight_of(&d.weights, &set) == s.value
        },
    );
    run(
        "wvc",
        solve_wvc(g, &d.weights, &ntd, &d.forced),
        oracle::min_weight_vc(g, &d.weights, &d.forced).map(|r| r.0),
        &|s| {
            let set = verts(s);
            check::is_vertex_cover(g, &set) && check::respects(&set, &d.forced) && check::weight_of(&d.weights, &set) == s.value
        },
    );
    run(
        "maxcut",
        solve_maxcut(g, &d.edge_weights, &ntd),
        oracle::max_cut(g, &d.edge_weights).map(|r| r.0),
        &|s| matches!(&s.certificate, Certificate::Bipartition(side) if check::cut_weight(g, &d.edge_weights, side) == s.value),
    );
    if d.forced.is_empty() && d.weights == VertexWeights::unit(g.n()) {
        run(
            "ds",
            solve_ds(g, &ntd, &all),
            oracle::min_dominating_set(g, &all).map(|r| r.0),
            &|s| check::dominates(g, &verts(s), &all) && verts(s).len() as u64 == s.value,
        );
        run(
            "chromatic",
            chromatic_number(g, &ntd),
            oracle::chromatic_number(g).map(|r| r.0),
            &|s| {
                matches!(&s.certificate, Certificate::Coloring(c)
                    if check::is_proper_coloring(g, c) && check::colors_used(c) as u64 == s.value)
            },
        );
    }
    out
}

fn ptas_records(inst: &Instance) -> Vec<BenchRecord> {
    let g = &inst.graph;
    let n = g.n();
    let all: Vec<Vertex> = g.vertices().collect();
    let unit = VertexWeights::unit(n);
    let (opt_is, opt_cut, opt_ds) = match (
        oracle::max_weight_is(g, &unit, &ForcedSets::none()),
        oracle::max_cut(g, &EdgeWeights::unit()),
        oracle::min_dominating_set(g, &all),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a.0, b.0, c.0),
        _ => return vec![BenchRecord::new(inst.id, &inst.name, "ptas").verdict(Some("oracle failed".into()))],
    };
    let mut out = Vec::new();
    for t in [3, 4] {
        // width cap n never binds: the suite measures the bound, not the cap
        let cfg = PtasConfig::new(t, n.max(1)).with_exec(Exec::Sequential);
        let cases: [(&str, u64, Result<_>); 3] = [
            ("ptas-is", opt_is, ptas_is(g, &unit, &cfg)),
            ("ptas-maxcut", opt_cut, ptas_maxcut(g, &EdgeWeights::unit(), &cfg)),
            ("ptas-ds", opt_ds, ptas_domset(g, &cfg)),
        ];
        for (alg, opt, res) in cases {
            let mut r = BenchRecord::new(inst.id, &inst.name, alg);
            r.t = Some(t);
            r.oracle = Some(opt);
            let r = match res {
                Ok((sol, rep)) => {
                    let mut r = r.with_solution(&sol);
                    r.width = rep.widths.iter().copied().max();
                    let sound = match (&sol.certificate, alg) {
                        (Certificate::Vertices(s), "ptas-is") => {
                            check::is_independent(g, s) && check::weight_of(&unit, s) == sol.value
                        }
                        (Certificate::Vertices(s), "ptas-ds") => check::dominates(g, s, &all) && s.len() as u64 == sol.value,
                        (Certificate::Bipartition(side), _) => check::cut_weight(g, &EdgeWeights::unit(), side) == sol.value,
                        _ => false,
                    };
                    let verdict = if !sound {
                        Some("certificate does not match value".into())
                    } else if !rep.guarantee.holds(sol.value, opt) {
                        Some(format!("value {} misses bound {} (optimum {opt})", sol.value, rep.guarantee.bound(opt)))
                    } else {
                        None
                    };
                    r.verdict(verdict)
                }
                Err(e) => r.verdict(Some(e.to_string())),
            };
            out.push(r);
        }
    }
    out
}

pub const GNC_BETAS: [f64; 3] = [0.0, 1.0, 8.0];
pub const GNC_KERNELS: [KernelChoice; 3] = [KernelChoice::Buss, KernelChoice::Nt, KernelChoice::Both];

fn kernel_name(k: KernelChoice) -> &'static str {
    match k {
        KernelChoice::Buss => "buss",
        KernelChoice::Nt => "nt",
        KernelChoice::Both => "both",
    }
}

/// Structural and equivalence checks on one kernelization.
fn check_kernel(g: &Graph, k: usize, choice: KernelChoice, vc: u64) -> Option<String> {
    match kernelize(g, k, choice) {
        KernelOutcome::NoInstance { .. } => (vc <= k as u64).then(|| format!("kernel rejects but optimum is {vc}")),
        KernelOutcome::Reduced(r) => {
            if r.k_prime > k {
                return Some(format!("k' = {} exceeds k", r.k_prime));
            }
            if r.vmap.windows(2).any(|w| w[0] >= w[1]) || r.vmap.iter().any(|&v| v >= g.n() || r.forced_in.contains(&v)) {
                return Some("kernel vertex map is not a sorted subset".into());
            }
            if g.induced_subgraph(&r.vmap).0 != r.graph {
                return Some("kernel is not an induced subgraph".into());
            }
            if !check::is_vertex_cover(g, &[r.forced_in.clone(), r.vmap.clone()].concat()) {
                return Some("deleted vertices leave an edge uncovered".into());
            }
            if matches!(choice, KernelChoice::Nt | KernelChoice::Both) && r.graph.n() > 2 * r.k_prime {
                return Some(format!("LP kernel has {} > 2k' vertices", r.graph.n()));
            }
            if r.forced_in.len() + r.k_prime != k {
                return Some("budget accounting broken".into());
            }
            let inner = oracle::min_weight_vc(&r.graph, &VertexWeights::unit(r.graph.n()), &ForcedSets::none());
            match inner {
                Ok((kv, _)) if (kv <= r.k_prime as u64) != (vc <= k as u64) => {
                    Some(format!("kernel answer differs: kernel optimum {kv} vs k' {}, optimum {vc} vs k {k}", r.k_prime))
                }
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            }
        }
    }
}

fn gnc_records(inst: &Instance) -> Vec<BenchRecord> {
    let g = &inst.graph;
    let vc = match oracle::min_weight_vc(g, &VertexWeights::unit(g.n()), &ForcedSets::none()) {
        Ok((v, _)) => v,
        Err(e) => return vec![BenchRecord::new(inst.id, &inst.name, "gnc").verdict(Some(e.to_string()))],
    };
    let mut out = Vec::new();
    for k in 0..=g.n() {
        for choice in GNC_KERNELS {
            let mut r = BenchRecord::new(inst.id, &inst.name, &format!("kernel-{}", kernel_name(choice)));
            r.k = Some(k);
            r.oracle = Some(vc);
            out.push(r.verdict(check_kernel(g, k, choice, vc)));
            for beta in GNC_BETAS {
                let mut r = BenchRecord::new(inst.id, &inst.name, &format!("gnc-{}", kernel_name(choice)));
                r.k = Some(k);
                r.beta = Some(beta);
                r.oracle = Some(vc);
                let cfg = GncConfig { beta, width_cap: GncConfig::default().width_cap, kernel: choice };
                let r = match gnc_solve_vc(g, k, &cfg) {
                    Ok(o) => {
                        r.value = Some(o.decision as u64);
                        r.width = o.report.decomposition_width;
                        let expect = vc <= k as u64;
                        let verdict = if o.decision != expect {
                            Some(format!("decided {} but optimum is {vc}", o.decision))
                        } else {
                            match &o.certificate {
                                Some(c) if !(check::is_vertex_cover(g, c) && c.len() <= k) => Some("bad certificate".into()),
                                None if o.decision => Some("yes without certificate".into()),
                                _ => None,
                            }
                        };
                        r.verdict(verdict)
                    }
                    Err(e) => r.verdict(Some(e.to_string())),
                };
                out.push(r);
            }
        }
    }
    out
}

/// Random bipartite graphs checked for min cover = max matching.
pub const KONIG_GRAPHS: usize = 200;

pub fn konig_graph(index: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x2545_f491_4f6c_dd1d));
    let a = rng.gen_range(1..=8);
    let b = rng.gen_range(1..=8);
    let p = rng.gen_range(0.1..0.9);
    GraphSpec::RandomBipartite { a, b, p, seed: rng.gen() }.build()
}

enum HybridItem {
    Corpus(Instance),
    Konig(usize, u64),
}

fn random_weights(n: usize, seed: u64, salt: usize) -> VertexWeights {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed ^ (salt as u64) << 20);
    VertexWeights((0..n).map(|_| rng.gen_range(0..10)).collect())
}

fn hybrid_records(item: &HybridItem) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    match item {
        HybridItem::Konig(id, seed) => {
            let g = konig_graph(*id, *seed);
            let mut r = BenchRecord::new(*id, &format!("konig-{id}"), "konig");
            let unit = VertexWeights::unit(g.n());
            let res = sides_of(&g).and_then(|s| {
                let m = max_bipartite_matching(&g, &s)?;
                let cover = bip_weighted_vc(&g, &s, &unit, &ForcedSets::none())?;
                Ok((m.len() as u64, cover))
            });
            out.push(match res {
                Ok((matching, cover)) => {
                    r = r.with_solution(&cover);
                    r.oracle = Some(matching);
                    let sound = cover.certificate.vertices().is_some_and(|c| check::is_vertex_cover(&g, c));
                    let verdict = compare(cover.value, matching, sound);
                    r.verdict(verdict)
                }
                Err(e) => r.verdict(Some(e.to_string())),
            });
        }
        HybridItem::Corpus(inst) => {
            let g = &inst.graph;
            let weightings = [VertexWeights::unit(g.n()), random_weights(g.n(), inst.id as u64, inst.id)];
            if inst.tags.bipartite {
                for (wi, w) in weightings.iter().enumerate() {
                    let r = BenchRecord::new(inst.id, &inst.name, &format!("bip-vc-w{wi}"));
                    let truth = oracle::min_weight_vc(g, w, &ForcedSets::none()).map(|x| x.0);
                    let sol = sides_of(g).and_then(|s| bip_weighted_vc(g, &s, w, &ForcedSets::none()));
                    out.push(exact_record(r, sol, truth, |s| {
                        s.certificate.vertices().is_some_and(|c| check::is_vertex_cover(g, c) && check::weight_of(w, c) == s.value)
                    }));
                }
            }
            if let Some(pd) = &inst.pieces {
                for (wi, w) in weightings.iter().enumerate() {
                    for problem in [Problem::Vc, Problem::Is] {
                        let r = BenchRecord::new(inst.id, &inst.name, &format!("hybrid-{problem}-w{wi}"));
                        let sol = hybrid_solve_with(g, pd, problem, w, SUITE_MAX_N, Exec::Sequential);
                        let truth = match problem {
                            Problem::Vc => oracle::min_weight_vc(g, w, &ForcedSets::none()),
                            _ => oracle::max_weight_is(g, w, &ForcedSets::none()),
                        }
                        .map(|x| x.0);
                        out.push(exact_record(r, sol, truth, |s| {
                            s.certificate.vertices().is_some_and(|c| {
                                let shape = match problem {
                                    Problem::Vc => check::is_vertex_cover(g, c),
                                    _ => check::is_independent(g, c),
                                };
                                shape && check::weight_of(w, c) == s.value
                            })
                        }));
                    }
                }
            }
        }
    }
    out
}

fn exact_record(r: BenchRecord, sol: Result<DpSolution>, truth: Result<u64>, sound: impl Fn(&DpSolution) -> bool) -> BenchRecord {
    match (sol, truth) {
        (Ok(sol), Ok(opt)) => {
            let mut r = r.with_solution(&sol);
            r.oracle = Some(opt);
            let verdict = compare(sol.value, opt, sound(&sol));
            r.verdict(verdict)
        }
        (Err(e), _) | (_, Err(e)) => r.verdict(Some(e.to_string())),
    }
}
