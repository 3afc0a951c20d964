//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process fails if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use minorfree::baker::{baker_partition, decompose_two_parts, deletion_widths, two_part_color};
use minorfree::bench::{all_passed, bench_run, BenchRecord, Suite, KONIG_GRAPHS};
use minorfree::corpus::corpus;
use minorfree::gnc::{kernel_vc_nt, KernelOutcome};
use minorfree::graph::{GraphSpec, TwoColoring};
use minorfree::minor::has_odd_minor;
use minorfree::oracle::{self, check};
use minorfree::treedec::{heuristic_decompose, Strategy};

const SEED: u64 = 1;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn failures(records: &[BenchRecord]) -> String {
    let bad: Vec<String> = records
        .iter()
        .filter(|r| !r.passed)
        .take(5)
        .map(|r| format!("{} {} k={:?} t={:?}: {}", r.instance, r.algorithm, r.k, r.t, r.note))
        .collect();
    format!("{} failing records, first: {}", records.iter().filter(|r| !r.passed).count(), bad.join("; "))
}

fn suite_outcome(records: &[BenchRecord], summary: String) -> Outcome {
    if all_passed(records) {
        Ok(summary)
    } else {
        Err(failures(records))
    }
}

fn dp_oracle_equivalence() -> Outcome {
    let records = bench_run(Suite::Dp, SEED);
    let instances: BTreeSet<usize> = records.iter().map(|r| r.instance_id).collect();
    let algorithms: BTreeSet<&str> = records.iter().map(|r| r.algorithm.as_str()).collect();
    if instances.len() < 500 {
        return Err(format!("only {} instances", instances.len()));
    }
    if algorithms.len() != 5 {
        return Err(format!("engines exercised: {algorithms:?}"));
    }
    suite_outcome(&records, format!("{} instances, {} solver runs exact", instances.len(), records.len()))
}

fn partition_soundness() -> Outcome {
    let mut checked = 0;
    let mut widest = 0;
    for inst in corpus(SEED) {
        let g = &inst.graph;
        for t in 2..=4 {
            let p = baker_partition(g, t, None).map_err(|e| format!("{}: {e}", inst.name))?;
            p.check(g).map_err(|e| format!("{} t={t}: {e}", inst.name))?;
            if p.classes.iter().map(Vec::len).sum::<usize>() != g.n() {
                return Err(format!("{} t={t}: classes do not cover", inst.name));
            }
            if inst.tags.grid {
                for (shift, w) in deletion_widths(g, &p, Strategy::MinFill).into_iter().enumerate() {
                    if w > 3 * t - 1 {
                        return Err(format!("{} t={t} shift {shift}: width {w} > {}", inst.name, 3 * t - 1));
                    }
                    widest = widest.max(w);
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions sound, widest grid deletion width {widest}"))
}

fn ptas_bounds() -> Outcome {
    let records = bench_run(Suite::Ptas, SEED);
    let ts: BTreeSet<usize> = records.iter().filter_map(|r| r.t).collect();
    if ts != BTreeSet::from([3, 4]) {
        return Err(format!("t values {ts:?}"));
    }
    let tight = records.iter().filter(|r| r.value == r.oracle).count();
    suite_outcome(&records, format!("{} runs within bound, {tight} optimal", records.len()))
}

fn two_part_coloring() -> Outcome {
    let mut checked = 0;
    for inst in corpus(SEED).into_iter().filter(|i| i.graph.n() <= 14) {
        let g = &inst.graph;
        let (chi, _) = oracle::chromatic_number(g).map_err(|e| e.to_string())?;
        let (a, b) = decompose_two_parts(g);
        let (color, rep) = two_part_color(g, (&a, &b), g.n().max(1)).map_err(|e| format!("{}: {e}", inst.name))?;
        if !check::is_proper_coloring(g, &color) {
            return Err(format!("{}: improper coloring", inst.name));
        }
        let used = check::colors_used(&color) as u64;
        if used > 2 * chi || rep.value != used {
            return Err(format!("{}: {used} colors, chromatic number {chi}", inst.name));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs colored within twice the chromatic number"))
}

fn guess_and_conquer() -> Outcome {
    let records = bench_run(Suite::Gnc, SEED);
    let decisions = records.iter().filter(|r| r.algorithm.starts_with("gnc-")).count();
    let kernels = records.len() - decisions;
    suite_outcome(&records, format!("{decisions} decisions and {kernels} kernels agree with brute force"))
}

fn kernel_width_envelope() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for rows in 2..=10 {
        for cols in rows..=10 {
            let g = GraphSpec::Grid { rows, cols }.build();
            for k in 0..=50 {
                let KernelOutcome::Reduced(r) = kernel_vc_nt(&g, k) else { continue };
                let kv = r.graph.n();
                if kv == 0 {
                    continue;
                }
                let w = heuristic_decompose(&r.graph, Strategy::MinFill).width();
                let c = w as f64 / (kv as f64).sqrt();
                worst = worst.max(c);
                if c > 4.0 {
                    return Err(format!("grid {rows}x{cols} k={k}: width {w} on {kv} kernel vertices"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} kernels, width <= {worst:.3} * sqrt(kernel vertices)"))
}

fn bipartite_layer() -> Outcome {
    let records = bench_run(Suite::Hybrid, SEED);
    let count = |prefix: &str| records.iter().filter(|r| r.algorithm.starts_with(prefix)).count();
    if count("konig") != KONIG_GRAPHS {
        return Err(format!("{} matching checks", count("konig")));
    }
    let composites = corpus(SEED).iter().filter(|i| i.pieces.is_some() && i.graph.n() <= 16).count();
    if count("hybrid") != composites * 4 {
        return Err(format!("{} hybrid runs for {composites} composites", count("hybrid")));
    }
    suite_outcome(
        &records,
        format!("{} matching, {} weighted cover, {} hybrid runs exact", count("konig"), count("bip-vc"), count("hybrid")),
    )
}

fn odd_k3_iff_nonbipartite() -> Outcome {
    let k3 = GraphSpec::Complete(3).build();
    let mut checked = 0;
    for inst in corpus(SEED).into_iter().filter(|i| i.graph.n() <= 12) {
        let odd = has_odd_minor(&inst.graph, &k3).map_err(|e| e.to_string())?;
        if odd == matches!(inst.graph.two_coloring(), TwoColoring::Bipartite(_)) {
            return Err(format!("{}: odd K3 minor {odd}", inst.name));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("dp engines match brute force", dp_oracle_equivalence),
        ("layer partitions are sound", partition_soundness),
        ("shifting approximations meet their bounds", ptas_bounds),
        ("two-part coloring within factor two", two_part_coloring),
        ("guess-and-conquer decisions and kernels", guess_and_conquer),
        ("LP kernel width envelope on grids", kernel_width_envelope),
        ("bipartite and hybrid solvers exact", bipartite_layer),
        ("odd K3 minor iff non-bipartite", odd_k3_iff_nonbipartite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
