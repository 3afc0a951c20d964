use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorfree::baker::{baker_partition, decompose_two_parts, ptas_domset, ptas_is, ptas_maxcut, two_part_color, PtasConfig};
use minorfree::bench::{all_passed, bench_run_with, BenchOptions, Suite};
use minorfree::dp::{chromatic_number, nice_decompose, solve_ds, solve_maxcut, solve_wis, solve_wvc, Certificate, DpSolution, ForcedSets};
use minorfree::gnc::{gnc_solve_vc, GncConfig, KernelChoice};
use minorfree::io::{self, Format, SolutionDocument};
use minorfree::oddminor::{bip_weighted_is, bip_weighted_vc, hybrid_solve_with, sides_of, PieceDecomposition};
use minorfree::oracle::{self, Problem};
use minorfree::treedec::{exact_treewidth, heuristic_decompose, Strategy};
use minorfree::{EdgeWeights, Error, Exec, Graph, VertexWeights, WeightMap};
use serde_json::json;

#[derive(Parser)]
#[command(name = "minorfree", version, about = "Exact and approximate graph optimisation on sparse graph classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Graph file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
    /// Write the result here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Is,
    Vc,
    Ds,
    Maxcut,
    Chromatic,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Is => Problem::Is,
            ProblemArg::Vc => Problem::Vc,
            ProblemArg::Ds => Problem::Ds,
            ProblemArg::Maxcut => Problem::Maxcut,
            ProblemArg::Chromatic => Problem::Chromatic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    /// Tree decomposition dynamic programming.
    Dp,
    /// Min cut on a bipartite graph (is, vc).
    Bip,
    /// Exhaustive search.
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum PtasProblem {
    Is,
    Maxcut,
    Ds,
    /// Two-part coloring over even and odd BFS levels.
    Coloring,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    MinDegree,
    MinFill,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Both,
    Buss,
    Nt,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ptas,
    Gnc,
    Hybrid,
    Dp,
}

#[derive(Subcommand)]
enum Command {
    /// Tree decomposition and its width.
    Tw {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Order::MinFill)]
        strategy: Order,
        /// Exact treewidth (at most 18 vertices).
        #[arg(long)]
        exact: bool,
    },
    /// BFS layering grouped into residue classes.
    Partition {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        t: usize,
        /// BFS roots; defaults to the lowest vertex of each component.
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<usize>>,
    },
    /// Solve a problem exactly.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
        /// Weight file: "id value" or "u v value" lines.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        width_cap: usize,
    },
    /// Layered approximation.
    Ptas {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        problem: PtasProblem,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Defaults to 3t - 1.
        #[arg(long)]
        width_cap: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
    /// Decide vertex cover of size at most k.
    Gnc {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = KernelArg::Both)]
        kernel: KernelArg,
        #[arg(long, default_value_t = 25)]
        width_cap: usize,
    },
    /// Vertex cover or independent set over a piece decomposition.
    Oddminor {
        #[command(flatten)]
        common: Common,
        /// Piece decomposition JSON.
        #[arg(long)]
        pieces: PathBuf,
        #[arg(long, value_enum, default_value_t = ProblemArg::Vc)]
        problem: ProblemArg,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        width_cap: usize,
    },
    /// Brute-force optimum (at most 20 vertices).
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Run a benchmark suite against brute force.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Record wall time per instance (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        sequential: bool,
    },
}

/// Exit status for a failed run.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Json(_) => 4,
        e if e.is_cap() => 3,
        Error::Infeasible(_) => 2,
        _ => 1,
    }
}

struct Emit {
    body: String,
    code: u8,
}

impl Emit {
    fn ok(body: String) -> Self {
        Emit { body, code: 0 }
    }
}

fn load_graph(c: &Common) -> Result<Graph, Error> {
    let path = c.input.as_deref().ok_or_else(|| Error::InvalidArgument("--input is required".into()))?;
    let format = match c.format {
        FormatArg::Edgelist => Format::Edgelist,
        FormatArg::Dimacs => Format::Dimacs,
    };
    io::parse_graph(path, format)
}

fn load_weights(path: Option<&Path>, g: &Graph) -> Result<Option<WeightMap>, Error> {
    path.map(|p| io::parse_weights(&std::fs::read_to_string(p)?, g)).transpose()
}

fn vertex_weights(w: &Option<WeightMap>, g: &Graph) -> Result<VertexWeights, Error> {
    match w {
        None => Ok(VertexWeights::unit(g.n())),
        Some(WeightMap::Vertex(v)) => Ok(v.clone()),
        Some(WeightMap::Edge(_)) => Err(Error::InvalidArgument("this problem takes vertex weights".into())),
    }
}

fn edge_weights(w: &Option<WeightMap>) -> Result<EdgeWeights, Error> {
    match w {
        None => Ok(EdgeWeights::unit()),
        Some(WeightMap::Edge(e)) => Ok(e.clone()),
        Some(WeightMap::Vertex(_)) => Err(Error::InvalidArgument("maxcut takes edge weights".into())),
    }
}

fn certificate_text(c: &Certificate) -> String {
    let list = |xs: Vec<String>| xs.join(" ");
    match c {
        Certificate::Vertices(v) => format!("vertices: {}", list(v.iter().map(ToString::to_string).collect())),
        Certificate::Bipartition(s) => format!("sides: {}", list(s.iter().map(ToString::to_string).collect())),
        Certificate::Coloring(c) => format!("colors: {}", list(c.iter().map(ToString::to_string).collect())),
    }
}

fn solution(problem: &str, sol: &DpSolution, json: bool) -> Result<String, Error> {
    if json {
        io::to_json(&SolutionDocument::new(problem, sol))
    } else {
        Ok(format!(
            "{problem} {}\n{}\nwidth {} nodes {} table_entries {}\n",
            sol.value,
            certificate_text(&sol.certificate),
            sol.stats.width,
            sol.stats.nodes,
            sol.stats.table_entries
        ))
    }
}

fn solve_dp(g: &Graph, problem: Problem, w: &Option<WeightMap>, cap: usize) -> Result<DpSolution, Error> {
    let ntd = nice_decompose(g, Strategy::MinFill);
    if ntd.width() > cap {
        return Err(Error::WidthCap { width: ntd.width(), cap });
    }
    let all: Vec<usize> = g.vertices().collect();
    match problem {
        Problem::Is => solve_wis(g, &vertex_weights(w, g)?, &ntd, &ForcedSets::none()),
        Problem::Vc => solve_wvc(g, &vertex_weights(w, g)?, &ntd, &ForcedSets::none()),
        Problem::Ds => solve_ds(g, &ntd, &all),
        Problem::Maxcut => solve_maxcut(g, &edge_weights(w)?, &ntd),
        Problem::Chromatic => chromatic_number(g, &ntd),
    }
}

fn run(cmd: Command) -> Result<(Emit, Option<PathBuf>), Error> {
    let (emit, output) = match cmd {
        Command::Tw { common, strategy, exact } => {
            let g = load_graph(&common)?;
            let td = if exact {
                exact_treewidth(&g)?.1
            } else {
                let s = match strategy {
                    Order::MinDegree => Strategy::MinDegree,
                    Order::MinFill => Strategy::MinFill,
                };
                heuristic_decompose(&g, s)
            };
            let body = if common.json {
                io::to_json(&td)?
            } else {
                let mut s = format!("width {}\nbags {}\n", td.width(), td.len());
                for (i, bag) in td.bags.iter().enumerate() {
                    let _ = writeln!(s, "{i}: {bag:?}");
                }
                s
            };
            (Emit::ok(body), common.output)
        }
        Command::Partition { common, t, roots } => {
            let g = load_graph(&common)?;
            let p = baker_partition(&g, t, roots.as_deref())?;
            let body = if common.json {
                io::to_json(&p)?
            } else {
                let mut s = format!("t {t} levels {}\n", p.levels.max_level() + usize::from(g.n() > 0));
                for (i, c) in p.classes.iter().enumerate() {
                    let _ = writeln!(s, "class {i} ({}): {c:?}", c.len());
                }
                s
            };
            (Emit::ok(body), common.output)
        }
        Command::Solve { common, problem, engine, weights, width_cap } => {
            let g = load_graph(&common)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let problem = Problem::from(problem);
            let sol = match engine {
                Engine::Dp => solve_dp(&g, problem, &w, width_cap)?,
                Engine::Bip => {
                    let sides = sides_of(&g)?;
                    let vw = vertex_weights(&w, &g)?;
                    match problem {
                        Problem::Vc => bip_weighted_vc(&g, &sides, &vw, &ForcedSets::none())?,
                        Problem::Is => bip_weighted_is(&g, &sides, &vw, &ForcedSets::none())?,
                        p => return Err(Error::InvalidArgument(format!("the bip engine solves is and vc, not {p}"))),
                    }
                }
                Engine::Oracle => {
                    let r = oracle::oracle(problem, &g, w.as_ref())?;
                    DpSolution { value: r.value, certificate: r.certificate, stats: Default::default() }
                }
            };
            (Emit::ok(solution(problem.name(), &sol, common.json)?), common.output)
        }
        Command::Ptas { common, problem, t, weights, width_cap, sequential } => {
            let g = load_graph(&common)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let cap = width_cap.unwrap_or_else(|| minorfree::baker::default_width_cap(t));
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let cfg = PtasConfig::new(t, cap).with_exec(exec);
            let (name, sol, report) = match problem {
                PtasProblem::Is => {
                    let (s, r) = ptas_is(&g, &vertex_weights(&w, &g)?, &cfg)?;
                    ("is", s, r)
                }
                PtasProblem::Maxcut => {
                    let (s, r) = ptas_maxcut(&g, &edge_weights(&w)?, &cfg)?;
                    ("maxcut", s, r)
                }
                PtasProblem::Ds => {
                    let (s, r) = ptas_domset(&g, &cfg)?;
                    ("ds", s, r)
                }
                PtasProblem::Coloring => {
                    let (a, b) = decompose_two_parts(&g);
                    let (colors, r) = two_part_color(&g, (&a, &b), cap)?;
                    let sol = DpSolution { value: r.value, certificate: Certificate::Coloring(colors), stats: Default::default() };
                    ("coloring", sol, r)
                }
            };
            let body = if common.json {
                io::to_json(&json!({ "solution": SolutionDocument::new(name, &sol), "report": report }))?
            } else {
                format!(
                    "{name} {} (shift {}, factor {}/{})\n{}\nwidths {:?}\n",
                    sol.value,
                    report.shift,
                    report.guarantee.num,
                    report.guarantee.den,
                    certificate_text(&sol.certificate),
                    report.widths
                )
            };
            (Emit::ok(body), common.output)
        }
        Command::Gnc { common, k, beta, kernel, width_cap } => {
            let g = load_graph(&common)?;
            let kernel = match kernel {
                KernelArg::Both => KernelChoice::Both,
                KernelArg::Buss => KernelChoice::Buss,
                KernelArg::Nt => KernelChoice::Nt,
            };
            let out = gnc_solve_vc(&g, k, &GncConfig { beta, width_cap, kernel })?;
            let body = if common.json {
                io::to_json(&out)?
            } else {
                let r = &out.report;
                let mut s = format!("{}\n", if out.decision { "yes" } else { "no" });
                if let Some(c) = &out.certificate {
                    let _ = writeln!(s, "cover: {c:?}");
                }
                let _ = writeln!(
                    s,
                    "regime {:?} method {:?} kernel_vertices {} k' {:?} width {:?}",
                    r.regime, r.method, r.kernel_vertices, r.k_prime, r.decomposition_width
                );
                s
            };
            (Emit { body, code: if out.decision { 0 } else { 2 } }, common.output)
        }
        Command::Oddminor { common, pieces, problem, weights, width_cap } => {
            let g = load_graph(&common)?;
            let pd: PieceDecomposition = serde_json::from_str(&std::fs::read_to_string(&pieces)?)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let problem = Problem::from(problem);
            let sol = hybrid_solve_with(&g, &pd, problem, &vertex_weights(&w, &g)?, width_cap, Exec::Parallel)?;
            (Emit::ok(solution(problem.name(), &sol, common.json)?), common.output)
        }
        Command::Oracle { common, problem, weights } => {
            let g = load_graph(&common)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let r = oracle::oracle(problem.into(), &g, w.as_ref())?;
            let body = if common.json {
                io::to_json(&r)?
            } else {
                format!("{} {}\n{}\n", r.problem, r.value, certificate_text(&r.certificate))
            };
            (Emit::ok(body), common.output)
        }
        Command::Bench { common, suite, seed, timings, sequential } => {
            let suite = match suite {
                SuiteArg::Ptas => Suite::Ptas,
                SuiteArg::Gnc => Suite::Gnc,
                SuiteArg::Hybrid => Suite::Hybrid,
                SuiteArg::Dp => Suite::Dp,
            };
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let records = bench_run_with(suite, seed, BenchOptions { exec, timings });
            let body = if common.json { io::to_json(&records)? } else { io::to_csv(&records) };
            let failed = records.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                eprintln!("{failed} of {} records failed", records.len());
            }
            (Emit { body, code: if all_passed(&records) { 0 } else { 1 } }, common.output)
        }
    };
    Ok((emit, output))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((emit, output)) => {
            let written = match output {
                Some(path) => std::fs::write(&path, &emit.body).map_err(Error::from),
                None => {
                    print!("{}", emit.body);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(emit.code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code(&e))
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
