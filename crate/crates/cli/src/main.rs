use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hfw_core::bounds::best_known;
use hfw_core::constructions as cons;
use hfw_core::graph_class::{enumerate_graphs, read_graph6_corpus, verify_corpus};
use hfw_core::hypergraph::HypergraphJson;
use hfw_core::plane::PlaneJson;
use hfw_core::search::{self, AnnealParams, ExactOptions, Verdict};
use hfw_core::{EdgeColoring, ProjectivePlane, UniformHypergraph};

// stdout closed early (e.g. piped into `head`) ends the process quietly
macro_rules! println {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(e.into());
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "hfw",
    version,
    about = "Maximal monochromatic cliques in hypergraph factorizations"
)]
struct Cli {
    /// Worker threads for parallel searches and corpus runs.
    #[arg(long, global = true, env = "HFW_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// q+1 colours on the q² points off a line.
    #[value(name = "plane-affine", alias = "t17")]
    T17,
    /// q colours on q²+1 points, one point in a single clique per colour.
    #[value(name = "plane-pointed", alias = "t18")]
    T18,
    /// q+1 colours on the q²-q points off two lines.
    #[value(name = "plane-punctured", alias = "t19a")]
    T19a,
    /// (n-1)-uniform, t colours, by missing vertex.
    Turan,
    #[value(alias = "bipartite3")]
    Bipartite,
    #[value(alias = "parity3")]
    Parity,
    Fano,
    Octahedron,
    /// Triple systems grown from the Fano plane.
    #[value(name = "tower-fano", alias = "tower11")]
    Tower11,
    /// Triple systems grown from the complemented octahedron system.
    #[value(name = "tower-octahedron", alias = "tower12")]
    Tower12,
    /// Certified upper-bound colouring for 3, 4 or 5 colours.
    Witness,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    Exact,
    Anneal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Structure of graphs with few maximal cliques and anticliques.
    #[value(name = "structure", alias = "thm34")]
    Structure,
    /// Compare a claimed value of f with an exhaustive search.
    Value,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a named construction as JSON.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score a colouring or hypergraph file (`-` for stdin).
    Score {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Best known bounds over a range of orders, e.g. `--n 10..16`.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustive or annealing search for f_r(t, n).
    Search {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: SearchMode,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Annealing moves per run.
        #[arg(long)]
        moves: Option<u64>,
        /// Independent annealing runs at consecutive seeds.
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Stop annealing once this total is reached.
        #[arg(long)]
        target: Option<usize>,
        /// Starting colouring for annealing.
        #[arg(long)]
        start: Option<PathBuf>,
        /// Disable vertex-permutation pruning in exact mode.
        #[arg(long)]
        no_orbit_pruning: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write the witness colouring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify graphs given as graph6 strings or a graph6 file.
    Classify {
        #[arg(long, conflicts_with = "input")]
        graph6: Vec<String>,
        input: Option<PathBuf>,
    },
    /// Check the structure theory over a corpus, or a claimed value of f.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Enumerate every graph up to this order.
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 corpus file instead of enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        claimed: Option<usize>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<f64>,
    },
    /// Build, extract or check projective planes.
    Plane {
        #[command(subcommand)]
        op: PlaneOp,
    },
}

#[derive(Subcommand)]
enum PlaneOp {
    /// The plane over GF(q).
    Build {
        #[arg(long)]
        q: u64,
    },
    /// Recover a plane from a colouring file.
    Extract { input: PathBuf },
    /// Check a plane file against the axioms.
    Check { input: PathBuf },
}

enum Outcome {
    Ok,
    Failed,
    Budget,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

/// A colouring, or a hypergraph scored as the pair (H, complement of H).
fn load_coloring(text: &str) -> anyhow::Result<EdgeColoring> {
    match EdgeColoring::from_json_str(text) {
        Ok(c) => Ok(c),
        Err(first) => match serde_json::from_str::<HypergraphJson>(text) {
            Ok(h) => Ok(EdgeColoring::from_hypergraph(&UniformHypergraph::from_json(&h)?)),
            Err(_) => Err(first.into()),
        },
    }
}

fn parse_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("bad order {x:?} in range {s:?}"))
    };
    let (a, b) = match s.split_once("..=") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => (parse(s)?, parse(s)?),
        },
    };
    if a > b || a == 0 {
        bail!("empty or invalid range {s:?}");
    }
    Ok((a, b))
}

fn need<T>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow!("--{flag} is required here"))
}

fn construct(
    family: Family,
    q: Option<u64>,
    n: Option<usize>,
    t: Option<usize>,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let coloring_out = |c: EdgeColoring| -> anyhow::Result<()> {
        eprintln!("total {}", c.total());
        emit(&serde_json::to_value(c.to_json())?, out)
    };
    let hypergraph_out = |h: UniformHypergraph| -> anyhow::Result<()> {
        eprintln!("total {}", EdgeColoring::from_hypergraph(&h).total());
        emit(&serde_json::to_value(h.to_json())?, out)
    };
    match family {
        Family::T17 => coloring_out(cons::coloring_t17(need(q, "q")?)?),
        Family::T18 => coloring_out(cons::coloring_t18(need(q, "q")?)?),
        Family::T19a => coloring_out(cons::coloring_t19a(need(q, "q")?)?),
        Family::Turan => coloring_out(cons::turan_factorization(need(n, "n")?, need(t, "t")?)?),
        Family::Bipartite => hypergraph_out(cons::bipartite_triple_system(need(n, "n")?)?),
        Family::Parity => hypergraph_out(cons::parity_triple_system(need(n, "n")?)?),
        Family::Fano => hypergraph_out(cons::fano()),
        Family::Octahedron => hypergraph_out(cons::octahedron_system()),
        Family::Tower11 => hypergraph_out(cons::tower(&cons::fano(), need(n, "n")?)?),
        Family::Tower12 => hypergraph_out(cons::tower(&cons::octahedron_system().complement(), need(n, "n")?)?),
        Family::Witness => coloring_out(cons::witness_upper(need(t, "t")?, need(n, "n")?)?.coloring),
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.cmd {
        Cmd::Construct { family, q, n, t, out } => {
            construct(family, q, n, t, out.as_deref())?;
        }
        Cmd::Score { input, format } => {
            let c = load_coloring(&read_input(&input)?)?;
            let rep = c.score();
            match format {
                Format::Json => emit(
                    &json!({ "n": c.n(), "r": c.r(), "t": c.t(), "perColor": rep.per_color, "total": rep.total }),
                    None,
                )?,
                Format::Text => {
                    for (i, v) in rep.per_color.iter().enumerate() {
                        println!("color {i}: {v}");
                    }
                    println!("total {}", rep.total);
                }
            }
        }
        Cmd::Bounds { r, t, n, format } => {
            let (a, b) = parse_range(&n)?;
            let records = (a..=b).map(|n| best_known(r, t, n)).collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json => emit(&serde_json::to_value(&records)?, None)?,
                Format::Text => {
                    println!(
                        "{:>4} {:>8} {:>8}  {:<6} {:<16} upper-source",
                        "n", "lower", "upper", "exact", "lower-source"
                    );
                    for b in records {
                        println!(
                            "{:>4} {:>8} {:>8}  {:<6} {:<16} {}",
                            b.n, b.lower, b.upper, b.exact, b.lower_source, b.upper_source
                        );
                    }
                }
            }
        }
        Cmd::Search {
            r,
            t,
            n,
            mode,
            budget_nodes,
            budget_seconds,
            seed,
            moves,
            runs,
            target,
            start,
            no_orbit_pruning,
            checkpoint,
            out,
        } => {
            let res = match mode {
                SearchMode::Exact => search::exact_f(
                    r,
                    t,
                    n,
                    &ExactOptions {
                        budget_nodes,
                        budget_seconds,
                        threads: cli.threads,
                        orbit_pruning: !no_orbit_pruning,
                        checkpoint,
                    },
                )?,
                SearchMode::Anneal => {
                    let start = start
                        .map(|p| read_input(&p).and_then(|s| load_coloring(&s)))
                        .transpose()?;
                    let mut params = AnnealParams {
                        seed,
                        budget_seconds,
                        target,
                        ..Default::default()
                    };
                    if let Some(m) = moves {
                        params.moves = m;
                    }
                    search::heuristic_upper_seeds(r, t, n, start.as_ref(), &params, runs)?
                }
            };
            if let Some(p) = &out {
                emit(&serde_json::to_value(res.witness.to_json())?, Some(p))?;
            }
            emit(&serde_json::to_value(res.to_json())?, None)?;
            if mode == SearchMode::Exact && !res.proved {
                eprintln!("budget exhausted; best found {}", res.value);
                return Ok(Outcome::Budget);
            }
        }
        Cmd::Classify { graph6, input } => {
            let graphs = match input {
                Some(p) => read_graph6_corpus(&read_input(&p)?)?,
                None if !graph6.is_empty() => read_graph6_corpus(&graph6.join("\n"))?,
                None => bail!("give graph6 strings with --graph6 or an input file"),
            };
            let records = graphs
                .iter()
                .map(hfw_core::graph_class::classify)
                .collect::<Result<Vec<_>, _>>()?;
            emit(&serde_json::to_value(&records)?, None)?;
        }
        Cmd::Verify {
            suite,
            max_n,
            corpus,
            r,
            t,
            n,
            claimed,
            budget_nodes,
            budget_seconds,
        } => match suite {
            Suite::Structure => {
                let graphs = match (corpus, max_n) {
                    (Some(p), None) => read_graph6_corpus(&read_input(&p)?)?,
                    (None, Some(m)) => {
                        let mut all = Vec::new();
                        for k in 1..=m {
                            all.extend(enumerate_graphs(k)?);
                        }
                        all
                    }
                    _ => bail!("give exactly one of --corpus and --max-n"),
                };
                let rep = verify_corpus(&graphs)?;
                emit(&serde_json::to_value(&rep)?, None)?;
                if !rep.violations.is_empty() {
                    return Ok(Outcome::Failed);
                }
            }
            Suite::Value => {
                let opts = ExactOptions {
                    budget_nodes,
                    budget_seconds,
                    threads: cli.threads,
                    ..Default::default()
                };
                let v = search::verify_value(
                    need(r, "r")?,
                    need(t, "t")?,
                    need(n, "n")?,
                    need(claimed, "claimed")?,
                    &opts,
                )?;
                println!("{v}");
                match v {
                    Verdict::ProvedEqual { .. } => {}
                    Verdict::ProvedDifferent { .. } => return Ok(Outcome::Failed),
                    Verdict::Inconclusive { .. } => return Ok(Outcome::Budget),
                }
            }
        },
        Cmd::Plane { op } => match op {
            PlaneOp::Build { q } => emit(
                &serde_json::to_value(ProjectivePlane::desarguesian(q)?.to_json())?,
                None,
            )?,
            PlaneOp::Extract { input } => {
                let c = load_coloring(&read_input(&input)?)?;
                emit(&serde_json::to_value(cons::plane_from_coloring(&c)?.to_json())?, None)?;
            }
            PlaneOp::Check { input } => {
                let j: PlaneJson = serde_json::from_str(&read_input(&input)?)?;
                match ProjectivePlane::from_json(&j) {
                    Ok(p) => println!(
                        "ok: projective plane of order {} on {} points",
                        p.order(),
                        p.num_points()
                    ),
                    Err(e) => {
                        println!("not a plane: {e}");
                        return Ok(Outcome::Failed);
                    }
                }
            }
        },
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Ok(Outcome::Budget) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
