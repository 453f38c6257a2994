use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use simdim::generators::{self, GbOptions};
use simdim::theorems::{self, TheoremReport, Verdict};
use simdim::trees::{self, EdgeExchange};
use simdim::{Error, Graph, GraphFamily, VertexSet};

#[derive(Parser)]
#[command(name = "simdim", version, about = "Metric dimension of graphs and graph families")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Metric dimension of one graph.
    Dim {
        file: PathBuf,
        /// Graph to use when the file holds several.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Simultaneous metric dimension of a family.
    Sdim {
        file: PathBuf,
        /// Also print the member dimensions and the sandwich bounds.
        #[arg(long)]
        bounds: bool,
    },
    /// Tree formula, classification, interior bound and edge exchanges.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Generate families.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check a theorem on an input.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Dimension from the leg formula, with its witness.
    Dim {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Leaves, major vertices and the legs of each exterior major vertex.
    Classify {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Interior-vertex upper bound for a family of non-path trees.
    Bound {
        file: PathBuf,
    },
    /// Dimension change under `T + add - remove`.
    Exchange {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
        /// Edge to add, as `u,v`.
        #[arg(long)]
        add: String,
        /// Edge to remove, as `x,y`.
        #[arg(long)]
        remove: String,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Cycles on `1..n` in which every pair is antipodal exactly once.
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The family G_B of a graph and one of its metric bases.
    Gb {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated basis labels.
        #[arg(long)]
        basis: String,
        /// Enumerate fully up to this many candidates, sample above it.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
        #[arg(long)]
        connected_only: bool,
        /// Census destination; `-` for stdout. Defaults to stderr.
        #[arg(long)]
        census: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tree family from a hitting-set instance.
    Hsp {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremId {
    Twins,
    Sandwich,
    Diameter,
    CommonPath,
    Paths,
    Cycles,
    TreeBound,
    ExchangeBound,
    Gb,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    id: TheoremId,
    file: PathBuf,
    /// Basis labels for `gb`.
    #[arg(long)]
    basis: Option<String>,
    /// Number of sampled members for `gb`.
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Violated(String),
    Usage(String),
    Input(String),
    Closed,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violated(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Closed => 0,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Violated(m) | Failure::Usage(m) | Failure::Input(m) => m,
            Failure::Closed => "",
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidExchange(_) | Error::InvalidExchangeStep { .. } | Error::BoundViolated(_) => {
                Failure::Violated(e.to_string())
            }
            Error::InvalidArgument(_) | Error::UnknownGraph(_) => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = Output { format: cli.format };
    match &cli.command {
        Command::Dim { file, graph } => cmd_dim(&out, file, graph.as_deref()),
        Command::Sdim { file, bounds } => cmd_sdim(&out, file, *bounds),
        Command::Tree(t) => cmd_tree(&out, t),
        Command::Gen(g) => cmd_gen(&out, g, cli.seed),
        Command::Verify(v) => cmd_verify(&out, v, cli.seed),
    }
}

struct Output {
    format: Format,
}

impl Output {
    /// Prints `lines` as text, or `doc` as one JSON document.
    fn emit(&self, lines: &[String], doc: Value) -> Outcome {
        let mut stdout = io::stdout().lock();
        let written = match self.format {
            Format::Text => lines.iter().try_for_each(|l| writeln!(stdout, "{l}")),
            Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).expect("serializable")),
        };
        written.map_err(write_failure)
    }
}

/// A closed stdout (`simdim ... | head`) ends the command quietly.
fn write_failure(e: io::Error) -> Failure {
    if e.kind() == io::ErrorKind::BrokenPipe {
        Failure::Closed
    } else {
        Failure::Input(format!("writing output: {e}"))
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<GraphFamily, Failure> {
    let text = read_input(path)?;
    simdim::parse_family(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn pick_graph(fam: &GraphFamily, name: Option<&str>) -> Result<Graph, Failure> {
    match name {
        Some(n) => fam
            .get(n)
            .cloned()
            .ok_or_else(|| Failure::Usage(format!("no graph named `{n}` in {}", fam.name()))),
        None if fam.len() == 1 => Ok(fam.members()[0].clone()),
        None => {
            let names: Vec<&str> = fam.members().iter().map(Graph::name).collect();
            Err(Failure::Usage(format!("file holds several graphs, pick one with --graph: {}", names.join(", "))))
        }
    }
}

fn label_list(fam_universe: &simdim::VertexUniverse, list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|l| {
            fam_universe
                .id(l)
                .ok_or_else(|| Failure::Input(format!("unknown vertex label `{l}`")))
        })
        .collect()
}

fn edge_arg(universe: &simdim::VertexUniverse, arg: &str) -> Result<(usize, usize), Failure> {
    match label_list(universe, arg)?.as_slice() {
        &[u, v] => Ok((u, v)),
        _ => Err(Failure::Usage(format!("expected an edge `u,v`, got `{arg}`"))),
    }
}

fn sorted(universe: &simdim::VertexUniverse, s: &VertexSet) -> Vec<String> {
    universe.sorted_labels(s)
}

fn cmd_dim(out: &Output, file: &Path, graph: Option<&str>) -> Outcome {
    let fam = load_family(file)?;
    let g = pick_graph(&fam, graph)?;
    let r = simdim::metric_dimension(&g)?;
    let witness = sorted(g.universe(), &r.witness);
    out.emit(
        &[format!("dim {}", r.dimension), format!("witness {}", witness.join(" "))],
        json!({
            "graph": g.name(),
            "dim": r.dimension,
            "witness": witness,
            "lower_bound": r.lower_bound_certificate.len(),
            "nodes": r.stats.nodes,
        }),
    )
}

fn cmd_sdim(out: &Output, file: &Path, bounds: bool) -> Outcome {
    let fam = load_family(file)?;
    let r = simdim::simultaneous_metric_dimension(&fam)?;
    let witness = sorted(fam.universe(), &r.witness);
    let mut lines = vec![format!("sd {}", r.dimension), format!("witness {}", witness.join(" "))];
    let mut doc = json!({
        "family": fam.name(),
        "sd": r.dimension,
        "witness": witness,
        "lower_bound": r.lower_bound_certificate.len(),
        "nodes": r.stats.nodes,
    });
    if bounds {
        let s = simdim::sandwich_bounds(&fam)?;
        for m in &s.members {
            lines.push(format!("member {} dim {}", m.graph, m.dim));
        }
        lines.push(format!("lower {}", s.lower));
        lines.push(format!("upper {}", s.upper));
        lines.push(format!("lower_tight {} upper_tight {}", s.lower_tight, s.upper_tight));
        doc["bounds"] = serde_json::to_value(&s).expect("serializable");
    }
    out.emit(&lines, doc)
}

fn cmd_tree(out: &Output, cmd: &TreeCommand) -> Outcome {
    match cmd {
        TreeCommand::Dim { file, graph } => {
            let fam = load_family(file)?;
            let t = pick_graph(&fam, graph.as_deref())?;
            let r = trees::tree_metric_dimension(&t)?;
            let witness = sorted(t.universe(), &r.witness);
            out.emit(
                &[format!("dim {}", r.dimension), format!("witness {}", witness.join(" "))],
                json!({"graph": t.name(), "dim": r.dimension, "witness": witness}),
            )
        }
        TreeCommand::Classify { file, graph } => {
            let fam = load_family(file)?;
            let t = pick_graph(&fam, graph.as_deref())?;
            let c = trees::classify(&t)?;
            let u = t.universe();
            let mut lines = vec![
                format!("leaves {}", sorted(u, &c.leaves).join(" ")),
                format!("interior {}", sorted(u, &c.interior).join(" ")),
                format!("major {}", sorted(u, &c.major).join(" ")),
            ];
            let mut ext: Vec<(String, usize, Vec<String>)> = c
                .exterior_major
                .iter()
                .map(|(&w, legs)| {
                    let terms = VertexSet::from_ids(t.n(), legs.iter().map(|l| l.terminal));
                    (u.label(w).to_string(), legs.len(), sorted(u, &terms))
                })
                .collect();
            ext.sort();
            for (w, ter, terms) in &ext {
                lines.push(format!("exterior {w} ter {ter} terminals {}", terms.join(" ")));
            }
            let ext: Vec<Value> = ext
                .into_iter()
                .map(|(w, ter, terms)| json!({"vertex": w, "ter": ter, "terminals": terms}))
                .collect();
            out.emit(
                &lines,
                json!({
                    "graph": t.name(),
                    "leaves": sorted(u, &c.leaves),
                    "interior": sorted(u, &c.interior),
                    "major": sorted(u, &c.major),
                    "exterior_major": ext,
                }),
            )
        }
        TreeCommand::Bound { file } => {
            let fam = load_family(file)?;
            let b = trees::family_interior_bound(&fam)?;
            let common = sorted(fam.universe(), &b.common_interior);
            out.emit(
                &[format!("bound {}", b.bound), format!("common_interior {}", common.join(" "))],
                json!({"family": fam.name(), "bound": b.bound, "common_interior": common}),
            )
        }
        TreeCommand::Exchange {
            file,
            graph,
            add,
            remove,
        } => {
            let fam = load_family(file)?;
            let t = pick_graph(&fam, graph.as_deref())?;
            trees::require_tree(&t)?;
            let ex = EdgeExchange::new(edge_arg(t.universe(), add)?, edge_arg(t.universe(), remove)?);
            let d = trees::exchange_dim_delta(&t, &ex)?;
            out.emit(
                &[
                    format!("dim_before {}", d.dim_before),
                    format!("dim_after {}", d.dim_after),
                    format!("delta {}", d.delta),
                ],
                json!({"graph": t.name(), "dim_before": d.dim_before, "dim_after": d.dim_after, "delta": d.delta}),
            )
        }
    }
}

fn write_family_text(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
        }
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(write_failure),
    }
}

fn cmd_gen(out: &Output, cmd: &GenCommand, seed: u64) -> Outcome {
    match cmd {
        GenCommand::Cycles { n, out: path } => {
            let fam = generators::gen_antipodal_cycle_family(*n).map_err(|e| match e {
                Error::InvalidArgument(m) => Failure::Usage(m),
                other => other.into(),
            })?;
            write_family_text(&simdim::serialize_family(&fam.family), path.as_deref())
        }
        GenCommand::Gb {
            graph,
            basis,
            limit,
            connected_only,
            census,
            out: path,
        } => {
            let fam = load_family(graph)?;
            let g = pick_graph(&fam, None)?;
            let b = VertexSet::from_ids(g.n(), label_list(g.universe(), basis)?);
            let opts = GbOptions {
                connected_only: *connected_only,
                limit: *limit,
                seed,
            };
            let res = generators::gen_gb_family(&g, &b, &opts)?;
            let line = match out.format {
                Format::Text => res.census.line(),
                Format::Json => serde_json::to_string(&res.census).map_err(|e| Failure::Input(e.to_string()))?,
            };
            let family = res.family(&format!("{}_gb", fam.name()))?;
            let text = simdim::serialize_family(&family);
            match census.as_deref() {
                Some("-") => {
                    writeln!(io::stdout().lock(), "{line}").map_err(write_failure)?;
                    if let Some(p) = path {
                        write_family_text(&text, Some(p))?;
                    }
                    Ok(())
                }
                Some(target) => {
                    fs::write(target, format!("{line}\n")).map_err(|e| Failure::Input(format!("writing {target}: {e}")))?;
                    write_family_text(&text, path.as_deref())
                }
                None => {
                    eprintln!("{line}");
                    write_family_text(&text, path.as_deref())
                }
            }
        }
        GenCommand::Hsp { instance, out: path } => {
            let text = read_input(instance)?;
            let inst = simdim::parse_hitting_set(&text).map_err(|e| Failure::Input(format!("{}: {e}", instance.display())))?;
            let red = generators::gen_hsp_reduction(&inst)?;
            let body = format!("# budget {}\n{}", red.budget, simdim::serialize_family(&red.family));
            write_family_text(&body, path.as_deref())
        }
    }
}

fn cmd_verify(out: &Output, args: &VerifyArgs, seed: u64) -> Outcome {
    let fam = load_family(&args.file)?;
    let report: TheoremReport = match args.id {
        TheoremId::Twins => theorems::check_twin_characterization(&fam)?,
        TheoremId::Sandwich => theorems::check_sandwich(&fam)?,
        TheoremId::Diameter => theorems::check_diameter_bound(&fam)?,
        TheoremId::CommonPath => theorems::check_common_path(&fam)?,
        TheoremId::Paths => theorems::check_path_family(&fam)?,
        TheoremId::Cycles => theorems::check_cycle_family(&fam)?,
        TheoremId::TreeBound => theorems::check_tree_bound(&fam)?,
        TheoremId::ExchangeBound => theorems::check_exchange_bound(&fam)?,
        TheoremId::Gb => {
            let basis = args
                .basis
                .as_deref()
                .ok_or_else(|| Failure::Usage("verify gb needs --basis".into()))?;
            let g = pick_graph(&fam, None)?;
            let b = VertexSet::from_ids(g.n(), label_list(g.universe(), basis)?);
            theorems::check_gb(&g, &b, args.samples, seed)?
        }
    };
    let text: Vec<String> = report.to_text().lines().map(str::to_string).collect();
    out.emit(&text, serde_json::to_value(&report).expect("serializable"))?;
    match report.verdict {
        Verdict::Violated => Err(Failure::Violated(format!("{} violated", report.id))),
        Verdict::Holds | Verdict::Inapplicable => Ok(()),
    }
}
