use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use graphlet_count::analytic::{self, AnalyticError, Route};
use graphlet_count::generators::{self, GeneratorError};
use graphlet_count::oracle;
use graphlet_count::report::{self, Format, ReportError};
use graphlet_count::{count_five, count_small, induced_from_noninduced, parse_edge_list, Graph};

#[derive(Parser)]
#[command(
    name = "graphlets",
    version,
    about = "Exact five-node graphlet counts for edge lists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count all connected five-node graphlets in an edge list.
    Count(CountArgs),
    /// Compare counts against density-matched G(n, p) random graphs.
    Compare {
        #[command(flatten)]
        count: CountArgs,
        #[arg(long, short = 'r', default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        replicates: u32,
        #[arg(long, short = 's', default_value_t = 0)]
        seed: u64,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file; standard output when omitted.
        #[arg(long, short = 'o', global = true)]
        output: Option<PathBuf>,
    },
    /// Evaluate a closed-form count.
    Analytic {
        #[command(subcommand)]
        formula: Formula,
    },
    /// Check the closed-form counters against brute force on built-in graphs.
    Selftest,
}

#[derive(Args)]
struct CountArgs {
    /// Edge-list file, or `-` for standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Also report induced counts.
    #[arg(long)]
    induced: bool,
    /// Refuse graphs with more nodes than this.
    #[arg(long, default_value_t = 2000)]
    max_nodes: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        n: usize,
    },
    /// Ring lattice: each node joined to its k nearest neighbours on each side.
    Ring {
        n: usize,
        k: usize,
    },
    /// Balanced complete N-partite graph with `per_group` nodes per group.
    Npartite {
        groups: usize,
        per_group: usize,
    },
    /// Erdős–Rényi G(n, p).
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Formula {
    /// Diagonal and off-diagonal entries of the k-th power of K_n's adjacency matrix.
    Walks { n: u32, k: u32 },
    /// 5-paths in K_n.
    Fivepaths { n: u32 },
    /// Bulls in the balanced complete N-partite graph.
    Bulls { groups: u32, per_group: u32 },
    /// Spinning tops in the ring lattice (n, k).
    Spintops { n: u32, k: u32 },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Guard(String),
    #[error("self-test failed: {0} check(s) disagreed")]
    Selftest(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Selftest(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<AnalyticError> for CliError {
    fn from(e: AnalyticError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        CliError::Guard(e.to_string())
    }
}

fn io_error(what: &str, e: io::Error) -> CliError {
    CliError::Input(format!("{what}: {e}"))
}

fn load(args: &CountArgs) -> Result<Graph, CliError> {
    let text = if args.input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_error("standard input", e))?;
        s
    } else {
        fs::read_to_string(&args.input)
            .map_err(|e| io_error(&args.input.display().to_string(), e))?
    };
    let ingested = parse_edge_list(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
    if ingested.self_loops > 0 {
        eprintln!("warning: ignored {} self-loop(s)", ingested.self_loops);
    }
    if ingested.duplicate_edges > 0 {
        eprintln!(
            "warning: ignored {} duplicate edge(s)",
            ingested.duplicate_edges
        );
    }
    let n = ingested.graph.node_count();
    if n > args.max_nodes {
        return Err(CliError::Guard(format!(
            "graph has {n} nodes, above the limit of {}; raise --max-nodes to proceed",
            args.max_nodes
        )));
    }
    Ok(ingested.graph)
}

fn generate(family: &Family) -> Result<Graph, CliError> {
    Ok(match *family {
        Family::Complete { n } => generators::complete(n),
        Family::Path { n } => generators::path(n),
        Family::Cycle { n } => generators::cycle(n),
        Family::Star { n } => generators::star(n),
        Family::Ring { n, k } => generators::ring_lattice(n, k)?,
        Family::Npartite { groups, per_group } => generators::n_partite(&vec![per_group; groups])?,
        Family::Gnp { n, p, seed } => generators::erdos_renyi(n, p, seed)?,
    })
}

fn evaluate(formula: &Formula) -> Result<String, CliError> {
    Ok(match *formula {
        Formula::Walks { n, k } => {
            let (a, b) = analytic::complete_walks(n, k)?;
            format!("a={a} b={b}")
        }
        Formula::Fivepaths { n } => analytic::five_paths_complete(n).to_string(),
        Formula::Bulls { groups, per_group } => {
            let bulls = analytic::bulls_balanced_npartite(groups, per_group)?;
            if bulls.route == Route::GeneralCounter {
                eprintln!("note: closed form needs node degree above 2; counted directly");
            }
            bulls.value.to_string()
        }
        Formula::Spintops { n, k } => analytic::spinning_tops_ring_lattice(n, k)?.to_string(),
    })
}

fn selftest_graphs() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("complete(7)".to_string(), generators::complete(7)),
        ("path(9)".to_string(), generators::path(9)),
        ("cycle(8)".to_string(), generators::cycle(8)),
        ("star(7)".to_string(), generators::star(7)),
        (
            "ring(11,2)".to_string(),
            generators::ring_lattice(11, 2).expect("valid"),
        ),
        (
            "npartite(3x3)".to_string(),
            generators::n_partite(&[3, 3, 3]).expect("valid"),
        ),
    ];
    for (seed, p) in [(1u64, 0.3), (2, 0.5), (3, 0.7)] {
        let g = generators::erdos_renyi(10, p, seed).expect("valid p");
        out.push((format!("gnp(10,{p},{seed})"), g));
    }
    out
}

fn selftest() -> Result<String, CliError> {
    let mut lines = String::new();
    let mut failures = 0;
    for (name, g) in selftest_graphs() {
        let small_ok = oracle::oracle_small(&g).ok() == Some(count_small(&g));
        let y = count_five(&g);
        let five_ok = oracle::oracle_five(&g).ok() == Some(y);
        let induced_ok = oracle::oracle_induced(&g).ok() == Some(induced_from_noninduced(&y));
        for (what, ok) in [
            ("small", small_ok),
            ("five", five_ok),
            ("induced", induced_ok),
        ] {
            if !ok {
                failures += 1;
            }
            let verdict = if ok { "ok" } else { "FAIL" };
            lines.push_str(&format!("{verdict:4} {what:8} {name}\n"));
        }
    }
    if failures > 0 {
        eprint!("{lines}");
        return Err(CliError::Selftest(failures));
    }
    Ok(lines)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(&p.display().to_string(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io_error("standard output", e)),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let text = match &cli.command {
        Command::Count(args) => {
            let g = load(args)?;
            report::run_count(&g, args.induced).render(args.format.into())
        }
        Command::Compare {
            count,
            replicates,
            seed,
        } => {
            let g = load(count)?;
            report::run_null_compare(&g, *replicates, *seed, count.induced)?
                .render(count.format.into())
        }
        Command::Gen { family, output } => {
            let g = generate(family)?;
            return write_output(output.as_ref(), &g.to_edge_list());
        }
        Command::Analytic { formula } => evaluate(formula)?,
        Command::Selftest => selftest()?,
    };
    let mut text = text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_output(None, &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
