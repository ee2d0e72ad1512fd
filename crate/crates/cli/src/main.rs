//! `irreg`: irregularity, bounds, graph families and the tree studies from
//! the command line.
//!
//! Exit codes: 0 success, 2 malformed edge list, 3 invalid graph,
//! 4 bad parameters, 1 I/O failure.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use irregularity::bounds::{bound_report, LambdaSource, ReportOptions};
use irregularity::edgelist::{parse_edge_list, EdgeListError};
use irregularity::exec::Execution;
use irregularity::generators;
use irregularity::spectral::DEFAULT_REL_TOL;
use irregularity::study::{find_trees, tree_bound_study_with, TreeQuery};
use irregularity::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "irreg", version, about = "Graph irregularity and its upper bounds")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree invariants and irregularity of an edge-list file (`-` for stdin).
    Info { input: String },
    /// Irregularity next to every applicable upper bound.
    Bounds {
        input: String,
        /// Use min(n, Merris bound) in place of the computed eigenvalue.
        #[arg(long)]
        merris_cap: bool,
        /// Relative tolerance for the eigenvalue.
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
    },
    /// Emit a graph family: yoke N1 N2 | path N | cycle N | star N |
    /// complete N | bipartite A B | random N P SEED.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Compare the Laplacian and pendant bounds over all trees on N vertices.
    Study { n: usize },
    /// Search for trees matching the worked example (p=7, I=22, bound ~27.8614).
    T15 {
        /// Tree order to search.
        #[arg(long, default_value_t = 15)]
        n: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Invalid(String),
    Param(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Param(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Invalid(m) | CliError::Param(m) | CliError::Io(m) => m,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn read_graph(input: &str) -> Result<Graph, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?
    };
    parse_edge_list(&text).map_err(|e| match e {
        EdgeListError::Parse { .. } => CliError::Parse(format!("{input}: {e}")),
        EdgeListError::Invalid(inner) => CliError::Invalid(format!("{input}: {inner}")),
    })
}

fn param<T: std::str::FromStr>(params: &[String], idx: usize, name: &str) -> Result<T, CliError> {
    let raw = params
        .get(idx)
        .ok_or_else(|| CliError::Param(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| CliError::Param(format!("bad value `{raw}` for {name}")))
}

fn generate(family: &str, params: &[String]) -> Result<Graph, CliError> {
    let expected = match family {
        "yoke" | "bipartite" => 2,
        "path" | "cycle" | "star" | "complete" => 1,
        "random" => 3,
        other => return Err(CliError::Param(format!("unknown family `{other}`"))),
    };
    if params.len() != expected {
        return Err(CliError::Param(format!(
            "{family} takes {expected} parameter(s), got {}",
            params.len()
        )));
    }
    let g = match family {
        "yoke" => generators::yoke(param(params, 0, "N1")?, param(params, 1, "N2")?),
        "bipartite" => generators::complete_bipartite(param(params, 0, "A")?, param(params, 1, "B")?),
        "path" => generators::path(param(params, 0, "N")?),
        "cycle" => generators::cycle(param(params, 0, "N")?),
        "star" => generators::star(param(params, 0, "N")?),
        "complete" => generators::complete(param(params, 0, "N")?),
        _ => generators::random_graph(
            param(params, 0, "N")?,
            param(params, 1, "P")?,
            param(params, 2, "SEED")?,
        ),
    };
    g.map_err(|e| CliError::Param(e.to_string()))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Info { input } => Ok(render::info(&read_graph(&input)?, format)),
        Command::Bounds {
            input,
            merris_cap,
            tol,
        } => {
            let g = read_graph(&input)?;
            let options = ReportOptions {
                rel_tol: tol,
                lambda: if merris_cap {
                    LambdaSource::MerrisCap
                } else {
                    LambdaSource::Computed
                },
            };
            let report = bound_report(&g, options).map_err(|e| CliError::Param(e.to_string()))?;
            Ok(render::bounds(&report, format))
        }
        Command::Gen { family, params } => Ok(render::graph(&generate(&family, &params)?, format)),
        Command::Study { n } => {
            let outcome = tree_bound_study_with(n, DEFAULT_REL_TOL, Execution::default())
                .map_err(|e| CliError::Param(e.to_string()))?;
            if format != Format::Table {
                eprintln!("{}", irregularity::study::summary_line(&outcome.counts));
            }
            Ok(render::study(&outcome, format))
        }
        Command::T15 { n } => {
            let query = TreeQuery::t15_on(n);
            let rows = find_trees(&query, Execution::default())
                .map_err(|e| CliError::Param(e.to_string()))?;
            Ok(render::candidates(&query, &rows, format))
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = cli.out.clone();
    match run(cli).and_then(|text| emit(&text, out.as_ref())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
