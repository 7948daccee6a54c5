//! Command-line front end. [`run`] takes explicit streams so it can be driven
//! from tests.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::dag::DagInstance;
use crate::format::{self, FormatError, ParsedInstance};
use crate::gadgets::{self, GadgetError};
use crate::oracle::{self, Answer, OracleError, WeightedArcInstance};
use crate::shadows::{ShadowStrategy, DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_RANDOM_ITERATIONS};
use crate::solver::{self, SolveError, SolverConfig};
use crate::transforms;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dagmc", version, about = "Vertex multicut in directed acyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShadowArg {
    Exhaustive,
    Random,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a vertex instance with the branching algorithm.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "exhaustive")]
        shadow: ShadowArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RANDOM_ITERATIONS)]
        rand_iters: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        exhaustive_limit: usize,
        /// Print search statistics as JSON on stderr.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Solve a vertex instance by brute force.
    Oracle { instance: PathBuf },
    /// Decide a weighted arc instance by brute force.
    OracleW { instance: PathBuf },
    /// Check a solution file against an instance.
    Verify { instance: PathBuf, cutfile: PathBuf },
    /// Build a weighted instance from an undirected graph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Rewrite a skew weighted instance with two terminal pairs.
    Skew2pairs { instance: PathBuf },
    /// Expand a weighted instance to a vertex instance.
    Expand { instance: PathBuf },
    /// Print the normalized form of a vertex instance.
    Normalize { instance: PathBuf },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Weighted instance that is YES iff the graph has a clique of the given size.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Skew instance that is YES iff the graph has a cut of the given size.
    Maxcut {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cut: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}: expected a {1} instance")]
    WrongKind(String, &'static str),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Render(#[from] FormatError),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::TooLarge(_))
            | CliError::Gadget(GadgetError::ExpansionTooLarge(_))
            | CliError::Solve(SolveError::TooManyPairs(_))
            | CliError::Solve(SolveError::Shadow(_)) => EXIT_GUARD,
            CliError::Io { .. }
            | CliError::Format { .. }
            | CliError::WrongKind(..)
            | CliError::Gadget(_)
            | CliError::Render(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<(String, String), CliError> {
        let name = path.display().to_string();
        let mut text = String::new();
        let res = if name == "-" {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|source| CliError::Io {
            path: name.clone(),
            source,
        })?;
        Ok((name, text))
    }

    fn instance(&mut self, path: &PathBuf) -> Result<(String, ParsedInstance), CliError> {
        let (name, text) = self.read(path)?;
        let parsed = format::parse_instance(&text).map_err(|source| CliError::Format {
            path: name.clone(),
            source,
        })?;
        Ok((name, parsed))
    }

    fn vertex(&mut self, path: &PathBuf) -> Result<DagInstance, CliError> {
        match self.instance(path)? {
            (_, ParsedInstance::Vertex(g)) => Ok(g),
            (name, _) => Err(CliError::WrongKind(name, "vertex")),
        }
    }

    fn weighted(&mut self, path: &PathBuf) -> Result<WeightedArcInstance, CliError> {
        match self.instance(path)? {
            (_, ParsedInstance::Weighted(w)) => Ok(w),
            (name, _) => Err(CliError::WrongKind(name, "weighted")),
        }
    }

    fn graph(&mut self, path: &PathBuf) -> Result<gadgets::UndirectedGraph, CliError> {
        let (name, text) = self.read(path)?;
        format::parse_graph(&text).map_err(|source| CliError::Format { path: name, source })
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Solve {
            instance,
            shadow,
            seed,
            rand_iters,
            exhaustive_limit,
            stats,
            parallel,
        } => {
            let g = io.vertex(&instance)?;
            let strategy = match shadow {
                ShadowArg::Exhaustive => ShadowStrategy::Exhaustive {
                    limit: exhaustive_limit,
                },
                ShadowArg::Random => ShadowStrategy::Randomized {
                    seed,
                    iterations: rand_iters,
                },
                ShadowArg::Oracle => ShadowStrategy::OracleAssisted,
            };
            let out = solver::solve(&g, SolverConfig::new(strategy).parallel(parallel))?;
            io.stdout.write_all(format::render_answer(&g, &out.answer).as_bytes())?;
            if stats {
                let json = serde_json::to_string(&out.stats).expect("trace serializes");
                writeln!(io.stderr, "{json}")?;
            }
        }
        Command::Oracle { instance } => {
            let g = io.vertex(&instance)?;
            let answer = oracle::brute_solve(&g)?;
            io.stdout.write_all(format::render_answer(&g, &answer).as_bytes())?;
        }
        Command::OracleW { instance } => {
            let w = io.weighted(&instance)?;
            let yes = oracle::brute_solve_weighted_arcs(&w)?;
            writeln!(io.stdout, "s {}", if yes { "YES" } else { "NO" })?;
        }
        Command::Verify { instance, cutfile } => {
            let g = io.vertex(&instance)?;
            let (name, text) = io.read(&cutfile)?;
            let answer = format::parse_solution(&text).map_err(|source| CliError::Format { path: name, source })?;
            let valid = match &answer {
                Answer::Yes(cut) => cut.iter().all(|v| g.contains(v) && !g.is_terminal(v)) && solver::verify(&g, cut),
                Answer::No => false,
            };
            writeln!(io.stdout, "s {}", if valid { "VALID" } else { "INVALID" })?;
        }
        Command::Gen(GenCommand::Clique { graph, size }) => {
            let h = io.graph(&graph)?;
            let w = gadgets::gen_clique_instance(&h, size)?;
            io.stdout.write_all(format::render_weighted(&w)?.as_bytes())?;
        }
        Command::Gen(GenCommand::Maxcut { graph, cut }) => {
            let h = io.graph(&graph)?;
            let w = gadgets::gen_maxcut_skew_instance(&h, cut)?;
            io.stdout.write_all(format::render_weighted(&w)?.as_bytes())?;
        }
        Command::Skew2pairs { instance } => {
            let w = io.weighted(&instance)?;
            let two = gadgets::skew_to_two_pairs(&w)?;
            io.stdout.write_all(format::render_weighted(&two)?.as_bytes())?;
        }
        Command::Expand { instance } => {
            let w = io.weighted(&instance)?;
            let g = gadgets::expand_to_vertex_instance(&w)?;
            io.stdout.write_all(format::render_instance(&g)?.as_bytes())?;
        }
        Command::Normalize { instance } => {
            let g = io.vertex(&instance)?;
            let (n, old) = format::compact(&transforms::normalize(&g));
            for (k, v) in old.iter().enumerate() {
                writeln!(io.stdout, "c vertex {} was {v}", k + 1)?;
            }
            io.stdout.write_all(format::render_instance(&n)?.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}
