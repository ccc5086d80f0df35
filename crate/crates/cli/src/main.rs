use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use connclust::{Error, Mode, Objective, Rational};

mod bench;
mod commands;

#[derive(Parser, Debug)]
#[command(name = "connclust", version, about = "Connected k-center and k-diameter clustering")]
struct Cli {
    /// Use exact rational arithmetic instead of f64.
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance (and an annotations side-file).
    Gen(GenArgs),
    /// Solve an instance and print the clustering with its report.
    Solve(SolveArgs),
    /// Check a clustering for coverage, connectivity, disjointness and the budget.
    Validate(CheckArgs),
    /// Recompute the objective of a clustering.
    Eval(EvalArgs),
    /// Print the connectivity graph as Graphviz, optionally colored by a clustering.
    ExportDot(DotArgs),
    /// Run solvers over seeded random instances and print CSV.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "worstcase-I", alias = "worstcase-i")]
    WorstcaseI,
    #[value(name = "worstcase-Iprime", alias = "worstcase-iprime")]
    WorstcaseIprime,
    Sat,
    Sat4,
    CliqueCover,
    SetCover,
    Multicut,
    Line,
    Tree,
    General,
    Lp,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Level of the worst-case instances.
    #[arg(long)]
    pub m: Option<usize>,
    /// CNF for the SAT gadgets, e.g. "1 2 3, -2 -3".
    #[arg(long)]
    pub formula: Option<String>,
    /// Vertices (clique-cover), elements (set-cover) or leaves (multicut).
    #[arg(long)]
    pub size: Option<usize>,
    /// Graph edges or leaf pairs, e.g. "0-1,1-2".
    #[arg(long)]
    pub pairs: Option<String>,
    /// Sets for set-cover, e.g. "0 1; 1 2".
    #[arg(long)]
    pub sets: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Norm exponent for lp: a positive integer or "inf".
    #[arg(long, default_value = "2")]
    pub p: String,
    #[arg(long, default_value_t = 10)]
    pub max_distance: u32,
    #[arg(long)]
    pub metric_closure: bool,
    #[arg(long, default_value_t = 0.2)]
    pub extra_edge_prob: f64,
    /// Instance output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Annotations output; defaults to `<out>.annotations.json` when `--out` is given.
    #[arg(long)]
    pub annotations: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Greedy,
    Line,
    TreeDp,
    TreeAssign,
    General,
    Lp,
    Doubling,
    TwoCenter,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Center,
    Diameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Disjoint,
    #[value(alias = "non-disjoint")]
    Nondisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchArg {
    Binary,
    Linear,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Center => Objective::Center,
            ObjectiveArg::Diameter => Objective::Diameter,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Disjoint => Mode::Disjoint,
            ModeArg::Nondisjoint => Mode::NonDisjoint,
        }
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "center")]
    pub objective: ObjectiveArg,
    #[arg(long, value_enum, default_value = "disjoint")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub algo: Algo,
    /// Fixed centers, e.g. "0,3".
    #[arg(long)]
    pub centers: Option<String>,
    /// Split clusters until exactly k are used (disjoint only).
    #[arg(long)]
    pub exact_k: bool,
    /// Seeded center order for the greedy covering.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "binary")]
    pub search: SearchArg,
    /// Doubling dimension for `--algo doubling`.
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub clustering: PathBuf,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub clustering: PathBuf,
    /// Defaults to the objective recorded in the clustering, else center.
    #[arg(long, value_enum)]
    pub objective: Option<ObjectiveArg>,
}

#[derive(Args, Debug)]
pub struct DotArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub clustering: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn bad_input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn infeasible(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible(_) => 1,
            ref e if e.is_precondition() => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::bad_input(e.to_string())
    }
}

fn dispatch<S: connclust::Scalar>(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Gen(a) => commands::gen::<S>(a),
        Command::Solve(a) => commands::solve::<S>(a),
        Command::Validate(a) => commands::validate::<S>(a),
        Command::Eval(a) => commands::eval::<S>(a),
        Command::ExportDot(a) => commands::export_dot::<S>(a),
        Command::Bench(a) => bench::run::<S>(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = if cli.exact { dispatch::<Rational>(&cli.command) } else { dispatch::<f64>(&cli.command) };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("connclust: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
