mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sst_core::experiment::{CutKind, PipelineConfig};
use sst_core::OrbitRule;

#[derive(Parser)]
#[command(name = "sstcuts", version, about = "Symmetry-handling cuts and presolving for maximum-weight stable set")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute (or validate) automorphism generators and write them in cycle notation.
    Symmetries {
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build the leader/orbit table and write it as JSON.
    Table {
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Apply the symmetry presolve; report remaining node and edge ratios.
    Presolve {
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Check total unimodularity of the clique matrix extended by cut rows.
    CheckTu {
        /// Graph whose extended clique matrix is checked.
        #[arg(required_unless_present = "matrix", conflicts_with = "matrix")]
        graph: Option<PathBuf>,
        /// Check this matrix instead (dense text rows or JSON).
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Check the bare clique matrix without cut rows.
        #[arg(long)]
        no_cuts: bool,
        /// Drop columns of nodes removed by the deletion operation.
        #[arg(long)]
        deletion: bool,
        #[arg(long, default_value_t = sst_core::tp::DEFAULT_DET_CAP)]
        det_cap: usize,
        #[arg(long, default_value_t = sst_core::tp::DEFAULT_GH_CAP)]
        gh_cap: usize,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Solve maximum-weight stable set by branch and bound.
    Solve {
        graph: PathBuf,
        /// Add the table cuts to the model.
        #[arg(long, conflicts_with = "presolve")]
        with_cuts: bool,
        /// Solve the presolved graph and lift the solution back.
        #[arg(long)]
        presolve: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Run the full pipeline on every graph file in a directory; CSV output.
    Bench {
        dir: PathBuf,
        /// Skip the solver comparisons.
        #[arg(long)]
        no_solve: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Write a seeded family of DIMACS instances into a directory.
    Generate {
        #[arg(long, value_enum, default_value_t = Family::Synthetic)]
        family: Family,
        #[arg(long, default_value_t = 6)]
        count: usize,
        #[arg(long, default_value_t = 24)]
        max_nodes: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Clone)]
struct Common {
    /// Read generators from this cycle-notation file instead of computing them.
    #[arg(long)]
    symmetry_file: Option<PathBuf>,
    /// Write the primary output here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Include wall-clock times (outputs are then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Clone)]
struct Pipeline {
    #[arg(long, value_enum, default_value_t = Rule::Min)]
    orbit_rule: Rule,
    /// Build a stringent table.
    #[arg(long)]
    stringent: bool,
    #[arg(long, default_value_t = sst_core::sst::DEFAULT_MAX_ROUNDS)]
    max_rounds: usize,
    /// Also apply the edge addition operation.
    #[arg(long)]
    addition: bool,
    /// Repeat the presolve pass until nothing changes.
    #[arg(long)]
    fixpoint: bool,
    #[arg(long, value_enum, default_value_t = Cuts::Plain)]
    cuts: Cuts,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cuts {
    Plain,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Unions of cliques and layered trivially perfect graphs.
    Synthetic,
    /// Disjoint copies of small random graphs.
    Copies,
    /// Random symmetric trivially perfect graphs.
    Tp,
}

impl Pipeline {
    fn config(&self, solve: bool) -> PipelineConfig {
        PipelineConfig {
            orbit_rule: match self.orbit_rule {
                Rule::Min => OrbitRule::Min,
                Rule::Max => OrbitRule::Max,
            },
            stringent: self.stringent,
            max_rounds: self.max_rounds,
            use_addition: self.addition,
            fixpoint: self.fixpoint,
            cut_kind: match self.cuts {
                Cuts::Plain => CutKind::Plain,
                Cuts::Clique => CutKind::Clique,
            },
            solve,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
