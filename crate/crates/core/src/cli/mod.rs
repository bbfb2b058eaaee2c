//! Command-line front end. Exit codes: 0 commutative, 2 not commutative
//! (witness printed), 3 undecided, 1 error or failed check.

pub mod commands;
pub mod config;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Result;
use config::{ConfigFile, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "lie-poisson", version, about = "Exact Poisson-commutativity checks for subalgebras of S(g)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate Z for a splitting and decide whether it is Poisson commutative.
    PairReport(RunArgs),
    /// Replay the gl4 example with the lower-right sl2, checking stored matrices.
    Counterexample(RunArgs),
    /// Generator counts, ranks, completeness and span identities for a Cartan splitting.
    CartanSuite(RunArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Named algebra (gl3, sl4, ...) or a structure-constant file.
    #[arg(long)]
    pub algebra: Option<String>,
    /// cartan, lower-right-sl2, or a file with a basis of f, one vector per line.
    #[arg(long)]
    pub split: Option<String>,
    /// trace-powers, char-poly, or a file with one invariant per line.
    #[arg(long)]
    pub invariants: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sample points are drawn from [-bound, bound].
    #[arg(long)]
    pub bound: Option<i64>,
    /// Maximum number of terms in any intermediate polynomial.
    #[arg(long)]
    pub term_cap: Option<usize>,
    /// Output stem; writes <out>.json and <out>.txt.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for pair checks.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// TOML file with the same keys; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl RunArgs {
    fn flags(&self) -> ConfigFile {
        ConfigFile {
            algebra: self.algebra.clone(),
            split: self.split.clone(),
            invariants: self.invariants.clone(),
            seed: self.seed,
            bound: self.bound,
            term_cap: self.term_cap,
            out: self.out.clone(),
            jobs: self.jobs,
            max_n: None,
        }
    }

    pub fn resolve(&self, command: &str) -> Result<RunConfig> {
        let file = match &self.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        RunConfig::resolve(self.flags().over(file), command)
    }
}

fn finish<T: Serialize>(cfg: &RunConfig, out: commands::Outcome<T>) -> Result<i32> {
    report::write_both(&cfg.out, &out.doc, &out.summary)?;
    print!("{}", out.summary.as_str());
    Ok(out.exit_code)
}

fn dispatch(name: &str, args: &RunArgs, cmd: &Command) -> Result<i32> {
    let cfg = args.resolve(name)?;
    let run = || -> Result<i32> {
        match cmd {
            Command::PairReport(_) => finish(&cfg, commands::pair_report(&cfg)?),
            Command::Counterexample(_) => finish(&cfg, commands::counterexample(&cfg)?),
            Command::CartanSuite(_) => finish(&cfg, commands::cartan_suite(&cfg)?),
        }
    };
    match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| crate::Error::Internal(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Run the parsed command and return the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let (name, args) = match &cli.command {
        Command::PairReport(a) => ("pair-report", a),
        Command::Counterexample(a) => ("counterexample", a),
        Command::CartanSuite(a) => ("cartan-suite", a),
    };
    match dispatch(name, args, &cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
