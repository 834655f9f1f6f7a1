use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;
mod sweep;

use monocurve::{Limits, Sequence};

#[derive(Parser, Debug)]
#[command(name = "monocurve", version, about = "Cohen-Macaulay tests for projective monomial curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Largest accepted value of a_n.
    #[arg(long, global = true, default_value_t = 10_000)]
    an_max: u64,

    /// Maximum number of elements in any intermediate basis.
    #[arg(long, global = true, default_value_t = monocurve::groebner::DEFAULT_BASIS_CAP)]
    basis_cap: usize,

    /// Maximum number of standard monomials enumerated.
    #[arg(long, global = true, default_value_t = monocurve::toric::DEFAULT_MONOMIAL_BOUND)]
    monomial_bound: usize,

    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, global = true, env = "MONOCURVE_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the curve is ACM (exit 0 = ACM, 1 = not ACM, 2 = error).
    Analyze {
        /// Comma-separated sequence with a_n last, e.g. 6,7,9,10.
        sequence: String,
        /// Include the bases of I(a), I(a') and (x_n, I(a)).
        #[arg(long)]
        gb: bool,
        /// Include the Apery table.
        #[arg(long)]
        apery: bool,
    },
    /// Print the reduced Groebner basis of I(a).
    Gb {
        sequence: String,
        /// Also print the bases of I(a'), (x_n, I(a)) and (x_n, I(a')).
        #[arg(long)]
        all: bool,
    },
    /// Print the Apery table of a sequence.
    Apery { sequence: String },
    /// Analyze members of a named family (bresinsky, arslan, prop31, shifted).
    Family {
        name: String,
        /// Single parameter value.
        #[arg(long, conflicts_with = "h_range")]
        h: Option<u64>,
        /// Inclusive parameter range, e.g. 2..6.
        #[arg(long)]
        h_range: Option<String>,
        /// Base sequence for the shifted family.
        #[arg(long)]
        base: Option<String>,
    },
    /// Analyze random or exhaustively enumerated sequences.
    Sweep {
        /// Length of the sequences.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of random sequences.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every valid sequence with increasing entries instead.
        #[arg(long)]
        exhaustive: bool,
    },
}

pub struct Config {
    pub format: Format,
    pub an_max: u64,
    pub limits: Limits,
    pub jobs: usize,
}

impl Config {
    pub fn parse_sequence(&self, s: &str) -> Result<Sequence> {
        let a = Sequence::parse(s)?;
        self.check_sequence(&a)?;
        Ok(a)
    }

    pub fn check_sequence(&self, a: &Sequence) -> Result<()> {
        if a.modulus() > self.an_max {
            bail!("a_n = {} exceeds --an-max {}", a.modulus(), self.an_max);
        }
        Ok(())
    }

    pub fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .context("building the worker pool")
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if cli.an_max == 0 || cli.basis_cap == 0 || cli.monomial_bound == 0 {
        bail!("caps must be positive");
    }
    let cfg = Config {
        format: cli.format,
        an_max: cli.an_max,
        limits: Limits {
            basis_cap: cli.basis_cap,
            monomial_bound: cli.monomial_bound,
        },
        jobs: cli.jobs,
    };
    match cli.command {
        Command::Analyze { sequence, gb, apery } => commands::analyze(&cfg, &sequence, gb, apery),
        Command::Gb { sequence, all } => commands::gb(&cfg, &sequence, all),
        Command::Apery { sequence } => commands::apery(&cfg, &sequence),
        Command::Family { name, h, h_range, base } => {
            commands::family(&cfg, &name, h, h_range.as_deref(), base.as_deref())
        }
        Command::Sweep { n, count, seed, exhaustive } => sweep::run(&cfg, n, count, seed, exhaustive),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
