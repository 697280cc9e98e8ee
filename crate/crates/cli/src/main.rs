//! `zsum`: zero-sum workbench over `Z_n`.
//!
//! Exit codes: 0 found / exact / verified, 1 finding against a stated
//! result, 2 usage error, 10 predicate false, 11 partial under budget.

mod commands;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use zsum_core::cache::ResultsCache;
use zsum_core::extremal::with_workers;
use zsum_core::{Budget, ExtremalKind, TheoremId};

use output::{Format, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "zsum", version, about = "Zero-sum sequences over Z_n")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = default_workers(),
          value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Wall-clock budget, e.g. `90s` or `5m`; unlimited when absent.
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<Duration>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Results cache file (JSON lines) for `f` and `h`.
    #[arg(long, global = true, env = "ZSUM_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does the sequence have a zero-sum subsequence of length m?
    Check {
        /// `1,1,2,4` (with --n) or `n=5;m=4,4,0,0,0`.
        sequence: String,
        #[arg(long)]
        n: Option<u32>,
        /// Subsequence length; defaults to n.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Extremal constant f(n,k).
    F {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Least height h(n,k) of a length n+k sequence without an n-term zero-sum.
    H {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Exhaustive check of a structural statement.
    Verify {
        /// One of egz, t21, t22, t23, l24, t31, t32.
        #[arg(long)]
        theorem: String,
        /// Single modulus.
        #[arg(long, visible_alias = "p")]
        n: Option<u32>,
        /// All admissible moduli up to this bound.
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Tabulates h(n,k) against the bound h(n,k) >= k+1.
    Scan {
        #[arg(long)]
        max_n: u32,
    },
    /// Canonical representative under affine-unit equivalence.
    Canon {
        sequence: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Subsequence sums, all or of one length.
    Sums {
        sequence: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
    },
}

fn default_workers() -> u64 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u64)
}

fn parse_budget(s: &str) -> Result<Duration, String> {
    let d = humantime::parse_duration(s).map_err(|e| e.to_string())?;
    if d.is_zero() {
        return Err("budget must be positive".into());
    }
    Ok(d)
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    let budget = cli.run.budget.map_or(Budget::unlimited(), Budget::of);
    let cache = cli.run.cache.map(ResultsCache::new);
    let workers = cli.run.workers as usize;
    match cli.command {
        Command::Check { sequence, n, m } => commands::check(&sequence, n, m),
        Command::F { n, k } => with_workers(workers, || {
            commands::extremal(ExtremalKind::F, n, k, budget, cache.as_ref())
        })?,
        Command::H { n, k } => with_workers(workers, || {
            commands::extremal(ExtremalKind::H, n, k, budget, cache.as_ref())
        })?,
        Command::Verify {
            theorem,
            n,
            max_n,
            k,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let moduli = commands::moduli_for(theorem, n, max_n)?;
            with_workers(workers, || commands::verify(theorem, moduli, k, budget))?
        }
        Command::Scan { max_n } => with_workers(workers, || commands::scan(max_n, budget))?,
        Command::Canon { sequence, n } => commands::canon(&sequence, n),
        Command::Sums { sequence, n, k } => commands::sums(&sequence, n, k),
    }
}

/// Failures of a stated result are findings; everything else is usage.
fn error_status(e: &anyhow::Error) -> Status {
    match e.downcast_ref::<zsum_core::Error>() {
        Some(inner) if inner.is_critical() => Status::Finding,
        _ => Status::Usage,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.run.format;
    match run(cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if let Err(e) = report
                .write(format, &mut out)
                .and_then(|_| Ok(out.flush()?))
            {
                eprintln!("zsum: {e:#}");
                return ExitCode::from(Status::Usage as u8);
            }
            ExitCode::from(report.status as u8)
        }
        Err(e) => {
            eprintln!("zsum: {e:#}");
            ExitCode::from(error_status(&e) as u8)
        }
    }
}
