use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use flagdom_cli::commands::{self, InputError, Output, EXIT_INPUT};
use flagdom_cli::report::Format;
use flagdom_core::chainball::{ChainParams, DEFAULT_KMAX, DEFAULT_N_RESTARTS, DEFAULT_N_SAMPLES, DEFAULT_TOL_MEM};

/// Classification of flag domains by root labelings, and chains of cycles in
/// the SU(2,1) flag domain.
#[derive(Debug, Parser)]
#[command(name = "flagdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output encoding: json, csv or text.
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one labeling of the simple roots.
    Classify {
        /// Cartan family, A through G.
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Comma-separated V/K/Q letters in Bourbaki order.
        #[arg(long)]
        labels: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify every valid labeling of one type.
    Enumerate {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Connect random pairs of points by verified chains of cycles.
    Chain {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        pairs: usize,
        /// Maximum number of cycle changes per chain.
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        /// Membership tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL_MEM)]
        tol: f64,
        /// Candidate samples per optimization round.
        #[arg(long, default_value_t = DEFAULT_N_SAMPLES)]
        samples: usize,
        /// Random restarts per construction.
        #[arg(long, default_value_t = DEFAULT_N_RESTARTS)]
        restarts: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the invariant suites for all types up to a rank.
    Selftest {
        /// Largest rank to check.
        #[arg(long = "rank", alias = "max-rank", default_value_t = 4)]
        max_rank: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn run(command: Command) -> Result<(Output, Option<PathBuf>), InputError> {
    Ok(match command {
        Command::Classify { family, rank, labels, common } => {
            let ty = commands::root_type(&family, rank)?;
            (commands::cmd_classify(ty, &labels, common.format)?, common.out)
        }
        Command::Enumerate { family, rank, common } => {
            let ty = commands::root_type(&family, rank)?;
            (commands::cmd_enumerate(ty, common.format), common.out)
        }
        Command::Chain { seed, pairs, kmax, tol, samples, restarts, common } => {
            let params = ChainParams {
                tol_mem: tol,
                kmax,
                n_samples: samples,
                n_restarts: restarts,
                ..ChainParams::default()
            };
            (commands::cmd_chain(seed, pairs, &params, common.format)?, common.out)
        }
        Command::Selftest { max_rank, common } => (commands::cmd_selftest(max_rank, common.format)?, common.out),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let (output, path) = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let written = match &path {
        Some(p) => std::fs::write(p, &output.body),
        None => std::io::stdout().lock().write_all(output.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(output.status)
}
