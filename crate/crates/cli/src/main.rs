use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cyclic_cli::commands;
use cyclic_core::witness::DEFAULT_DEGREE_CAP;
use cyclic_core::DEFAULT_CLOSURE_CAP;

/// Decide when every group of order n is cyclic, and build or check
/// non-cyclic witness groups.
#[derive(Parser)]
#[command(name = "cyclic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every group of order n is cyclic.
    Check {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the cyclic numbers in [lo, hi].
    Sieve {
        lo: u64,
        hi: u64,
        #[arg(long)]
        json: bool,
    },
    /// Emit a certificate for a non-cyclic group of order n.
    Witness {
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        max_degree: usize,
    },
    /// Re-verify a certificate file, or the certificate built for n.
    Verify {
        /// An integer n or a certificate path.
        target: String,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Structural report for the group generated by a group file.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all groups of order n up to isomorphism.
    Enumerate {
        n: usize,
        /// Largest order to enumerate (8 by default, at most 10).
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Check { n, json } => commands::check(n, json),
        Command::Sieve { lo, hi, json } => commands::sieve(lo, hi, json),
        Command::Witness { n, out, max_degree } => commands::witness(n, out.as_deref(), max_degree),
        Command::Verify {
            target,
            max_order,
            max_degree,
            json,
        } => commands::verify(&target, max_order, max_degree, json),
        Command::Analyze {
            file,
            max_order,
            json,
        } => commands::analyze(&file, max_order, json),
        Command::Enumerate { n, max_order, json } => commands::enumerate(n, max_order, json),
    };
    // Broken pipes are not worth reporting.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status)
}
