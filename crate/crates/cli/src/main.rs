use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pts_core::exactla::Delta;
use pts_core::Error;

mod commands;

/// Exit code for a failed check (mismatch, axiom violation, refused input).
pub const EXIT_VERIFICATION: u8 = 1;
/// Exit code for unreadable or malformed input and write failures.
pub const EXIT_IO: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "pts", version, about = "Identities and envelopes of Poisson triple systems")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis counts of the ternary and Poisson multilinear components.
    Tables,
    /// Expansion matrix, integer kernel, LLL passes and module generators.
    Derive {
        #[arg(long, default_value_t = 5)]
        degree: usize,
        /// LLL parameter as p/q; repeat for several passes.
        #[arg(long = "delta", value_name = "P/Q")]
        deltas: Vec<Delta>,
        /// Directory for the JSON report and matrix files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a Poisson or triple-system structure file.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample this many tuples instead of checking every one.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Builds and checks the enveloping Poisson algebra.
    Envelope {
        path: PathBuf,
        /// Writes the envelope as a Poisson structure file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accepts input that fails the triple-system axioms.
        #[arg(long)]
        force: bool,
    },
    /// Runs the property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Polynomial sample count.
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tables => commands::tables(cli.format),
        Command::Derive { degree, deltas, out } => commands::derive(degree, deltas, out, cli.format),
        Command::Verify { path, seed, trials } => commands::verify(&path, seed, trials, cli.format),
        Command::Envelope { path, out, force } => commands::envelope(&path, out, force, cli.format),
        Command::Selftest { seed, trials } => commands::selftest(seed, trials, cli.format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFICATION),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Precondition { violations, .. } = &e {
                for v in violations.iter().take(5) {
                    eprintln!("  {} at {:?}: {} != {}", v.axiom, v.indices, v.left, v.right);
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition { .. } | Error::NotInKernel(_) => EXIT_VERIFICATION,
        _ => EXIT_IO,
    }
}
