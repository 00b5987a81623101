use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fourfold_cli::commands::{self, CliError, CommandOutput};

/// Exact classification of special cubic fourfolds containing a plane plus
/// a scroll or Veronese surface, with a finite-field verification lab for
/// explicit equations.
#[derive(Parser)]
#[command(name = "fourfold", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the components of one divisor intersection (m12 or m20).
    Classify {
        /// Family tag: m12 (plane + cubic scroll) or m20 (plane + Veronese).
        #[arg(long)]
        family: String,
        #[arg(long)]
        json: bool,
    },
    /// Lattice-level witnesses.
    Lattice {
        #[command(subcommand)]
        sub: LatticeCommand,
    },
    /// Excess-intersection and multiplicity arithmetic.
    Excess {
        /// cubic-fourfold, scroll-projection, or veronese-projection.
        #[arg(long)]
        preset: String,
        /// Degree of the shared curve.
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Genus of the shared curve.
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        /// Canonical pairing of the first surface with the curve.
        #[arg(long, allow_negative_numbers = true)]
        k1c: i64,
        /// Canonical pairing of the second surface; omit for the
        /// surface-meets-plane excess formula.
        #[arg(long, allow_negative_numbers = true)]
        k2c: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Re-verify a directory of example files.
    Verify {
        /// Directory of *.json example files.
        #[arg(long)]
        examples: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Construct a fresh verified example and print it as an example file.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        param: i64,
        #[arg(long)]
        seed: u64,
        /// Override the plane placement: generic, points:1..3, conic,
        /// ruling, directrix.
        #[arg(long)]
        constraint: Option<String>,
        /// Retry budget for random draws.
        #[arg(long, default_value_t = 50)]
        budget: u32,
    },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Enumerate the norm-2 vectors of a Gram matrix.
    Shortroots {
        /// Inline matrix like [[3,1,2],[1,3,2],[2,2,3]] or a file path.
        #[arg(long)]
        gram: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the integral overlattice case log for one parameter.
    Overlattices {
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        param: i64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, json): (Result<CommandOutput, CliError>, bool) = match cli.command {
        Command::Classify { family, json } => (commands::run_classify(&family, json), json),
        Command::Lattice { sub } => match sub {
            LatticeCommand::Shortroots { gram, json } => {
                (commands::run_shortroots(&gram, json), json)
            }
            LatticeCommand::Overlattices {
                family,
                param,
                json,
            } => (commands::run_overlattices(&family, param, json), json),
        },
        Command::Excess {
            preset,
            d,
            g,
            k1c,
            k2c,
            json,
        } => (commands::run_excess(&preset, d, g, k1c, k2c, json), json),
        Command::Verify { examples, json } => (commands::run_verify(&examples, json), json),
        Command::Construct {
            family,
            param,
            seed,
            constraint,
            budget,
        } => (
            commands::run_construct(&family, param, seed, budget, constraint.as_deref()),
            true,
        ),
    };
    match result {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.code as u8)
        }
        Err(err) => {
            eprintln!("{}", err.render(json));
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
