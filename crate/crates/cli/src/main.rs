//! `dskit` command-line front end.
//!
//! Exit codes: 0 when every applicable check holds, 1 when a check fails,
//! 2 for usage errors, 3 for unreadable input, 4 for unmet preconditions.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dskit::homology::FieldSpec;

#[derive(Parser, Debug)]
#[command(name = "dskit", version, about = "Face enumeration and Dehn-Sommerville checks for simplicial complexes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field for homology: `q` or a prime.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Vertex coloring file (`vertex color` per line).
    #[arg(long, global = true, value_name = "FILE")]
    pub colors: Option<PathBuf>,
    /// Refuse complexes with more faces than this.
    #[arg(long, global = true, env = "DSKIT_MAX_FACES", value_name = "N")]
    pub max_faces: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print f_{-1} .. f_{d-1}.
    FVector(Input),
    /// Print h_0 .. h_d.
    HVector(Input),
    /// Print every face with its multiplicity.
    Multiplicities(Input),
    /// Print the interior face numbers of a reciprocal complex.
    Interior(Input),
    /// Reciprocal, semi-Eulerian, Eulerian and homology manifold tests.
    Classify(Input),
    /// Reduced Betti numbers and the homology manifold verdict.
    Betti(Input),
    /// Check relations; `all` runs every applicable one.
    Verify {
        #[arg(long, default_value = "all")]
        relation: String,
        #[command(flatten)]
        input: Input,
    },
    /// Flag f- and h-vectors of a colored complex (needs --colors).
    Flag(Input),
    /// Hilbert series of the Stanley-Reisner ring.
    Hilbert(Input),
    /// Generate a named complex.
    Gen {
        family: String,
        params: Vec<String>,
        /// Also write the family's coloring.
        #[arg(long, value_name = "FILE")]
        colors_out: Option<PathBuf>,
    },
    /// Run `verify --relation all` on every `.cplx` file in a directory.
    Batch { dir: PathBuf },
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// `.cplx` file; stdin when absent or `-`.
    pub file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(failure) => {
            failure.report(cli.global.json);
            ExitCode::from(failure.code())
        }
    }
}
