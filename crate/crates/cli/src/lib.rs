//! Command-line front end for orbifold character-variety dimensions and the
//! SL(3) trace-coordinate checks.
//!
//! [`run`] is the whole program: `main` only forwards the process arguments
//! and streams. Exit codes are 0 on success, 1 on a domain or validation
//! error and 2 on a parse error.

mod commands;
pub mod output;
pub mod regression;
pub mod tables;

use clap::{Parser, Subcommand};
use output::Format;
use std::ffi::OsString;
use std::io::Write;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) => 2,
            Self::Domain(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "orbidim", version, about = "Dimensions of character varieties of orbifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for random sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Numerical tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Upper parameter limit for table verbs.
    #[arg(long, global = true)]
    pub n_max: Option<u32>,
    /// Assert that the 3-orbifold with the given boundary is hyperbolic.
    #[arg(long, global = true)]
    pub assume_hyperbolic: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rational orbifold Euler characteristic.
    Chi { signature: String },
    /// Geometry of a closed 2-orbifold.
    Classify { signature: String },
    /// Dimension of the centralizer of a principal finite subgroup.
    #[command(group = clap::ArgGroup::new("kind").required(true))]
    Stab {
        #[arg(long)]
        group: String,
        /// Cyclic group of order K.
        #[arg(long, group = "kind")]
        cyclic: Option<u32>,
        /// Dihedral group of order 2K.
        #[arg(long, group = "kind")]
        dihedral: Option<u32>,
        /// A single reflection.
        #[arg(long, group = "kind")]
        reflection: bool,
    },
    /// Dimension of the Hitchin component, with the summand trace.
    Hitchin {
        #[arg(long)]
        group: String,
        signature: String,
    },
    /// Character- and representation-variety dimensions for a Euclidean orbifold.
    Euclidean {
        #[arg(long)]
        group: String,
        signature: String,
    },
    /// Dimension of the relative character variety.
    Relative {
        #[arg(long)]
        group: String,
        signature: String,
    },
    /// Canonical-component dimension of a 3-orbifold from its boundary.
    Canonical {
        #[arg(long)]
        group: String,
        #[arg(long = "boundary", required = true)]
        boundary: Vec<String>,
    },
    /// Component dimensions from Seifert fillings of the figure-eight knot.
    Fig8 {
        #[arg(long)]
        n: u32,
    },
    /// Component dimensions from Seifert fillings of the Whitehead link.
    Whitehead {
        #[arg(long)]
        n: u32,
    },
    /// SL(3) trace coordinates of F2.
    Lawton {
        #[command(subcommand)]
        command: LawtonCommand,
    },
    /// Regenerate table 1-5.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        number: u8,
    },
    /// Diff all tables against the printed values and run the Lawton checks.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum LawtonCommand {
    /// Check the trace identity and Cayley-Hamilton on random SL(3) pairs.
    Selftest {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Trace coordinates of a pair (A, B); 9 complex entries each, row major.
    Coords {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        b: Vec<String>,
    },
    /// Exact verification of the special points (a)-(f).
    PaperPoints,
}

/// Parses `argv` (including the program name), runs the verb and writes the
/// record to `out` or the error to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match commands::execute(&cli) {
        Ok((record, code)) => {
            let _ = out.write_all(record.render(cli.format).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "orbidim: {e}");
            e.exit_code()
        }
    }
}
