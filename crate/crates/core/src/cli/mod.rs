//! The `momgauge` command-line front end.
//!
//! Every subcommand prints one JSON document to stdout carrying
//! `"schema_version"` and `"command"`; tabular data goes to an optional CSV
//! file. Exit codes: `0` success, `2` invalid input, `3` failed `--assert`
//! or numerical failure. Numbers are printed in shortest round-trip form
//! (JSON) or with 17 significant digits (CSV), so identical invocations give
//! byte-identical output.

mod field;
mod nc;
mod output;
mod reciprocity;
mod spectrum;
mod theta;

use crate::error::Error;
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;

pub use output::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "momgauge", version, about = "Momentum-space gauge fields and generalized Landau levels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check [X_i, X_j] = iħgG_ij on Gaussian test states.
    NcCheck(nc::NcCheckArgs),
    /// Spectrum of the doubly gauged oscillator, numerical and closed form.
    Spectrum(spectrum::SpectrumArgs),
    /// Θ(p_z) for the momentum capacitor or current sheets.
    ThetaMap(theta::ThetaMapArgs),
    /// Tridiagonal solve of the static sheet-source field equation.
    SolveField(field::SolveFieldArgs),
    /// Spectra of H(eB = a, g𝓑 = b) and H(eB = -b, g𝓑 = -a).
    Reciprocity(reciprocity::ReciprocityArgs),
}

/// A failed run: what to print on stderr and which code to exit with.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into() }
    }

    pub fn assertion(message: impl Into<String>) -> Self {
        Failure { code: EXIT_ASSERT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Numerical(_) | Error::NotHermitian(_) => EXIT_ASSERT,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Output of a successful command: the JSON document, and whether an
/// `--assert` check failed after the document was produced.
pub struct Outcome {
    pub json: String,
    pub assertion: Option<String>,
}

pub fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::NcCheck(a) => nc::run(a),
        Command::Spectrum(a) => spectrum::run(a),
        Command::ThetaMap(a) => theta::run(a),
        Command::SolveField(a) => field::run(a),
        Command::Reciprocity(a) => reciprocity::run(a),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return EXIT_INVALID;
            }
            let _ = stdout.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = writeln!(stdout, "{}", outcome.json);
            match outcome.assertion {
                None => EXIT_OK,
                Some(msg) => {
                    let _ = writeln!(stderr, "assertion failed: {msg}");
                    EXIT_ASSERT
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
