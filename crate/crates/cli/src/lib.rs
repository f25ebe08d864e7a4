//! Command-line front end: loads description files, runs the report suites
//! and emits JSON or markdown. Exit code 0 means every clause passed, 1
//! that some clause failed, 2 that the input was invalid.

pub mod commands;
pub mod doc;
pub mod load;
pub mod make;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use doc::{Format, ReportDoc};
pub use load::CliError;

#[derive(Debug, Parser)]
#[command(name = "falab", version, about = "Exact checks for Frobenius algebras, Hopf algebras and fusion rings")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Include per-stage wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra, Hopf, module or fusion file.
    Check { file: PathBuf },
    /// Frobenius data for an algebra and a functional.
    Frobenius {
        algebra: PathBuf,
        /// Values of the functional on the basis: `1,0,0` or a JSON array.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Integrals, unimodularity and separability of a Hopf algebra.
    Integrals { hopf: PathBuf },
    /// Integrals, the induced Frobenius structure and the symmetry suite.
    HopfReport { hopf: PathBuf },
    /// Central character, index and idempotent of a module.
    ModuleReport {
        algebra: PathBuf,
        module: PathBuf,
        /// Defaults to the integral functional when the algebra is Hopf.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Also check integrality over the order spanned by the basis.
        #[arg(long)]
        basis_order: bool,
    },
    /// Grothendieck ring analyses.
    #[command(subcommand)]
    G0(G0Command),
    /// Divisibility of dim H by the dimensions of irreducibles.
    Zhu { fusion: PathBuf },
    /// Write a built-in example.
    Make {
        name: String,
        /// `Q`, `Fp:<p>` or `cyclo:<n>`.
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum G0Command {
    /// Build G_0(H) from a Hopf file and its irreducible modules.
    Build {
        hopf: PathBuf,
        /// Module files; defaults to the `modules` array of the Hopf file.
        modules: Vec<PathBuf>,
        /// Also write the fusion ring file here.
        #[arg(long)]
        fusion_out: Option<PathBuf>,
    },
    /// Adjoint class and its spectrum.
    Spectrum { fusion: PathBuf },
    /// Primes where the ring stays semisimple.
    SsLocus { fusion: PathBuf },
    /// Class equation from the characters of the ring.
    ClassEq { fusion: PathBuf },
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn invalid(message: String) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (text, code) = match commands::execute(&cli) {
        Ok(commands::Output::Report(doc)) => (doc.emit(cli.format, cli.timings), doc.exit_code()),
        Ok(commands::Output::File(v)) => {
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            (s, 0)
        }
        Err(e) => return Outcome::invalid(e.to_string()),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::invalid(format!("{}: {e}", path.display())),
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}
