use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ismzv::verify::Identity;

mod commands;
mod options;

use options::Options;

/// Exact truncated interpolated Schur multiple zeta values.
///
/// Every command prints one JSON document; verification commands also print
/// a summary on standard error. Exit codes: 0 success, 1 identity mismatch,
/// 2 malformed input, 3 domain error.
#[derive(Parser)]
#[command(name = "ismzv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Value of a tableau (--shape with --entries or --diagonal) or of an index sequence (--keys)
    Compute(Options),
    /// Number of ordered fillings of --shape with entries below --N
    OytCount(Options),
    /// Schur value against both determinant formulas
    JtVerify(Options),
    /// Lattice path systems against the determinant and the Schur value
    LgvVerify(Options),
    /// Single-layer path systems against their closed form
    Lemma45Verify(Options),
    /// Transposed tableau against t -> 1 - t
    ConjugationVerify(Options),
    /// Square-shape determinant symmetric under t -> 1 - t
    PalindromeVerify(Options),
    /// Every identity family with default bounds
    AllVerify(Options),
    /// One identity family by name
    Verify {
        /// jacobi-trudi, conjugation, lgv, path-sum, lemma45, oracles or palindrome
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        options: Options,
    },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Domain(String),
}

impl From<ismzv::Error> for Failure {
    fn from(e: ismzv::Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn run(command: Command) -> Result<(commands::Outcome, Option<std::path::PathBuf>), Failure> {
    let (identities, options): (Vec<Identity>, Options) = match command {
        Command::Compute(o) => {
            let o = o.resolve()?;
            return Ok((commands::compute(&o)?, o.output));
        }
        Command::OytCount(o) => {
            let o = o.resolve()?;
            return Ok((commands::oyt_count(&o)?, o.output));
        }
        Command::JtVerify(o) => (vec![Identity::JacobiTrudi], o),
        Command::LgvVerify(o) => (vec![Identity::Lgv], o),
        Command::Lemma45Verify(o) => (vec![Identity::SingleLayer], o),
        Command::ConjugationVerify(o) => (vec![Identity::Conjugation], o),
        Command::PalindromeVerify(o) => (vec![Identity::Palindrome], o),
        Command::AllVerify(o) => (Identity::ALL.to_vec(), o),
        Command::Verify { identity, options } => {
            let id = Identity::from_name(&identity)
                .ok_or_else(|| Failure::Input(format!("unknown identity {identity:?}")))?;
            (vec![id], options)
        }
    };
    let options = options.resolve()?;
    Ok((commands::verify(&identities, &options)?, options.output))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, output) = match run(cli.command) {
        Ok(v) => v,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.document).expect("documents serialize");
    text.push('\n');
    let written = match &output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
