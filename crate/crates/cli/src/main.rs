use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use borelkit_cli::{run_source, Options};
use clap::Parser;

/// Run a borelkit script (`.mid`) from a file or standard input.
#[derive(Parser, Debug)]
#[command(name = "borelkit", version)]
struct Args {
    /// Script file; reads standard input when absent.
    script: Option<PathBuf>,

    /// Emit one JSON document per command instead of text.
    #[arg(long)]
    json: bool,

    /// Seed for randborel commands that do not give their own.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Cap on the number of multidegrees the Betti oracle may visit.
    #[arg(long, env = "BORELKIT_BUDGET", default_value_t = borelkit::DEFAULT_BETTI_BUDGET)]
    betti_budget: u64,

    /// Suppress reports; only the exit code and errors are produced.
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match &args.script {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let source = match source {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read script: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = Options {
        json: args.json,
        seed: args.seed,
        betti_budget: args.betti_budget,
    };
    let outcome = run_source(&source, &opts);
    if !args.quiet {
        let _ = io::stdout().write_all(outcome.output.as_bytes());
    }
    if let Some(err) = &outcome.error {
        eprintln!("error: {err}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
