use std::process::ExitCode;

use clap::Parser;
use toruskit_cli::{error_document, run, Command, JobSpec, CAPS_ENV};

/// Exact toric computations for hypersurfaces in split tori.
#[derive(Parser, Debug)]
#[command(name = "toruskit", version)]
struct Args {
    command: Command,
    /// Input document: a file path, `-` for stdin, or inline JSON.
    #[arg(long = "in", value_name = "INPUT", required = true)]
    inputs: Vec<String>,
    /// Output path; stdout when absent.
    #[arg(long = "out", value_name = "PATH")]
    output: Option<String>,
    /// `key=value`; caps (saturation, resolution, m_max, exponent) or a command option.
    #[arg(long = "opt", value_name = "KEY=VALUE")]
    options: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = JobSpec::parse_options(&args.options).and_then(|options| {
        let job = JobSpec {
            command: args.command,
            inputs: args.inputs,
            output: args.output.clone(),
            options,
            caps_env: std::env::var(CAPS_ENV).ok(),
        };
        run(&job)
    });
    let (text, code) = match result {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err(e) => {
            eprintln!("toruskit: {e}");
            (error_document(&e), ExitCode::from(2))
        }
    };
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("toruskit: {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    code
}
