use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kisces_cli::{emit_report, parse_config, run_command, CliError, Command, OutputFormat};

/// KIS-CES fiscal stabilisation model.
#[derive(Debug, Parser)]
#[command(name = "kisces", version)]
struct Args {
    /// One of: table1, scenario, multiplier, mpc, production, path.
    command: String,

    /// JSON config file. Missing sections fall back to the built-in calibration.
    #[arg(long, env = "KISCES_CONFIG")]
    config: Option<PathBuf>,

    /// Output encoding; overrides `output_format` in the config.
    #[arg(long)]
    format: Option<OutputFormat>,

    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for the sentiment innovations; overrides `seed` in the config.
    #[arg(long)]
    seed: Option<u64>,
}

fn run(args: Args) -> Result<(), CliError> {
    let command: Command = args.command.parse()?;
    let text = match &args.config {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io {
            context: format!("reading {}", path.display()),
            source,
        })?,
        None => String::new(),
    };
    let mut loaded = parse_config(&text)?;
    if let Some(seed) = args.seed {
        loaded.config.seed = seed;
    }
    let format = args.format.unwrap_or(loaded.config.output_format);

    let report = run_command(command, &loaded)?;
    let bytes = emit_report(&report, format);

    match &args.out {
        Some(path) => fs::write(path, &bytes).map_err(|source| CliError::Io {
            context: format!("writing {}", path.display()),
            source,
        }),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|source| CliError::Io {
                context: "writing stdout".into(),
                source,
            }),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("kisces: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
