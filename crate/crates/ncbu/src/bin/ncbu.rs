//! Command-line runner for the registered verification scenarios.
//!
//! Exit codes: 0 when every check matches its declared expectation, 1 when
//! any verdict differs, 2 on infrastructure errors (unknown scenario,
//! malformed file, internal failure).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncbu::scenario::{json, list_scenarios, run_scenario, Config, Report, SCENARIOS};

#[derive(Parser)]
#[command(
    name = "ncbu",
    version,
    about = "verification scenarios for crossed products, twisted joins, and equivariant maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered scenarios.
    List,
    /// Run a registered scenario or a scenario file.
    Run {
        /// Name of a registered scenario (see `ncbu list`).
        name: Option<String>,
        /// Run a JSON scenario file instead of a registered name.
        #[arg(long, value_name = "FILE", conflicts_with = "name")]
        file: Option<PathBuf>,
        /// Cyclic order override for parametrized scenarios.
        #[arg(long)]
        k: Option<u32>,
        /// Seed for the randomized representations.
        #[arg(long)]
        seed: Option<u64>,
        /// Grid size for oracle comparisons.
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> std::io::Result<()> {
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => std::fs::write(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for (name, blurb) in SCENARIOS {
                println!("{name:<22} {blurb}");
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            name,
            file,
            k,
            seed,
            grid,
            format,
            out,
        } => {
            let cfg = Config {
                k,
                seed: seed.unwrap_or(Config::default().seed),
                grid,
            };
            let result = match (&name, &file) {
                (Some(n), None) => run_scenario(n, &cfg),
                (None, Some(path)) => json::run_file(path, &cfg),
                _ => {
                    eprintln!("run needs a scenario name or --file; known names:");
                    for n in list_scenarios() {
                        eprintln!("  {n}");
                    }
                    return ExitCode::from(2);
                }
            };
            match result {
                Ok(report) => {
                    if let Err(e) = emit(&report, format, out.as_ref()) {
                        eprintln!("cannot write report: {e}");
                        return ExitCode::from(2);
                    }
                    ExitCode::from(report.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
