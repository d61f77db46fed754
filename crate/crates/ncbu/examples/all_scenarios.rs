//! Runs every registered scenario and prints a one-line summary per run,
//! exiting nonzero if any verdict differs from its declared expectation.
//!
//! Run with: cargo run -p ncbu --example all_scenarios

use ncbu::scenario::{list_scenarios, run_scenario, Config, Outcome};

fn main() {
    let cfg = Config::default();
    let mut worst = 0;
    for name in list_scenarios() {
        match run_scenario(name, &cfg) {
            Ok(report) => {
                let ok = report.checks.iter().filter(|c| c.ok).count();
                println!(
                    "{name:<22} {:<5} {ok}/{} checks as expected ({} ms)",
                    match report.overall {
                        Outcome::Pass => "pass",
                        Outcome::Fail => "FAIL",
                        Outcome::Error => "ERROR",
                    },
                    report.checks.len(),
                    report.wall_ms
                );
                worst = worst.max(report.exit_code());
            }
            Err(e) => {
                println!("{name:<22} ERROR {e}");
                worst = worst.max(2);
            }
        }
    }
    std::process::exit(worst);
}
