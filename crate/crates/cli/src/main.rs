mod report;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use tiltwork_core::suites::SUITES;

use scenario::Scenario;

const EXIT_FAILURES: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_IO: u8 = 4;

/// Runs seeded property suites and writes a JSON report.
#[derive(Debug, Parser)]
#[command(name = "tiltwork", version)]
struct Args {
    /// Scenario file (JSON). Defaults apply when omitted.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the scenario seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Replaces the scenario's suite list; repeatable.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Overrides the per-suite sample budget.
    #[arg(long)]
    budget: Option<usize>,
    /// Lists suite names with the statements they check, then exits.
    #[arg(long)]
    list_suites: bool,
}

fn list_suites() {
    for s in SUITES {
        println!("{:<22} {:<8} {}", s.name, if s.default { "default" } else { "extra" }, s.anchor);
    }
}

fn load(args: &Args) -> Result<Scenario, scenario::LoadError> {
    let mut sc = match &args.scenario {
        Some(path) => Scenario::load(path)?,
        None => Scenario::default(),
    };
    if let Some(seed) = args.seed {
        sc.seed = seed;
    }
    if let Some(budget) = args.budget {
        sc.sample_budget = budget;
    }
    if !args.suites.is_empty() {
        sc.suites = args.suites.clone();
    }
    sc.validate()?;
    Ok(sc)
}

fn write_report(path: &PathBuf, report: &report::Report) -> anyhow::Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_suites {
        list_suites();
        return ExitCode::SUCCESS;
    }
    let sc = match load(&args) {
        Ok(sc) => sc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let suites = sc.selected_suites().expect("validated");
    let report = match report::run(&sc, &suites) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: unsupported combination in suite `{}`: {}", e.suite, e.message);
            return ExitCode::from(EXIT_UNSUPPORTED);
        }
    };
    print!("{}", report.summary());
    if let Some(path) = &args.out {
        if let Err(e) = write_report(path, &report) {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_IO);
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURES)
    }
}
