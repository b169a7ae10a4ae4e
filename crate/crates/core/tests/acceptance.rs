//! The acceptance battery: every criterion at its stated sample count,
//! tolerance and time limit, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use tiltwork_core::exact::Carrier;
use tiltwork_core::fpmod::FpModule;
use tiltwork_core::report::CheckReport;
use tiltwork_core::sampling::Bounds;
use tiltwork_core::suites::{find, SuiteContext};
use tiltwork_core::tstructure::cogeneration_witness;

const SEED: u64 = 20_240_601;

struct Outcome {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn run(name: &str, budget: usize, bounds: Bounds) -> (CheckReport, Duration) {
    let mut ctx = SuiteContext::new(budget, SEED);
    ctx.bounds = bounds;
    let start = Instant::now();
    let report = (find(name).expect("registered suite").run)(&ctx).expect("suite runs");
    (report, start.elapsed())
}

fn criterion(
    id: usize,
    title: &'static str,
    suites: &[(&str, usize)],
    limit: Option<Duration>,
    bounds: Bounds,
) -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for &(name, budget) in suites {
        let (report, elapsed) = run(name, budget, bounds);
        let in_time = limit.is_none_or(|l| elapsed < l);
        passed &= report.passed() && in_time;
        parts.push(format!(
            "{name}: {} samples, {} failures, {:.2}s{}",
            report.samples,
            report.failures.len(),
            elapsed.as_secs_f64(),
            if in_time { "" } else { " (over time limit)" }
        ));
        if let Some(f) = report.failures.first() {
            parts.push(format!("first failure `{}` at sample {}", f.check, f.sample));
        }
    }
    Outcome { id, title, passed, detail: parts.join("; ") }
}

fn negative_controls() -> Outcome {
    let (report, elapsed) = run("corrupted", 1, Bounds::default());
    let corrupted_fails = report.failures.len() == 1 && report.failures[0].check == "orthogonality";
    let witness = cogeneration_witness(Carrier::FreeZ, &FpModule::cyclic(2)).expect("supported class");
    let (controls, _) = run("negative-controls", 100, Bounds::default());
    Outcome {
        id: 11,
        title: "negative controls",
        passed: corrupted_fails && witness.is_none() && controls.passed(),
        detail: format!(
            "corrupted suite failures = {} ({:.2}s); free-class witness for Z/2 = {}; control suite failures = {}",
            report.failures.len(),
            elapsed.as_secs_f64(),
            if witness.is_some() { "found" } else { "none" },
            controls.failures.len()
        ),
    }
}

#[test]
fn acceptance() {
    let default = Bounds::default();
    let snf = Bounds { max_rank: 6, max_entry: 20, ..default };
    let secs = Duration::from_secs;
    let outcomes = vec![
        criterion(1, "exact linear algebra", &[("smith-normal-form", 500)], Some(secs(5)), snf),
        criterion(2, "fp-module universal properties", &[("universal-properties", 200)], Some(secs(10)), default),
        criterion(3, "global dimension", &[("global-dimension", 100)], None, default),
        criterion(
            4,
            "t-structure axioms",
            &[("tstructure-natural", 50), ("tstructure-left", 50), ("tstructure-right", 50), ("tstructure-hrs", 50)],
            Some(secs(60)),
            default,
        ),
        criterion(5, "heart identification", &[("heart-identification", 100)], None, default),
        criterion(6, "intersection of hearts", &[("heart-intersection", 100)], None, default),
        criterion(7, "HRS consistency", &[("hrs-consistency", 100)], None, default),
        criterion(8, "acyclicity transfer", &[("acyclicity", 100)], None, default),
        criterion(9, "effaceables form a Serre subcategory", &[("serre-subcategory", 100)], None, default),
        criterion(10, "Auslander formula", &[("auslander-formula", 100)], Some(secs(60)), default),
        negative_controls(),
    ];
    for o in &outcomes {
        println!("criterion {:>2} {:<40} {}  {}", o.id, o.title, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
