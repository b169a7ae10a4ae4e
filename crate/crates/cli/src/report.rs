use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use tiltwork_core::report::Failure;
use tiltwork_core::sampling::DISTRIBUTION_VERSION;
use tiltwork_core::suites::Suite;

use crate::scenario::Scenario;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub anchor: String,
    pub seed: u64,
    pub samples: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub distribution_version: u32,
    pub scenario: Scenario,
    pub passed: bool,
    pub total_failures: usize,
    pub suites: Vec<SuiteReport>,
}

/// A suite that could not run on the scenario's ring or structure.
#[derive(Debug)]
pub struct Unsupported {
    pub suite: &'static str,
    pub message: String,
}

pub fn run(scenario: &Scenario, suites: &[&'static Suite]) -> Result<Report, Unsupported> {
    let ctx = scenario.context().map_err(|e| Unsupported { suite: "", message: e.to_string() })?;
    let mut out = Vec::with_capacity(suites.len());
    for suite in suites {
        let start = Instant::now();
        let mut report = (suite.run)(&ctx).map_err(|e| Unsupported { suite: suite.name, message: e.to_string() })?;
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        report.sort();
        out.push(SuiteReport {
            name: suite.name.to_string(),
            anchor: suite.anchor.to_string(),
            seed: ctx.seed,
            samples: report.samples,
            failures: report.failures,
            wall_time_ms,
        });
    }
    let total_failures = out.iter().map(|s| s.failures.len()).sum();
    let mut resolved = scenario.clone();
    resolved.suites = suites.iter().map(|s| s.name.to_string()).collect();
    Ok(Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        distribution_version: DISTRIBUTION_VERSION,
        scenario: resolved,
        passed: total_failures == 0,
        total_failures,
        suites: out,
    })
}

impl Report {
    /// Plain-text rendering: a header with every suite and the statement
    /// it checks, then one result line per suite.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let sc = &self.scenario;
        let _ = writeln!(
            s,
            "tiltwork {}  ring {}  seed {}  budget {}  distribution v{}",
            self.tool_version, sc.ring, sc.seed, sc.sample_budget, self.distribution_version
        );
        if let (Some(c), Some(f)) = (sc.carrier, sc.flavor) {
            let _ = writeln!(s, "structure {c:?}/{f:?}");
        }
        for suite in &self.suites {
            let _ = writeln!(s, "  {:<22} {}", suite.name, suite.anchor);
        }
        let _ = writeln!(s);
        for suite in &self.suites {
            let status = if suite.failures.is_empty() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{status}  {:<22} {:>5} samples {:>4} failures {:>9.1} ms",
                suite.name,
                suite.samples,
                suite.failures.len(),
                suite.wall_time_ms
            );
            for f in suite.failures.iter().take(5) {
                let _ = writeln!(s, "      sample {:>5}: {}", f.sample, f.check);
            }
            if suite.failures.len() > 5 {
                let _ = writeln!(s, "      ... {} more", suite.failures.len() - 5);
            }
        }
        let _ = writeln!(
            s,
            "\n{}: {} failures in {} suites",
            if self.passed { "PASS" } else { "FAIL" },
            self.total_failures,
            self.suites.len()
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tiltwork_core::suites::find;

    #[test]
    fn small_run_reports_each_suite() {
        let scenario = Scenario { sample_budget: 5, ..Scenario::default() };
        let suites = [find("smith-normal-form").unwrap(), find("acyclicity").unwrap()];
        let report = run(&scenario, &suites).unwrap();
        assert!(report.passed);
        assert_eq!(report.suites.len(), 2);
        assert_eq!(report.scenario.suites, ["smith-normal-form", "acyclicity"]);
        let text = report.summary();
        assert!(text.contains("PASS  smith-normal-form"));
        assert!(text.contains(suites[1].anchor));
    }

    #[test]
    fn unsupported_ring_is_reported() {
        let scenario =
            Scenario { sample_budget: 2, ring: tiltwork_core::RingSpec::RationalPolynomials, ..Scenario::default() };
        let err = run(&scenario, &[find("heart-identification").unwrap()]).unwrap_err();
        assert_eq!(err.suite, "heart-identification");
    }
}
