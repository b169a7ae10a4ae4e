//! Results of sampled property checks.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::sampling::{Bounds, Sampler};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub sample: u64,
    pub counterexample: serde_json::Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub samples: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.samples += other.samples;
        self.failures.extend(other.failures);
        self.sort();
    }

    pub fn sort(&mut self) {
        self.failures.sort_by(|a, b| (a.sample, &a.check).cmp(&(b.sample, &b.check)));
    }
}

/// Collects failures for one sample.
#[derive(Debug, Default)]
pub struct Probe {
    sample: u64,
    failures: Vec<Failure>,
}

impl Probe {
    pub fn new(sample: u64) -> Probe {
        Probe { sample, failures: Vec::new() }
    }

    /// Records a failure of `check` unless `ok`.
    pub fn expect(&mut self, ok: bool, check: &str, payload: impl FnOnce() -> serde_json::Value) {
        if !ok {
            self.fail(check, payload());
        }
    }

    pub fn fail(&mut self, check: &str, counterexample: serde_json::Value) {
        self.failures.push(Failure { check: check.to_string(), sample: self.sample, counterexample });
    }

    pub fn into_failures(self) -> Vec<Failure> {
        self.failures
    }
}

/// Runs `budget` samples in parallel, each with its own stream split from
/// `seed`, and gathers the failures in a deterministic order.
pub fn run_samples<F>(seed: u64, budget: usize, bounds: Bounds, body: F) -> CheckReport
where
    F: Fn(&mut Sampler, &mut Probe) + Sync,
{
    let failures: Vec<Failure> = (0..budget as u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut s = Sampler::for_sample(seed, i).with_bounds(bounds);
            let mut probe = Probe::new(i);
            body(&mut s, &mut probe);
            probe.into_failures()
        })
        .collect();
    let mut report = CheckReport { samples: budget, failures };
    report.sort();
    report
}
