//! Scenario files: which suites to run, over which structure, with which
//! seed, budget and size bounds.

use std::path::Path;

use serde::{Deserialize, Serialize};
use tiltwork_core::exact::{Carrier, ExactStructure, Flavor};
use tiltwork_core::sampling::Bounds;
use tiltwork_core::suites::{default_suites, find, Suite, SuiteContext};
use tiltwork_core::RingSpec;

pub const MAX_WIDTH_LIMIT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioBounds {
    pub max_rank: usize,
    pub max_entry: i64,
    pub max_degree: usize,
    pub max_width: usize,
}

impl Default for ScenarioBounds {
    fn default() -> ScenarioBounds {
        let b = Bounds::default();
        ScenarioBounds { max_rank: b.max_rank, max_entry: b.max_entry, max_degree: b.max_degree, max_width: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub ring: RingSpec,
    pub carrier: Option<Carrier>,
    pub flavor: Option<Flavor>,
    /// Empty means the default battery.
    pub suites: Vec<String>,
    pub sample_budget: usize,
    pub seed: u64,
    pub bounds: ScenarioBounds,
}

impl Default for Scenario {
    fn default() -> Scenario {
        Scenario {
            ring: RingSpec::Integers,
            carrier: None,
            flavor: None,
            suites: Vec::new(),
            sample_budget: 100,
            seed: 1,
            bounds: ScenarioBounds::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid scenario: {0}")]
    Invalid(String),
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Scenario, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
        let scenario: Scenario = serde_json::from_str(&text).map_err(|e| LoadError::Invalid(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn validate(&self) -> Result<(), LoadError> {
        self.selected_suites()?;
        self.exact_structure()?;
        let b = &self.bounds;
        if b.max_width == 0 || b.max_width > MAX_WIDTH_LIMIT {
            return Err(LoadError::Invalid(format!("max_width must lie in 1..={MAX_WIDTH_LIMIT}")));
        }
        if b.max_entry < 1 {
            return Err(LoadError::Invalid("max_entry must be positive".into()));
        }
        Ok(())
    }

    pub fn exact_structure(&self) -> Result<Option<ExactStructure>, LoadError> {
        match (self.carrier, self.flavor) {
            (Some(c), Some(f)) => Ok(Some(ExactStructure::new(c, f))),
            (None, None) => Ok(None),
            _ => Err(LoadError::Invalid("carrier and flavor must be given together".into())),
        }
    }

    /// The suites to run, in order, without repetitions.
    pub fn selected_suites(&self) -> Result<Vec<&'static Suite>, LoadError> {
        if self.suites.is_empty() {
            return Ok(default_suites().collect());
        }
        let mut out: Vec<&'static Suite> = Vec::new();
        for name in &self.suites {
            let suite = find(name).ok_or_else(|| LoadError::Invalid(format!("unknown suite `{name}`")))?;
            if !out.iter().any(|s| s.name == suite.name) {
                out.push(suite);
            }
        }
        Ok(out)
    }

    pub fn context(&self) -> Result<SuiteContext, LoadError> {
        let b = &self.bounds;
        let mut ctx = SuiteContext::new(self.sample_budget, self.seed);
        ctx.ring = self.ring;
        ctx.exact = self.exact_structure()?;
        ctx.bounds = Bounds { max_rank: b.max_rank, max_entry: b.max_entry, max_degree: b.max_degree };
        ctx.max_width = b.max_width;
        Ok(ctx)
    }
}
