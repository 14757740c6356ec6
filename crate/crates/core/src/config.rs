//! JSON experiment configuration: one object per block (`design`, `rule`, `scenario`,
//! `testing`, `run`). Unknown keys are rejected and parse errors carry line and column.
//!
//! ```json
//! {
//!   "design": { "regime": "sequential", "h": 2, "n": 60, "n0": 30, "burn_in": [5, 5] },
//!   "rule": { "name": "inflator" },
//!   "scenario": { "mu": 0, "deltas": [0, 1] },
//!   "testing": { "alpha": 0.05, "strategies": ["adaptive_holm", "z_holm"] },
//!   "run": { "sims": 10000, "seed": 1 }
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::auxiliary::AuxPolicy;
use crate::design::{Regime, ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::rules::RuleSpec;
use crate::sim::{Experiment, DEFAULT_SIMS};
use crate::testing::{AnalysisOptions, Strategy, VarianceMode};
use crate::weights::SplitRule;

/// Regime names accepted in `design.regime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeName {
    Sequential,
    BlockFixed,
    BlockAdaptiveControl,
}

impl From<Regime> for RegimeName {
    fn from(r: Regime) -> Self {
        match r {
            Regime::FullySequentialFixedControl => RegimeName::Sequential,
            Regime::BlockFixedControl => RegimeName::BlockFixed,
            Regime::BlockAdaptiveControl => RegimeName::BlockAdaptiveControl,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignConfig {
    pub regime: RegimeName,
    pub h: usize,
    /// Sequential regime: total experimental patients including burn-in.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Sequential regime: control group size.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
    pub burn_in: Vec<usize>,
    #[serde(default)]
    pub control_burn_in: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub control_blocks: Vec<usize>,
}

impl DesignConfig {
    pub fn from_design(d: &TrialDesign) -> Self {
        let sequential = d.regime == Regime::FullySequentialFixedControl;
        DesignConfig {
            regime: d.regime.into(),
            h: d.h,
            n: sequential.then_some(d.n),
            n0: sequential.then_some(d.n0),
            burn_in: d.burn_in.clone(),
            control_burn_in: d.control_burn_in,
            blocks: d.blocks.clone(),
            control_blocks: d.control_blocks.clone(),
        }
    }

    pub fn build(&self, alpha: f64) -> Result<TrialDesign> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| {
                Error::Config(format!(
                    "design.{name} is required for the sequential regime"
                ))
            })
        };
        let design = match self.regime {
            RegimeName::Sequential => {
                if !self.blocks.is_empty() || !self.control_blocks.is_empty() {
                    return Err(Error::Config(
                        "the sequential regime takes no blocks".into(),
                    ));
                }
                TrialDesign::sequential(
                    self.h,
                    need(self.n, "n")?,
                    need(self.n0, "n0")?,
                    self.burn_in.clone(),
                    alpha,
                )
            }
            RegimeName::BlockFixed => TrialDesign::block_fixed(
                self.h,
                self.burn_in.clone(),
                self.control_burn_in,
                self.blocks.clone(),
                self.control_blocks.clone(),
                alpha,
            ),
            RegimeName::BlockAdaptiveControl => {
                if !self.control_blocks.is_empty() {
                    return Err(Error::Config(
                        "control_blocks do not apply with an adaptive control".into(),
                    ));
                }
                TrialDesign::block_adaptive_control(
                    self.h,
                    self.burn_in.clone(),
                    self.control_burn_in,
                    self.blocks.clone(),
                    alpha,
                )
            }
        };
        design.map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarianceName {
    #[default]
    Known,
    Pooled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestingConfig {
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_strategies")]
    pub strategies: Vec<Strategy>,
    #[serde(default)]
    pub variance_mode: VarianceName,
    /// Known outcome standard deviation; defaults to the scenario's.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(default)]
    pub split: SplitRule,
}

impl Default for TestingConfig {
    fn default() -> Self {
        TestingConfig {
            alpha: default_alpha(),
            strategies: default_strategies(),
            variance_mode: VarianceName::Known,
            sigma: None,
            split: SplitRule::default(),
        }
    }
}

impl TestingConfig {
    pub fn variance(&self, scenario_sigma: f64) -> Result<VarianceMode> {
        Ok(match self.variance_mode {
            VarianceName::Pooled => VarianceMode::Pooled,
            VarianceName::Known => {
                let sigma = self.sigma.unwrap_or(scenario_sigma);
                if !(sigma > 0.0 && sigma.is_finite()) {
                    return Err(Error::Config(format!(
                        "testing.sigma must be positive, got {sigma}"
                    )));
                }
                VarianceMode::Known { sigma }
            }
        })
    }
}

fn default_alpha() -> f64 {
    0.05
}

fn default_strategies() -> Vec<Strategy> {
    Strategy::HEADLINE.to_vec()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_sims")]
    pub sims: u64,
    #[serde(default)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    #[serde(default)]
    pub aux_policy: AuxPolicy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            sims: DEFAULT_SIMS,
            seed: 0,
            workers: None,
            aux_policy: AuxPolicy::Independent,
        }
    }
}

fn default_sims() -> u64 {
    DEFAULT_SIMS
}

/// A complete configuration file. `rule` and `scenario` are only needed for simulation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub design: DesignConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<ScenarioSpec>,
    #[serde(default)]
    pub testing: TestingConfig,
    #[serde(default)]
    pub run: RunConfig,
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub sims: Option<u64>,
    pub workers: Option<usize>,
    pub alpha: Option<f64>,
}

impl ExperimentConfig {
    /// Parse JSON text; `origin` names the source in error messages.
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Config(format!(
                "{origin}:{}:{}: {}",
                e.line(),
                e.column(),
                strip_position(&e.to_string())
            ))
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text, &path.display().to_string())
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(seed) = o.seed {
            self.run.seed = seed;
        }
        if let Some(sims) = o.sims {
            self.run.sims = sims;
        }
        if let Some(workers) = o.workers {
            self.run.workers = Some(workers);
        }
        if let Some(alpha) = o.alpha {
            self.testing.alpha = alpha;
        }
    }

    pub fn design(&self) -> Result<TrialDesign> {
        self.design.build(self.testing.alpha)
    }

    fn scenario_sigma(&self) -> f64 {
        self.scenario.as_ref().map_or(1.0, |s| s.sigma)
    }

    /// Analysis settings for replicate `replicate` of this configuration's seed.
    pub fn analysis_options(&self, replicate: u64) -> Result<AnalysisOptions> {
        let mut opts = AnalysisOptions::new(
            self.testing.alpha,
            crate::streams::derive_seed(self.run.seed, &[replicate]),
        );
        opts.variance = self.testing.variance(self.scenario_sigma())?;
        opts.split = self.testing.split;
        opts.aux_policy = self.run.aux_policy;
        opts.closure = self.testing.strategies.iter().any(|s| s.uses_closure());
        Ok(opts)
    }

    /// Build and validate the experiment, including the rule for this design.
    pub fn experiment(&self) -> Result<Experiment> {
        let design = self.design()?;
        let rule = self
            .rule
            .clone()
            .ok_or_else(|| Error::Config("a `rule` block is required to simulate".into()))?;
        let scenario = self
            .scenario
            .clone()
            .ok_or_else(|| Error::Config("a `scenario` block is required to simulate".into()))?;
        let mut exp = Experiment::new(design, rule, scenario, self.run.sims, self.run.seed);
        exp.strategies = self.testing.strategies.clone();
        exp.variance = self.testing.variance(exp.scenario.sigma)?;
        exp.split = self.testing.split;
        exp.aux_policy = self.run.aux_policy;
        exp.validate().map_err(|e| Error::Config(e.to_string()))?;
        exp.rule.build(&exp.design).map_err(|e| match e {
            Error::IncompatibleRule { .. } | Error::Config(_) => Error::Config(e.to_string()),
            other => other,
        })?;
        if !(0.0..1.0).contains(&self.testing.alpha) {
            return Err(Error::Config(format!(
                "alpha must lie in [0, 1), got {}",
                self.testing.alpha
            )));
        }
        Ok(exp)
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}
