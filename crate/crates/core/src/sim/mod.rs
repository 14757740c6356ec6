//! Monte Carlo engine: repeated simulated trials, each analysed with every requested
//! strategy, aggregated into familywise error, disjunctive power and anomaly rates.
//!
//! Replicate `i` draws from its own ChaCha8 stream keyed by `(seed, i)` and its auxiliary
//! designs from `derive_seed(seed, [i])`, so counts do not depend on the worker count or
//! on the order in which replicates finish.

pub mod case_study;
pub mod curves;
pub mod null_check;
pub mod presets;
pub mod reference;

pub use case_study::{
    case_study_design, case_study_rule, case_study_scenario, run_case_study, CaseStudy,
};
pub use curves::{figure_preset, power_curve, CurvePoint, CurveSpec, PowerCurve, FIGURE_IDS};
pub use null_check::{null_distribution_check, NullReport};
pub use presets::{
    inflation_experiment, reproduce_table, run_table, table_preset, Setting, TableKind,
    TablePreset, TableRow, TableRun, DEFAULT_SIMS, TABLE_IDS,
};

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::auxiliary::AuxPolicy;
use crate::design::{ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::rules::{AllocationRule, RuleSpec};
use crate::sets::HypothesisSet;
use crate::streams::{derive_seed, replicate_rng};
use crate::testing::{analyze_trial, AnalysisOptions, Strategy, TestReport, VarianceMode};
use crate::trial::{run_trial, TrialData};
use crate::weights::SplitRule;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "RARADAPT_WORKERS";

/// One simulation experiment: a design, a rule and a scenario, replicated `n_sims` times.
#[derive(Clone, Debug)]
pub struct Experiment {
    pub design: TrialDesign,
    pub rule: RuleSpec,
    pub scenario: ScenarioSpec,
    pub strategies: Vec<Strategy>,
    pub n_sims: u64,
    pub seed: u64,
    pub variance: VarianceMode,
    pub aux_policy: AuxPolicy,
    pub split: SplitRule,
}

impl Experiment {
    /// Experiment with the five headline strategies, known unit variance and default splits.
    pub fn new(
        design: TrialDesign,
        rule: RuleSpec,
        scenario: ScenarioSpec,
        n_sims: u64,
        seed: u64,
    ) -> Self {
        Experiment {
            design,
            rule,
            scenario,
            strategies: Strategy::HEADLINE.to_vec(),
            n_sims,
            seed,
            variance: VarianceMode::default(),
            aux_policy: AuxPolicy::Independent,
            split: SplitRule::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.design.validate()?;
        self.scenario.validate(self.design.h)?;
        if self.n_sims == 0 {
            return Err(Error::Config(
                "the number of simulations must be at least 1".into(),
            ));
        }
        if self.strategies.is_empty() {
            return Err(Error::Config("at least one strategy is required".into()));
        }
        Ok(())
    }

    fn analysis_options(&self, replicate: u64) -> AnalysisOptions {
        AnalysisOptions {
            alpha: self.design.alpha,
            variance: self.variance,
            split: self.split,
            aux_seed: derive_seed(self.seed, &[replicate]),
            aux_policy: self.aux_policy,
            closure: self.strategies.iter().any(|s| s.uses_closure()),
        }
    }

    /// Simulate replicate `index` and return its data.
    pub fn simulate_replicate(&self, rule: &dyn AllocationRule, index: u64) -> Result<TrialData> {
        let mut rng = replicate_rng(self.seed, index);
        run_trial(&self.design, rule, &self.scenario, &mut rng)
    }

    /// Simulate and analyse replicate `index` exactly as `run_experiment` does.
    pub fn replicate(&self, index: u64) -> Result<(TrialData, TestReport)> {
        let rule = self.rule.build(&self.design)?;
        let trial = self.simulate_replicate(rule.as_ref(), index)?;
        let report = analyze_trial(&self.design, &trial, &self.analysis_options(index))?;
        Ok((trial, report))
    }

    fn true_nulls(&self) -> HypothesisSet {
        let arms: Vec<usize> = (1..=self.design.h)
            .filter(|&i| self.scenario.is_true_null(i))
            .collect();
        HypothesisSet::from_arms(&arms)
    }
}

/// Integer tallies for one strategy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyCounts {
    /// Replicates rejecting at least one true null.
    pub familywise_errors: u64,
    /// Replicates rejecting at least one false null.
    pub disjunctive_successes: u64,
    pub imaginary: u64,
    pub negative_treatment: u64,
    pub negative_control: u64,
    pub failed: u64,
}

impl StrategyCounts {
    fn merge(&mut self, other: &StrategyCounts) {
        self.familywise_errors += other.familywise_errors;
        self.disjunctive_successes += other.disjunctive_successes;
        self.imaginary += other.imaginary;
        self.negative_treatment += other.negative_treatment;
        self.negative_control += other.negative_control;
        self.failed += other.failed;
    }
}

/// A proportion with its binomial standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub estimate: f64,
    pub se: f64,
}

impl Estimate {
    pub fn from_count(count: u64, n: u64) -> Self {
        let p = count as f64 / n as f64;
        Estimate {
            estimate: p,
            se: (p * (1.0 - p) / n as f64).sqrt(),
        }
    }
}

/// Which rate a result row reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Fwer,
    Power,
    Imaginary,
    NegativeTreatment,
    NegativeControl,
    Failed,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Fwer,
        Metric::Power,
        Metric::Imaginary,
        Metric::NegativeTreatment,
        Metric::NegativeControl,
        Metric::Failed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Fwer => "fwer",
            Metric::Power => "power",
            Metric::Imaginary => "imaginary",
            Metric::NegativeTreatment => "negative",
            Metric::NegativeControl => "negative_control",
            Metric::Failed => "failed",
        }
    }
}

/// Aggregated outcome of an experiment.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentResult {
    pub n_sims: u64,
    pub seed: u64,
    pub strategies: Vec<Strategy>,
    pub counts: Vec<StrategyCounts>,
    /// Whether any hypothesis is a true null / a false null in this scenario.
    pub has_true_null: bool,
    pub has_false_null: bool,
    #[serde(serialize_with = "serialize_secs")]
    pub wall_clock: Duration,
}

fn serialize_secs<S: serde::Serializer>(
    d: &Duration,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ExperimentResult {
    pub fn counts_for(&self, strategy: Strategy) -> Option<&StrategyCounts> {
        self.strategies
            .iter()
            .position(|&s| s == strategy)
            .map(|i| &self.counts[i])
    }

    /// Rate of `metric` for `strategy`; `None` when the strategy was not run or the metric
    /// is undefined (FWER with no true null, power with no false null).
    pub fn metric(&self, strategy: Strategy, metric: Metric) -> Option<Estimate> {
        let c = self.counts_for(strategy)?;
        let count = match metric {
            Metric::Fwer if !self.has_true_null => return None,
            Metric::Power if !self.has_false_null => return None,
            Metric::Fwer => c.familywise_errors,
            Metric::Power => c.disjunctive_successes,
            Metric::Imaginary => c.imaginary,
            Metric::NegativeTreatment => c.negative_treatment,
            Metric::NegativeControl => c.negative_control,
            Metric::Failed => c.failed,
        };
        Some(Estimate::from_count(count, self.n_sims))
    }

    pub fn fwer(&self, strategy: Strategy) -> Option<Estimate> {
        self.metric(strategy, Metric::Fwer)
    }

    pub fn power(&self, strategy: Strategy) -> Option<Estimate> {
        self.metric(strategy, Metric::Power)
    }
}

/// One line of a long-format results file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub table: String,
    pub scenario: String,
    pub strategy: String,
    pub metric: String,
    pub estimate: f64,
    pub se: f64,
    pub n_sims: u64,
    pub seed: u64,
}

/// Every defined metric of every strategy in `result`. Anomaly and failure rates are listed
/// only for strategies that use adaptive statistics.
pub fn result_records(table: &str, scenario: &str, result: &ExperimentResult) -> Vec<ResultRecord> {
    let mut out = Vec::new();
    for &s in &result.strategies {
        for m in Metric::ALL {
            let anomaly = !matches!(m, Metric::Fwer | Metric::Power);
            if anomaly && !s.uses_adaptive() {
                continue;
            }
            if let Some(e) = result.metric(s, m) {
                out.push(ResultRecord {
                    table: table.to_string(),
                    scenario: scenario.to_string(),
                    strategy: s.name().to_string(),
                    metric: m.name().to_string(),
                    estimate: e.estimate,
                    se: e.se,
                    n_sims: result.n_sims,
                    seed: result.seed,
                });
            }
        }
    }
    out
}

/// Worker count from `RARADAPT_WORKERS`, or 0 (all cores) when unset or unparsable.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn tally(
    exp: &Experiment,
    report: &TestReport,
    true_nulls: HypothesisSet,
) -> Result<Vec<StrategyCounts>> {
    exp.strategies
        .iter()
        .map(|&s| {
            let rejected = report.rejections(s)?;
            let anomalies = report.anomalies(s);
            let hit_true = rejected.bits() & true_nulls.bits() != 0;
            let hit_false = rejected.bits() & !true_nulls.bits() != 0;
            Ok(StrategyCounts {
                familywise_errors: hit_true as u64,
                disjunctive_successes: hit_false as u64,
                imaginary: anomalies.imaginary as u64,
                negative_treatment: anomalies.negative_treatment as u64,
                negative_control: anomalies.negative_control as u64,
                failed: anomalies.failed as u64,
            })
        })
        .collect()
}

fn add(mut a: Vec<StrategyCounts>, b: Vec<StrategyCounts>) -> Vec<StrategyCounts> {
    for (x, y) in a.iter_mut().zip(&b) {
        x.merge(y);
    }
    a
}

/// Run an experiment on `workers` threads (0 = all available cores).
pub fn run_experiment(exp: &Experiment, workers: usize) -> Result<ExperimentResult> {
    exp.validate()?;
    let rule = exp.rule.build(&exp.design)?;
    let true_nulls = exp.true_nulls();
    let k = exp.strategies.len();
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("could not start worker pool: {e}")))?;
    let counts = pool.install(|| {
        (0..exp.n_sims)
            .into_par_iter()
            .map(|i| {
                let trial = exp.simulate_replicate(rule.as_ref(), i)?;
                let report = analyze_trial(&exp.design, &trial, &exp.analysis_options(i))?;
                tally(exp, &report, true_nulls)
            })
            .try_reduce(|| vec![StrategyCounts::default(); k], |a, b| Ok(add(a, b)))
    })?;
    let h = exp.design.h;
    Ok(ExperimentResult {
        n_sims: exp.n_sims,
        seed: exp.seed,
        strategies: exp.strategies.clone(),
        counts,
        has_true_null: !true_nulls.is_empty(),
        has_false_null: true_nulls.len() < h,
        wall_clock: start.elapsed(),
    })
}
