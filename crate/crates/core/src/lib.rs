//! Familywise-error-controlling adaptive tests for multi-arm response-adaptive trials with
//! normally distributed outcomes, plus a Monte Carlo engine for their operating
//! characteristics.
//!
//! The building blocks, in the order a trial flows through them:
//!
//! - [`design`]: trial designs (fully sequential, block with fixed control, block with
//!   adaptive control) and true-parameter scenarios.
//! - [`rules`]: response-adaptive allocation rules behind one probability-vector interface.
//! - [`trial`]: the engine that runs a rule through a design and the resulting data.
//! - [`auxiliary`]: pre-specified hypothetical allocation sequences, one per hypothesis.
//! - [`weights`]: the weight recursion that preserves the null distribution of the test
//!   statistic under adaptive allocation.
//! - [`testing`]: naive and adaptive statistics, p-values, closed testing, Holm, Bonferroni.
//! - [`config`]: JSON experiment configuration files.
//! - [`sim`]: replicated experiments, presets for the standard scenario tables and power
//!   curves.

pub mod auxiliary;
pub mod cli;
pub mod config;
pub mod design;
pub mod error;
pub mod normal;
pub mod rules;
pub mod sets;
pub mod sim;
pub mod streams;
pub mod testing;
pub mod trial;
pub mod weights;

pub use auxiliary::{generate_auxiliary, AuxPolicy, AuxiliaryDesign};
pub use design::{Regime, ScenarioSpec, TrialDesign};
pub use error::{Error, Result};
pub use rules::{AllocationRule, RuleParams, RuleSpec};
pub use sets::HypothesisSet;
pub use sim::{reproduce_table, run_experiment, Experiment, ExperimentResult};
pub use testing::{analyze_trial, AnalysisOptions, Strategy, TestReport, VarianceMode};
pub use trial::{run_block_trial, run_sequential_trial, run_trial, TrialData};
pub use weights::{compute_schedule, ScheduleStatus, SplitRule, WeightSchedule};
