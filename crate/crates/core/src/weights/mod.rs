//! Weight schedules that keep the null distribution of the test statistic fixed when the
//! actual allocations depart from the auxiliary design.
//!
//! The recursion treats the actual trial as a chain of single-step modifications of the
//! auxiliary design (one patient at a time in the sequential regime, one block at a time
//! otherwise). Each step chooses new weights for the modified stage so that, given the data
//! before it, the remaining part of the statistic keeps its conditional mean and variance.
//! Weights are carried as reciprocals so that a zero reciprocal (infinite weight) is harmless.

mod block;
mod sequential;
pub mod solver;
mod table;

pub use block::{weights_block_adaptive_control, weights_block_fixed};
pub use sequential::weights_sequential;
pub use table::{
    appendix_example, weight_table, AllocationPairs, WeightRow, WeightTable, APPENDIX_IDS,
};

use serde::{Deserialize, Serialize};

use crate::auxiliary::AuxiliaryDesign;
use crate::design::{Regime, TrialDesign};
use crate::error::{Error, Result};
use crate::sets::HypothesisSet;
use crate::trial::TrialData;

/// Whether a schedule yields a usable statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScheduleStatus {
    Valid,
    /// Some step had no real solution; the statistic is set to −∞ and never rejects.
    Imaginary,
    /// The final step cannot match both moments; no statistic is available.
    Failed,
}

/// How a recursion step was resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Burn-in: natural auxiliary weights.
    Natural,
    /// Adjusted counts equal the auxiliary ones, so the previous weights carry over.
    Unchanged,
    /// Treatment and control weights solved jointly.
    Standard,
    /// No in-set patients remain; the control observations are split into two groups.
    ControlSplit,
    /// No controls remain; the in-set observations are split into two groups.
    TreatmentSplit,
}

/// The moment equations solved at one step, kept for inspection and plug-back checks.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct StepRecord {
    /// Patient index (sequential, 1-based) or block index (0 = burn-in).
    pub step: usize,
    pub kind: StepKind,
    pub lambda: f64,
    pub eta: f64,
    /// `(count, sign)` of the two groups whose reciprocal weights were solved for.
    pub groups: [(usize, f64); 2],
    /// Solved reciprocal weights of the two groups.
    pub recip: (f64, f64),
}

/// Which side was split at the final step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitSide {
    Control,
    Treatment,
}

/// Final-step split: the first `counts.0` observations on `side` get `weights.0`, the rest
/// get `weights.1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FinalSplit {
    pub side: SplitSide,
    pub counts: (usize, usize),
    pub weights: (f64, f64),
}

/// How a final-step split divides `m` observations into two groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    /// `(m − k, k)`.
    Trailing(usize),
    /// An explicit pair, usable only when it sums to `m`.
    Counts(usize, usize),
}

impl Default for SplitRule {
    fn default() -> Self {
        SplitRule::Trailing(1)
    }
}

impl SplitRule {
    pub fn resolve(self, total: usize) -> Option<(usize, usize)> {
        match self {
            SplitRule::Trailing(k) if k >= 1 && total > k => Some((total - k, k)),
            SplitRule::Counts(a, b) if a >= 1 && b >= 1 && a + b == total => Some((a, b)),
            _ => None,
        }
    }
}

/// Per-hypothesis weight schedule.
#[derive(Clone, Debug, Serialize)]
pub struct WeightSchedule {
    #[serde(skip)]
    pub set: HypothesisSet,
    pub regime: Regime,
    pub status: ScheduleStatus,
    /// `n_I'`.
    pub n_set_aux: usize,
    /// `n_0` (fixed control) or `n_0'` (adaptive control).
    pub n_control_aux: usize,
    /// Treatment weight in force after each step; `None` where undefined or not reached.
    pub treatment_weights: Vec<Option<f64>>,
    /// Control weight in force after each step.
    pub control_weights: Vec<Option<f64>>,
    pub final_split: Option<FinalSplit>,
    pub steps: Vec<StepRecord>,
    /// Coefficient multiplying each outcome of the randomized sequence in the statistic.
    pub sequence_coef: Vec<f64>,
    /// Coefficient multiplying each separately recruited control outcome.
    pub control_coef: Vec<f64>,
    /// Some actual in-set observation carries a negative weight.
    pub negative_treatment_weight: bool,
    /// Some control observation carries a negative weight.
    pub negative_control_weight: bool,
}

impl WeightSchedule {
    fn new(
        set: HypothesisSet,
        regime: Regime,
        n_set_aux: usize,
        n_control_aux: usize,
        steps: usize,
    ) -> Self {
        WeightSchedule {
            set,
            regime,
            status: ScheduleStatus::Valid,
            n_set_aux,
            n_control_aux,
            treatment_weights: vec![None; steps],
            control_weights: vec![None; steps],
            final_split: None,
            steps: Vec::new(),
            sequence_coef: Vec::new(),
            control_coef: Vec::new(),
            negative_treatment_weight: false,
            negative_control_weight: false,
        }
    }

    fn finish_flags(&mut self, actual: &[usize]) {
        if self.status != ScheduleStatus::Valid {
            return;
        }
        self.negative_treatment_weight = actual
            .iter()
            .zip(&self.sequence_coef)
            .any(|(&a, &c)| self.set.contains(a) && c < 0.0);
        // Control coefficients enter with a minus sign, so a negative weight shows as c > 0.
        self.negative_control_weight = actual
            .iter()
            .zip(&self.sequence_coef)
            .any(|(&a, &c)| a == 0 && c > 0.0)
            || self.control_coef.iter().any(|&c| c > 0.0);
    }

    /// Adaptive statistic `Σ X_k / w_k − Σ X_0j / w_0j`: `None` when the schedule failed,
    /// `−∞` when its weights are imaginary.
    pub fn statistic(&self, trial: &TrialData) -> Option<f64> {
        match self.status {
            ScheduleStatus::Failed => None,
            ScheduleStatus::Imaginary => Some(f64::NEG_INFINITY),
            ScheduleStatus::Valid => Some(
                weighted_sum(&trial.outcomes, &self.sequence_coef)
                    + weighted_sum(&trial.control_outcomes, &self.control_coef),
            ),
        }
    }

    /// Null standard deviation of the statistic for unit-variance outcomes,
    /// `(1/n_I' + 1/n_0')^{1/2}`.
    pub fn null_sd(&self) -> f64 {
        (1.0 / self.n_set_aux as f64 + 1.0 / self.n_control_aux as f64).sqrt()
    }

    /// Largest relative residual of the moment equations over every solved step (0 when no
    /// step needed solving).
    pub fn max_residual(&self) -> f64 {
        self.steps
            .iter()
            .filter(|st| st.kind != StepKind::Natural)
            .map(|st| {
                let (a, b) =
                    solver::residuals(st.lambda, st.eta, st.groups[0], st.groups[1], st.recip);
                a.max(b)
            })
            .fold(0.0, f64::max)
    }

    pub fn anomalies(&self) -> AnomalyReport {
        AnomalyReport {
            imaginary: self.status == ScheduleStatus::Imaginary,
            failed: self.status == ScheduleStatus::Failed,
            negative_treatment: self.negative_treatment_weight,
            negative_control: self.negative_control_weight,
        }
    }
}

/// `Σ x_i c_i`, skipping zero coefficients.
pub fn weighted_sum(x: &[f64], coef: &[f64]) -> f64 {
    x.iter()
        .zip(coef)
        .filter(|(_, &c)| c != 0.0)
        .map(|(x, c)| x * c)
        .sum()
}

/// Anomaly classes of one schedule. Negative control weights are informational only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AnomalyReport {
    pub imaginary: bool,
    pub failed: bool,
    pub negative_treatment: bool,
    pub negative_control: bool,
}

impl AnomalyReport {
    pub fn is_empty(&self) -> bool {
        !(self.imaginary || self.failed || self.negative_treatment)
    }
}

pub fn detect_weight_anomalies(schedule: &WeightSchedule) -> AnomalyReport {
    schedule.anomalies()
}

/// `λ = m_I·u − m_0·v`, `η = m_I·u² + m_0·v²`.
pub(crate) fn moments(m_set: usize, m_control: usize, (u, v): (f64, f64)) -> (f64, f64) {
    let (a, b) = (m_set as f64, m_control as f64);
    (a * u - b * v, a * u * u + b * v * v)
}

pub(crate) fn recip_to_weight(u: f64) -> f64 {
    1.0 / u
}

/// Weight schedule for `aux.set` under whichever regime `design` specifies.
pub fn compute_schedule(
    design: &TrialDesign,
    actual: &[usize],
    aux: &AuxiliaryDesign,
    split: SplitRule,
) -> Result<WeightSchedule> {
    match design.regime {
        Regime::FullySequentialFixedControl => weights_sequential(design, actual, aux, split),
        Regime::BlockFixedControl => weights_block_fixed(design, actual, aux, split),
        Regime::BlockAdaptiveControl => weights_block_adaptive_control(design, actual, aux, split),
    }
}

pub(crate) fn check_split(split: SplitRule, total: usize) -> Result<(usize, usize)> {
    split.resolve(total).ok_or_else(|| {
        Error::InvalidInput(format!(
            "split {split:?} cannot divide {total} observations"
        ))
    })
}
