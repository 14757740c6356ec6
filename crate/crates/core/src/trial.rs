//! Realized trial data and the engine that runs a randomization rule through a design.

use std::io::{Read, Write};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::design::{Regime, ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::rules::{validate_probabilities, AllocationRule, ArmStats, History};

/// Allocations and outcomes of one trial.
///
/// `allocations[k]` is the arm of the `(k+1)`th patient in the randomized sequence. Separately
/// recruited controls (fixed-control regimes) live in `control_outcomes`; with an adaptive
/// control they appear in the main sequence as arm 0.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialData {
    pub allocations: Vec<usize>,
    pub outcomes: Vec<f64>,
    pub control_outcomes: Vec<f64>,
}

impl TrialData {
    /// Per-arm patient counts `n_0..n_h`.
    pub fn arm_counts(&self, h: usize) -> Vec<usize> {
        let mut counts = vec![0; h + 1];
        for &a in &self.allocations {
            counts[a] += 1;
        }
        counts[0] += self.control_outcomes.len();
        counts
    }

    /// Outcomes of every control patient, in recruitment order.
    pub fn all_control_outcomes(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .allocations
            .iter()
            .zip(&self.outcomes)
            .filter(|(&a, _)| a == 0)
            .map(|(_, &x)| x)
            .collect();
        v.extend_from_slice(&self.control_outcomes);
        v
    }

    /// Outcomes of arm `arm`, control included.
    pub fn arm_outcomes(&self, arm: usize) -> Vec<f64> {
        if arm == 0 {
            return self.all_control_outcomes();
        }
        self.allocations
            .iter()
            .zip(&self.outcomes)
            .filter(|(&a, _)| a == arm)
            .map(|(_, &x)| x)
            .collect()
    }

    /// Check shape and burn-in against a design.
    pub fn validate(&self, design: &TrialDesign) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.allocations.len() != design.n || self.outcomes.len() != design.n {
            return bad(format!(
                "expected {} randomized patients, got {}",
                design.n,
                self.allocations.len()
            ));
        }
        let min_arm = usize::from(!design.regime.adaptive_control());
        if let Some(&a) = self
            .allocations
            .iter()
            .find(|&&a| a < min_arm || a > design.h)
        {
            return bad(format!("arm index {a} is outside {min_arm}..={}", design.h));
        }
        if design.regime.adaptive_control() {
            if !self.control_outcomes.is_empty() {
                return bad("adaptive-control data carry controls in the main sequence".into());
            }
        } else if self.control_outcomes.len() != design.n0 {
            return bad(format!(
                "expected {} controls, got {}",
                design.n0,
                self.control_outcomes.len()
            ));
        }
        let mut burn = vec![0usize; design.h + 1];
        for &a in &self.allocations[..design.burn_in_len()] {
            burn[a] += 1;
        }
        let expected_control = if design.regime.adaptive_control() {
            design.control_burn_in
        } else {
            0
        };
        if burn[0] != expected_control || burn[1..] != design.burn_in[..] {
            return bad(format!("burn-in counts {burn:?} do not match the design"));
        }
        if self
            .outcomes
            .iter()
            .chain(&self.control_outcomes)
            .any(|x| !x.is_finite())
        {
            return bad("outcomes must be finite".into());
        }
        Ok(())
    }

    /// Write the trial as CSV with columns `index,block,arm,outcome`.
    pub fn write_csv<W: Write>(&self, design: &TrialDesign, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let blocks = design.block_labels();
        for (k, (&a, &x)) in self.allocations.iter().zip(&self.outcomes).enumerate() {
            wtr.serialize(CsvRow {
                index: k + 1,
                block: blocks[k],
                arm: a,
                outcome: x,
            })?;
        }
        let cblocks = design.control_block_labels();
        for (k, &x) in self.control_outcomes.iter().enumerate() {
            wtr.serialize(CsvRow {
                index: k + 1,
                block: cblocks[k],
                arm: 0,
                outcome: x,
            })?;
        }
        wtr.flush()?;
        Ok(())
    }

    /// Read a trial written by [`TrialData::write_csv`] (or prepared externally in the same
    /// layout) and validate it against `design`.
    pub fn read_csv<R: Read>(design: &TrialDesign, r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let mut data = TrialData {
            allocations: Vec::new(),
            outcomes: Vec::new(),
            control_outcomes: Vec::new(),
        };
        for row in rdr.deserialize() {
            let row: CsvRow = row?;
            if row.arm > design.h {
                return Err(Error::InvalidInput(format!(
                    "row {} has arm {} but the design has {} experimental arms",
                    row.index, row.arm, design.h
                )));
            }
            if row.arm == 0 && !design.regime.adaptive_control() {
                data.control_outcomes.push(row.outcome);
            } else {
                data.allocations.push(row.arm);
                data.outcomes.push(row.outcome);
            }
        }
        data.validate(design)?;
        Ok(data)
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    index: usize,
    block: usize,
    arm: usize,
    outcome: f64,
}

fn draw_outcome<R: Rng + ?Sized>(scenario: &ScenarioSpec, arm: usize, rng: &mut R) -> f64 {
    let z: f64 = rng.sample(StandardNormal);
    scenario.arm_mean(arm) + scenario.sigma * z
}

fn draw_arm<R: Rng + ?Sized>(probs: &[f64], rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut cum = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        cum += p;
        if u < cum {
            return i;
        }
    }
    probs
        .iter()
        .rposition(|&p| p > 0.0)
        .unwrap_or(probs.len() - 1)
}

struct Recorder {
    arms: Vec<ArmStats>,
    control: ArmStats,
    data: TrialData,
}

impl Recorder {
    fn new(design: &TrialDesign) -> Self {
        Recorder {
            arms: vec![ArmStats::default(); design.h],
            control: ArmStats::default(),
            data: TrialData {
                allocations: Vec::with_capacity(design.n),
                outcomes: Vec::with_capacity(design.n),
                control_outcomes: Vec::with_capacity(design.n0),
            },
        }
    }

    fn enroll<R: Rng + ?Sized>(&mut self, arm: usize, scenario: &ScenarioSpec, rng: &mut R) {
        let x = draw_outcome(scenario, arm, rng);
        self.data.allocations.push(arm);
        self.data.outcomes.push(x);
        if arm == 0 {
            self.control.push(x);
        } else {
            self.arms[arm - 1].push(x);
        }
    }

    fn enroll_control<R: Rng + ?Sized>(&mut self, scenario: &ScenarioSpec, rng: &mut R) {
        let x = draw_outcome(scenario, 0, rng);
        self.data.control_outcomes.push(x);
        self.control.push(x);
    }

    fn burn_in<R: Rng + ?Sized>(
        &mut self,
        design: &TrialDesign,
        scenario: &ScenarioSpec,
        rng: &mut R,
    ) {
        let mut order: Vec<usize> = Vec::with_capacity(design.burn_in_len());
        if design.regime.adaptive_control() {
            order.extend(std::iter::repeat_n(0, design.control_burn_in));
        }
        for (i, &r) in design.burn_in.iter().enumerate() {
            order.extend(std::iter::repeat_n(i + 1, r));
        }
        order.shuffle(rng);
        for arm in order {
            self.enroll(arm, scenario, rng);
        }
    }

    fn next_probs(
        &self,
        rule: &dyn AllocationRule,
        regime: Regime,
        stage: usize,
    ) -> Result<Vec<f64>> {
        let history = History {
            stage,
            arms: &self.arms,
            control: regime.is_block().then_some(self.control),
            control_randomized: regime.adaptive_control(),
        };
        let probs = rule.probabilities(&history);
        validate_probabilities(&probs, history.output_len())?;
        Ok(probs)
    }
}

/// Run a fully sequential trial: burn-in in random order, then one rule call per patient.
/// Control outcomes are generated after the experimental arms and are never shown to the rule.
pub fn run_sequential_trial<R: Rng + ?Sized>(
    design: &TrialDesign,
    rule: &dyn AllocationRule,
    scenario: &ScenarioSpec,
    rng: &mut R,
) -> Result<TrialData> {
    if design.regime != Regime::FullySequentialFixedControl {
        return Err(Error::InvalidDesign(
            "run_sequential_trial needs a sequential design".into(),
        ));
    }
    let mut rec = Recorder::new(design);
    rec.burn_in(design, scenario, rng);
    for k in 0..design.n - design.burn_in_len() {
        let probs = rec.next_probs(rule, design.regime, k)?;
        let arm = draw_arm(&probs, rng) + 1;
        rec.enroll(arm, scenario, rng);
    }
    for _ in 0..design.n0 {
        rec.enroll_control(scenario, rng);
    }
    Ok(rec.data)
}

/// Run a block trial: probabilities are computed once at each block boundary from all data so
/// far (control included) and every allocation in the block is drawn from them.
pub fn run_block_trial<R: Rng + ?Sized>(
    design: &TrialDesign,
    rule: &dyn AllocationRule,
    scenario: &ScenarioSpec,
    rng: &mut R,
) -> Result<TrialData> {
    if !design.regime.is_block() {
        return Err(Error::InvalidDesign(
            "run_block_trial needs a block design".into(),
        ));
    }
    let adaptive_control = design.regime.adaptive_control();
    let mut rec = Recorder::new(design);
    rec.burn_in(design, scenario, rng);
    if !adaptive_control {
        for _ in 0..design.control_burn_in {
            rec.enroll_control(scenario, rng);
        }
    }
    for (j, &d) in design.blocks.iter().enumerate() {
        let probs = rec.next_probs(rule, design.regime, j)?;
        for _ in 0..d {
            let idx = draw_arm(&probs, rng);
            let arm = if adaptive_control { idx } else { idx + 1 };
            rec.enroll(arm, scenario, rng);
        }
        if !adaptive_control {
            for _ in 0..design.control_blocks[j] {
                rec.enroll_control(scenario, rng);
            }
        }
    }
    if rec.data.allocations.len() != design.n {
        return Err(Error::Internal(format!(
            "block bookkeeping produced {} patients, expected {}",
            rec.data.allocations.len(),
            design.n
        )));
    }
    Ok(rec.data)
}

/// Run a trial under whichever regime the design specifies.
pub fn run_trial<R: Rng + ?Sized>(
    design: &TrialDesign,
    rule: &dyn AllocationRule,
    scenario: &ScenarioSpec,
    rng: &mut R,
) -> Result<TrialData> {
    match design.regime {
        Regime::FullySequentialFixedControl => run_sequential_trial(design, rule, scenario, rng),
        _ => run_block_trial(design, rule, scenario, rng),
    }
}
