//! Static trial designs and true-parameter scenarios.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::MAX_ARMS;

/// How patients are allocated over the course of the trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// One experimental patient at a time; controls recruited separately with a fixed size.
    FullySequentialFixedControl,
    /// Experimental patients randomized in blocks; control blocks have fixed sizes.
    BlockFixedControl,
    /// Blocks in which the control is one of the randomized arms (arm 0).
    BlockAdaptiveControl,
}

impl Regime {
    pub fn is_block(self) -> bool {
        !matches!(self, Regime::FullySequentialFixedControl)
    }

    pub fn adaptive_control(self) -> bool {
        matches!(self, Regime::BlockAdaptiveControl)
    }

    pub fn label(self) -> &'static str {
        match self {
            Regime::FullySequentialFixedControl => "fully sequential",
            Regime::BlockFixedControl => "block fixed-control",
            Regime::BlockAdaptiveControl => "block adaptive-control",
        }
    }
}

/// Static description of a trial.
///
/// Arms are numbered `0..=h` with arm 0 the control. In the adaptive-control regime `n` counts
/// every patient (control included) and `n0` is unused; otherwise `n` counts experimental
/// patients only and `n0` is the fixed control size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialDesign {
    pub regime: Regime,
    pub h: usize,
    pub n: usize,
    pub n0: usize,
    /// Burn-in counts `r_1..r_h`.
    pub burn_in: Vec<usize>,
    /// Control burn-in `r_0` (block regimes).
    pub control_burn_in: usize,
    /// Block sizes `d_1..d_J` (all randomized patients of the block, control included when the
    /// control is adaptive).
    pub blocks: Vec<usize>,
    /// Control block sizes `d_{0,1}..d_{0,J}` (fixed-control block regime).
    pub control_blocks: Vec<usize>,
    pub alpha: f64,
}

impl TrialDesign {
    /// Fully sequential design with `n` experimental patients after and including burn-in.
    pub fn sequential(
        h: usize,
        n: usize,
        n0: usize,
        burn_in: Vec<usize>,
        alpha: f64,
    ) -> Result<Self> {
        let d = TrialDesign {
            regime: Regime::FullySequentialFixedControl,
            h,
            n,
            n0,
            burn_in,
            control_burn_in: 0,
            blocks: Vec::new(),
            control_blocks: Vec::new(),
            alpha,
        };
        d.validate()?;
        Ok(d)
    }

    /// Block design with a fixed control allocation. `n` and `n0` are derived from the blocks.
    pub fn block_fixed(
        h: usize,
        burn_in: Vec<usize>,
        control_burn_in: usize,
        blocks: Vec<usize>,
        control_blocks: Vec<usize>,
        alpha: f64,
    ) -> Result<Self> {
        let n = burn_in.iter().sum::<usize>() + blocks.iter().sum::<usize>();
        let n0 = control_burn_in + control_blocks.iter().sum::<usize>();
        let d = TrialDesign {
            regime: Regime::BlockFixedControl,
            h,
            n,
            n0,
            burn_in,
            control_burn_in,
            blocks,
            control_blocks,
            alpha,
        };
        d.validate()?;
        Ok(d)
    }

    /// Block design where the control is randomized alongside the experimental arms.
    pub fn block_adaptive_control(
        h: usize,
        burn_in: Vec<usize>,
        control_burn_in: usize,
        blocks: Vec<usize>,
        alpha: f64,
    ) -> Result<Self> {
        let n = control_burn_in + burn_in.iter().sum::<usize>() + blocks.iter().sum::<usize>();
        let d = TrialDesign {
            regime: Regime::BlockAdaptiveControl,
            h,
            n,
            n0: 0,
            burn_in,
            control_burn_in,
            blocks,
            control_blocks: Vec::new(),
            alpha,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDesign(m));
        if self.h == 0 || self.h > MAX_ARMS {
            return bad(format!("h must be in 1..={MAX_ARMS}, got {}", self.h));
        }
        if self.burn_in.len() != self.h {
            return bad(format!(
                "expected {} burn-in counts, got {}",
                self.h,
                self.burn_in.len()
            ));
        }
        if self.burn_in.contains(&0) {
            return bad("every burn-in count must be positive".into());
        }
        if !(0.0..1.0).contains(&self.alpha) {
            return bad(format!("alpha must lie in [0, 1), got {}", self.alpha));
        }
        let r = self.experimental_burn_in();
        match self.regime {
            Regime::FullySequentialFixedControl => {
                if self.n <= r {
                    return bad(format!("n = {} must exceed the burn-in total {r}", self.n));
                }
                if self.n0 < 2 {
                    return bad("the sequential final step needs n0 >= 2".into());
                }
                if !self.blocks.is_empty() || !self.control_blocks.is_empty() {
                    return bad("sequential designs take no blocks".into());
                }
            }
            Regime::BlockFixedControl => {
                if self.blocks.is_empty() {
                    return bad("block designs need at least one block".into());
                }
                if self.control_blocks.len() != self.blocks.len() {
                    return bad(
                        "control blocks must match the experimental blocks one to one".into(),
                    );
                }
                if self.blocks.contains(&0) {
                    return bad("block sizes must be positive".into());
                }
                if self.control_burn_in == 0 {
                    return bad("control burn-in must be positive".into());
                }
                if *self.control_blocks.last().unwrap() < 2 {
                    return bad("the final control block needs at least two patients".into());
                }
                if self.n != r + self.blocks.iter().sum::<usize>() {
                    return bad("n must equal burn-in plus block sizes".into());
                }
                if self.n0 != self.control_burn_in + self.control_blocks.iter().sum::<usize>() {
                    return bad("n0 must equal control burn-in plus control block sizes".into());
                }
            }
            Regime::BlockAdaptiveControl => {
                if self.blocks.is_empty() || self.blocks.contains(&0) {
                    return bad("block sizes must be positive".into());
                }
                if *self.blocks.last().unwrap() < 2 {
                    return bad(
                        "the final block needs room for a control and an in-set allocation".into(),
                    );
                }
                if self.control_burn_in == 0 {
                    return bad("control burn-in must be positive".into());
                }
                if !self.control_blocks.is_empty() {
                    return bad("adaptive-control designs take no control blocks".into());
                }
                if self.n != self.control_burn_in + r + self.blocks.iter().sum::<usize>() {
                    return bad("n must equal all burn-in plus block sizes".into());
                }
            }
        }
        Ok(())
    }

    /// `r = r_1 + ... + r_h`.
    pub fn experimental_burn_in(&self) -> usize {
        self.burn_in.iter().sum()
    }

    /// Length of the allocation sequence `a_1..a_n`.
    pub fn sequence_len(&self) -> usize {
        self.n
    }

    /// Number of leading positions in the allocation sequence that belong to the burn-in.
    pub fn burn_in_len(&self) -> usize {
        match self.regime {
            Regime::BlockAdaptiveControl => self.experimental_burn_in() + self.control_burn_in,
            _ => self.experimental_burn_in(),
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Position ranges `[start, end)` of each block in the allocation sequence, burn-in excluded.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = self.burn_in_len();
        self.blocks
            .iter()
            .map(|&d| {
                let r = start..start + d;
                start += d;
                r
            })
            .collect()
    }

    /// Block label for each allocation position: 0 for burn-in, `j` for block `j`, and for the
    /// sequential regime the position's own 1-based index after burn-in.
    pub fn block_labels(&self) -> Vec<usize> {
        let b = self.burn_in_len();
        match self.regime {
            Regime::FullySequentialFixedControl => (0..self.n)
                .map(|k| if k < b { 0 } else { k - b + 1 })
                .collect(),
            _ => {
                let mut labels = vec![0; b];
                for (j, &d) in self.blocks.iter().enumerate() {
                    labels.extend(std::iter::repeat_n(j + 1, d));
                }
                labels
            }
        }
    }

    /// Block label of each separately recruited control (fixed-control regimes).
    pub fn control_block_labels(&self) -> Vec<usize> {
        match self.regime {
            Regime::FullySequentialFixedControl => vec![0; self.n0],
            Regime::BlockFixedControl => {
                let mut labels = vec![0; self.control_burn_in];
                for (j, &d) in self.control_blocks.iter().enumerate() {
                    labels.extend(std::iter::repeat_n(j + 1, d));
                }
                labels
            }
            Regime::BlockAdaptiveControl => Vec::new(),
        }
    }

    /// Number of arms the randomization draws from: `h`, or `h + 1` with an adaptive control.
    pub fn randomized_arms(&self) -> usize {
        if self.regime.adaptive_control() {
            self.h + 1
        } else {
            self.h
        }
    }
}

/// True parameters used to generate outcomes: arm `i` has mean `mu + deltas[i-1]` and standard
/// deviation `sigma`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub mu: f64,
    pub deltas: Vec<f64>,
    #[serde(default = "default_sigma")]
    pub sigma: f64,
}

fn default_sigma() -> f64 {
    1.0
}

impl ScenarioSpec {
    pub fn new(mu: f64, deltas: Vec<f64>) -> Self {
        ScenarioSpec {
            mu,
            deltas,
            sigma: 1.0,
        }
    }

    pub fn null(h: usize) -> Self {
        ScenarioSpec::new(0.0, vec![0.0; h])
    }

    pub fn validate(&self, h: usize) -> Result<()> {
        if self.deltas.len() != h {
            return Err(Error::InvalidScenario(format!(
                "expected {h} effects, got {}",
                self.deltas.len()
            )));
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidScenario(format!(
                "sigma must be positive, got {}",
                self.sigma
            )));
        }
        if !self.mu.is_finite() || self.deltas.iter().any(|d| !d.is_finite()) {
            return Err(Error::InvalidScenario("means must be finite".into()));
        }
        Ok(())
    }

    /// Mean outcome of arm `arm` (0 = control).
    pub fn arm_mean(&self, arm: usize) -> f64 {
        if arm == 0 {
            self.mu
        } else {
            self.mu + self.deltas[arm - 1]
        }
    }

    /// Whether elementary hypothesis `H_i: δ_i = 0` holds.
    pub fn is_true_null(&self, arm: usize) -> bool {
        self.deltas[arm - 1] == 0.0
    }
}
