//! Auxiliary designs: pre-specified hypothetical allocation sequences, one per intersection
//! hypothesis, against which the actual allocations are compared.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::design::TrialDesign;
use crate::error::{Error, Result};
use crate::sets::HypothesisSet;
use crate::streams::derive_seed;

/// How the post-burn-in part of auxiliary sequences is shared between hypotheses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuxPolicy {
    /// A fresh uniform draw for every intersection hypothesis.
    #[default]
    Independent,
    /// One common draw; only the forced final positions differ between hypotheses.
    SharedPrefix,
}

/// Auxiliary allocation sequence `b_1..b_n` for one intersection hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryDesign {
    pub set: HypothesisSet,
    pub allocations: Vec<usize>,
}

impl AuxiliaryDesign {
    pub fn from_sequence(set: HypothesisSet, allocations: Vec<usize>) -> Self {
        AuxiliaryDesign { set, allocations }
    }

    /// `n_I'`: number of auxiliary allocations to arms in the set.
    pub fn n_in_set(&self) -> usize {
        self.allocations
            .iter()
            .filter(|&&b| self.set.contains(b))
            .count()
    }

    /// `n_0'`: number of auxiliary allocations to the control.
    pub fn n_control(&self) -> usize {
        self.allocations.iter().filter(|&&b| b == 0).count()
    }

    /// `m_{I,k}` for every `k`: number of `b_j ∈ I` with `j >= k` (0-based, with a trailing 0).
    pub fn remaining_in_set(&self) -> Vec<usize> {
        let mut out = vec![0; self.allocations.len() + 1];
        for k in (0..self.allocations.len()).rev() {
            out[k] = out[k + 1] + usize::from(self.set.contains(self.allocations[k]));
        }
        out
    }

    /// Check the structural requirements for `design` and actual allocations `actual`.
    pub fn validate(&self, design: &TrialDesign, actual: &[usize]) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        let n = design.n;
        if self.allocations.len() != n || actual.len() != n {
            return bad(format!(
                "auxiliary and actual sequences must both have length {n}"
            ));
        }
        let b = design.burn_in_len();
        if self.allocations[..b] != actual[..b] {
            return bad("auxiliary burn-in must equal the actual burn-in".into());
        }
        if !self.set.contains(self.allocations[n - 1]) {
            return bad(format!(
                "the final auxiliary allocation must lie in {}",
                self.set
            ));
        }
        if design.regime.adaptive_control() && self.allocations[n - 2] != 0 {
            return bad("the penultimate auxiliary allocation must be to the control".into());
        }
        let min_arm = usize::from(!design.regime.adaptive_control());
        if self
            .allocations
            .iter()
            .any(|&a| a < min_arm || a > design.h)
        {
            return bad("auxiliary allocation outside the randomized arms".into());
        }
        Ok(())
    }
}

/// Generate the auxiliary design for `set`.
///
/// The burn-in is copied from the actual allocations; later positions are uniform draws over
/// the randomized arms, except that the final position is the lowest-indexed member of `set`
/// and, with an adaptive control, the penultimate position is the control. The draw depends
/// only on `(base_seed, set, policy)`.
pub fn generate_auxiliary(
    design: &TrialDesign,
    burn_in: &[usize],
    set: HypothesisSet,
    base_seed: u64,
    policy: AuxPolicy,
) -> AuxiliaryDesign {
    let n = design.n;
    let b = design.burn_in_len();
    debug_assert_eq!(burn_in.len(), b);
    let adaptive_control = design.regime.adaptive_control();
    let tag = match policy {
        AuxPolicy::Independent => u64::from(set.bits()),
        AuxPolicy::SharedPrefix => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(base_seed, &[tag]));
    let forced = if adaptive_control { 2 } else { 1 };
    let mut allocations = Vec::with_capacity(n);
    allocations.extend_from_slice(burn_in);
    for _ in b..n - forced {
        let arm = if adaptive_control {
            rng.random_range(0..=design.h)
        } else {
            rng.random_range(1..=design.h)
        };
        allocations.push(arm);
    }
    if adaptive_control {
        allocations.push(0);
    }
    allocations.push(set.min_arm().expect("hypothesis sets are non-empty"));
    AuxiliaryDesign { set, allocations }
}
