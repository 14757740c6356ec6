//! Helpers shared by the integration tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use raradapt::design::Regime;
use raradapt::rules::{RuleParams, RuleSpec};
use raradapt::testing::closed_test;
use raradapt::{run_trial, HypothesisSet, ScenarioSpec, TrialData, TrialDesign};

/// Small designs covering every regime, with `h` of 2 and 3 and a short final block.
pub fn designs() -> Vec<TrialDesign> {
    vec![
        TrialDesign::sequential(2, 30, 20, vec![3, 3], 0.05).unwrap(),
        TrialDesign::sequential(3, 36, 15, vec![2, 2, 2], 0.05).unwrap(),
        TrialDesign::block_fixed(2, vec![3, 3], 3, vec![10, 10, 10], vec![4, 4, 4], 0.05).unwrap(),
        TrialDesign::block_fixed(3, vec![2, 2, 2], 2, vec![12, 12], vec![3, 3], 0.05).unwrap(),
        TrialDesign::block_fixed(2, vec![2, 2], 2, vec![6, 6, 2], vec![2, 2, 2], 0.05).unwrap(),
        TrialDesign::block_adaptive_control(2, vec![3, 3], 3, vec![12, 12, 12], 0.05).unwrap(),
        TrialDesign::block_adaptive_control(3, vec![2, 2, 2], 2, vec![16, 16], 0.05).unwrap(),
        TrialDesign::block_adaptive_control(2, vec![2, 2], 2, vec![6, 6, 2], 0.05).unwrap(),
    ]
}

fn random_rule(design: &TrialDesign, rng: &mut ChaCha8Rng) -> RuleSpec {
    match rng.random_range(0..4) {
        0 => RuleSpec::equal(),
        1 => RuleSpec::inflator(),
        2 if design.regime == Regime::BlockFixedControl => {
            RuleSpec::new("bar_wason", RuleParams::default())
        }
        _ => {
            let k = design.randomized_arms();
            let mut p: Vec<f64> = (0..k).map(|_| rng.random::<f64>().powi(3)).collect();
            let total: f64 = p.iter().sum();
            p.iter_mut().for_each(|x| *x /= total);
            RuleSpec::fixed(p)
        }
    }
}

/// One trial under a randomly chosen rule and effect vector.
pub fn random_trial(design: &TrialDesign, seed: u64) -> TrialData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rule = random_rule(design, &mut rng).build(design).unwrap();
    let deltas = (0..design.h).map(|_| rng.random_range(-0.5..1.0)).collect();
    run_trial(
        design,
        rule.as_ref(),
        &ScenarioSpec::new(0.0, deltas),
        &mut rng,
    )
    .unwrap()
}

/// Closed testing with Bonferroni local tests.
pub fn closed_bonferroni(p: &[f64], alpha: f64) -> HypothesisSet {
    let h = p.len();
    let mut local = vec![None; 1 << h];
    for set in HypothesisSet::all_nonempty(h) {
        let min = set.arms().map(|i| p[i - 1]).fold(f64::INFINITY, f64::min);
        local[set.bits() as usize] = Some(min <= alpha / set.len() as f64);
    }
    closed_test(h, &local).unwrap()
}
