//! Invariants of the weight recursion, the statistics and the multiplicity procedures.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use raradapt::auxiliary::{generate_auxiliary, AuxPolicy, AuxiliaryDesign};
use raradapt::testing::{holm, naive_z_statistic};
use raradapt::weights::{compute_schedule, ScheduleStatus, SplitRule, StepKind};
use raradapt::HypothesisSet;

mod common;
use common::{closed_bonferroni, designs, random_trial};

#[test]
fn moment_equations_hold_at_every_step() {
    let splits = [SplitRule::Trailing(1), SplitRule::Trailing(2)];
    let (mut solved, mut worst) = (0usize, 0.0f64);
    let mut kinds = std::collections::BTreeMap::new();
    let mut seed = 0u64;
    while solved < 10_000 {
        for design in designs() {
            seed += 1;
            let trial = random_trial(&design, seed);
            let burn = &trial.allocations[..design.burn_in_len()];
            for set in HypothesisSet::all_nonempty(design.h) {
                let aux = generate_auxiliary(&design, burn, set, seed, AuxPolicy::Independent);
                let split = splits[(seed % 2) as usize];
                let Ok(s) = compute_schedule(&design, &trial.allocations, &aux, split) else {
                    continue;
                };
                for st in s.steps.iter().filter(|st| st.kind != StepKind::Natural) {
                    *kinds.entry(format!("{:?}", st.kind)).or_insert(0usize) += 1;
                    solved += 1;
                }
                worst = worst.max(s.max_residual());
            }
        }
    }
    assert!(worst <= 1e-10, "largest residual {worst:e}");
    for kind in ["Standard", "Unchanged", "ControlSplit", "TreatmentSplit"] {
        assert!(
            kinds.get(kind).copied().unwrap_or(0) > 0,
            "no {kind} steps in {kinds:?}"
        );
    }
}

#[test]
fn auxiliary_equal_to_actual_gives_naive_statistic() {
    let mut checked = 0;
    for (d, design) in designs().into_iter().enumerate() {
        for seed in 0..30u64 {
            let trial = random_trial(&design, 1000 * d as u64 + seed);
            let n = design.n;
            for set in HypothesisSet::all_nonempty(design.h) {
                let a = &trial.allocations;
                let shape_ok =
                    set.contains(a[n - 1]) && (!design.regime.adaptive_control() || a[n - 2] == 0);
                if !shape_ok {
                    continue;
                }
                let aux = AuxiliaryDesign::from_sequence(set, a.clone());
                let s = compute_schedule(&design, a, &aux, SplitRule::default()).unwrap();
                assert_eq!(s.status, ScheduleStatus::Valid);
                let adaptive = s.statistic(&trial).unwrap();
                let (naive, sd) = naive_z_statistic(&trial, set).unwrap();
                if design.regime.adaptive_control() {
                    assert!((adaptive - naive).abs() <= 1e-12 * (1.0 + naive.abs()));
                } else {
                    assert_eq!(adaptive, naive);
                }
                assert!((s.null_sd() - sd).abs() < 1e-15);
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} sequences checked");
}

#[test]
fn weights_do_not_depend_on_outcomes() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for design in designs() {
        for seed in 0..10u64 {
            let trial = random_trial(&design, 500 + seed);
            let mut shuffled = trial.clone();
            shuffled.outcomes.shuffle(&mut rng);
            shuffled
                .control_outcomes
                .iter_mut()
                .for_each(|x| *x = rng.random_range(-3.0..3.0));
            let burn = &trial.allocations[..design.burn_in_len()];
            for set in HypothesisSet::all_nonempty(design.h) {
                let aux = generate_auxiliary(&design, burn, set, seed, AuxPolicy::Independent);
                let a = compute_schedule(&design, &trial.allocations, &aux, SplitRule::default());
                let b =
                    compute_schedule(&design, &shuffled.allocations, &aux, SplitRule::default());
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        assert_eq!(a.status, b.status);
                        assert_eq!(a.sequence_coef, b.sequence_coef);
                        assert_eq!(a.control_coef, b.control_coef);
                    }
                    (a, b) => assert_eq!(a.is_err(), b.is_err()),
                }
            }
        }
    }
}

#[test]
fn lowering_in_set_outcomes_lowers_the_statistic() {
    let mut checked = 0;
    for (d, design) in designs().into_iter().enumerate() {
        for seed in 0..40u64 {
            let trial = random_trial(&design, 9000 + 100 * d as u64 + seed);
            let burn = &trial.allocations[..design.burn_in_len()];
            for set in HypothesisSet::all_nonempty(design.h) {
                let aux = generate_auxiliary(&design, burn, set, seed, AuxPolicy::Independent);
                let Ok(s) =
                    compute_schedule(&design, &trial.allocations, &aux, SplitRule::default())
                else {
                    continue;
                };
                if s.status != ScheduleStatus::Valid || s.negative_treatment_weight {
                    continue;
                }
                let mut lowered = trial.clone();
                for (a, x) in lowered.allocations.iter().zip(lowered.outcomes.iter_mut()) {
                    if set.contains(*a) {
                        *x -= 0.3;
                    }
                }
                assert!(s.statistic(&lowered).unwrap() < s.statistic(&trial).unwrap());
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn holm_equals_closed_bonferroni(p in prop::collection::vec(0.0f64..0.2, 1..=3), alpha in 0.01f64..0.1) {
        prop_assert_eq!(holm(&p, alpha), closed_bonferroni(&p, alpha));
    }
}

proptest! {
    #[test]
    fn holm_handles_ties(x in 0.0f64..0.1, h in 2usize..=3) {
        let p = vec![x; h];
        prop_assert_eq!(holm(&p, 0.05), closed_bonferroni(&p, 0.05));
    }
}
