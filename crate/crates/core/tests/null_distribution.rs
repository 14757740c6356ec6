//! The standardized adaptive statistic is standard normal under the global null, whatever the
//! allocation rule does.

use raradapt::rules::{RuleParams, RuleSpec};
use raradapt::sim::null_distribution_check;
use raradapt::{HypothesisSet, TrialDesign};

fn check(design: TrialDesign, rule: RuleSpec, set: HypothesisSet, seed: u64) {
    let r = null_distribution_check(&design, &rule, set, 4000, seed, 4).unwrap();
    assert!(r.used as f64 > 0.9 * r.n_sims as f64, "{r:?}");
    assert!(r.mean.abs() < 4.0 * r.mean_se(), "mean {r:?}");
    assert!(
        (r.variance - 1.0).abs() < 4.0 * r.variance_se(),
        "variance {r:?}"
    );
    assert!(r.ks_statistic < 1.3 * r.ks_critical(), "ks {r:?}");
}

#[test]
fn sequential_inflator() {
    let d = TrialDesign::sequential(2, 60, 60, vec![5, 5], 0.05).unwrap();
    check(
        d.clone(),
        RuleSpec::inflator(),
        HypothesisSet::singleton(1),
        1,
    );
    check(
        d,
        RuleSpec::inflator(),
        HypothesisSet::from_arms(&[1, 2]),
        2,
    );
}

#[test]
fn block_fixed_bar() {
    let d = TrialDesign::block_fixed(3, vec![5, 5, 5], 5, vec![40; 3], vec![20; 3], 0.05).unwrap();
    let rule = RuleSpec::new("bar_wason", RuleParams::default());
    check(d.clone(), rule.clone(), HypothesisSet::singleton(2), 3);
    check(d, rule, HypothesisSet::from_arms(&[1, 3]), 4);
}

#[test]
fn block_adaptive_control_inflator() {
    let d = TrialDesign::block_adaptive_control(2, vec![5, 5], 5, vec![50; 3], 0.05).unwrap();
    check(
        d.clone(),
        RuleSpec::inflator(),
        HypothesisSet::singleton(2),
        5,
    );
    check(
        d,
        RuleSpec::inflator(),
        HypothesisSet::from_arms(&[1, 2]),
        6,
    );
}
