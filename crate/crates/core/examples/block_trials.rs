//! Block-randomized trials with a fixed and with an adaptive control allocation.
//!
//! For each regime one BAR trial is simulated and the per-block weights of the elementary
//! hypotheses are printed next to the natural weights of the naive test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use raradapt::rules::{RuleParams, RuleSpec};
use raradapt::testing::{analyze_trial, AnalysisOptions};
use raradapt::{run_trial, ScenarioSpec, TrialDesign};

fn show(title: &str, design: &TrialDesign, rule: RuleSpec, seed: u64) -> raradapt::Result<()> {
    let built = rule.build(design)?;
    let scenario = ScenarioSpec::new(0.0, vec![0.2, 0.6]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trial = run_trial(design, built.as_ref(), &scenario, &mut rng)?;
    let report = analyze_trial(design, &trial, &AnalysisOptions::new(design.alpha, seed))?;
    println!(
        "{title}: allocations per arm {:?}",
        trial.arm_counts(design.h)
    );
    for arm in 1..=design.h {
        let r = report.elementary(arm);
        let w: Vec<String> = r
            .schedule
            .treatment_weights
            .iter()
            .map(|w| w.map_or("-".into(), |x| format!("{x:.2}")))
            .collect();
        let c: Vec<String> = r
            .schedule
            .control_weights
            .iter()
            .map(|w| w.map_or("-".into(), |x| format!("{x:.2}")))
            .collect();
        println!(
            "  H_{arm}: treatment [{}] control [{}] adaptive p {:.4} naive p {:.4}",
            w.join(", "),
            c.join(", "),
            r.adaptive_p.unwrap_or(f64::NAN),
            r.naive_p.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}

fn main() -> raradapt::Result<()> {
    let fixed = TrialDesign::block_fixed(2, vec![5, 5], 5, vec![40; 3], vec![20; 3], 0.05)?;
    show(
        "fixed control",
        &fixed,
        RuleSpec::new("bar_wason", RuleParams::default()),
        1,
    )?;

    let adaptive = TrialDesign::block_adaptive_control(2, vec![5, 5], 5, vec![50; 3], 0.05)?;
    show(
        "adaptive control",
        &adaptive,
        RuleSpec::new("bar_adaptive_control", RuleParams::default()),
        2,
    )
}
