//! Simulate one fully sequential trial under the type I error inflator and analyse it.
//!
//! The naive z-test and the adaptive test are shown side by side for every intersection
//! hypothesis, followed by the hypotheses each multiple testing strategy rejects.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use raradapt::rules::RuleSpec;
use raradapt::testing::{analyze_trial, AnalysisOptions, Strategy};
use raradapt::{run_trial, ScenarioSpec, TrialDesign};

fn main() -> raradapt::Result<()> {
    let design = TrialDesign::sequential(3, 65, 20, vec![5, 5, 5], 0.05)?;
    let rule = RuleSpec::inflator().build(&design)?;
    let scenario = ScenarioSpec::new(0.0, vec![0.0, 0.0, 1.0]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let trial = run_trial(&design, rule.as_ref(), &scenario, &mut rng)?;

    let counts = trial.arm_counts(design.h);
    println!("allocations per arm (control first): {counts:?}");

    let report = analyze_trial(&design, &trial, &AnalysisOptions::new(design.alpha, 17))?;
    println!(
        "{:<10} {:>9} {:>8} {:>9} {:>8}  status",
        "H_I", "naive z", "p", "adapt z", "p"
    );
    for r in report.tested_sets() {
        let f = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
        println!(
            "{:<10} {:>9} {:>8} {:>9} {:>8}  {:?}",
            r.set.to_string(),
            f(r.naive_z),
            f(r.naive_p),
            f(r.adaptive_z),
            f(r.adaptive_p),
            r.status()
        );
    }
    for s in Strategy::HEADLINE {
        println!("{:<18} rejects {}", s.name(), report.rejections(s)?);
    }
    Ok(())
}
