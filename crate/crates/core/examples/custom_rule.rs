//! Plugging a home-made allocation rule into the trial simulator.
//!
//! The rule below sends patients to the arm with the larger running mean with probability 0.8.
//! Any rule that only looks at accumulated data can be analysed with the adaptive test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use raradapt::design::Regime;
use raradapt::rules::{AllocationRule, History};
use raradapt::testing::{analyze_trial, AnalysisOptions, Strategy};
use raradapt::{run_trial, ScenarioSpec, TrialDesign};

struct FollowTheLeader;

impl AllocationRule for FollowTheLeader {
    fn name(&self) -> &'static str {
        "follow_the_leader"
    }

    fn supports(&self, regime: Regime) -> bool {
        regime != Regime::BlockAdaptiveControl
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let h = history.h();
        let mean = |i: usize| history.arms[i].sum / history.arms[i].count.max(1) as f64;
        let best = (0..h)
            .max_by(|&a, &b| mean(a).total_cmp(&mean(b)))
            .unwrap_or(0);
        let rest = 0.2 / (h - 1) as f64;
        (0..h).map(|i| if i == best { 0.8 } else { rest }).collect()
    }
}

fn main() -> raradapt::Result<()> {
    let design = TrialDesign::sequential(2, 80, 40, vec![4, 4], 0.05)?;
    let scenario = ScenarioSpec::new(0.0, vec![0.0, 0.6]);
    let (mut naive, mut adaptive) = (0, 0);
    let trials = 400;
    for seed in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let trial = run_trial(&design, &FollowTheLeader, &scenario, &mut rng)?;
        let report = analyze_trial(&design, &trial, &AnalysisOptions::new(0.05, seed))?;
        naive += usize::from(report.rejections(Strategy::ZHolm)?.contains(2));
        adaptive += usize::from(report.rejections(Strategy::AdaptiveHolm)?.contains(2));
    }
    println!(
        "H_2 rejected in {naive}/{trials} trials by the Holm z-test and {adaptive}/{trials} by the Holm adaptive test"
    );
    Ok(())
}
