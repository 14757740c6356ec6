//! Familywise error and disjunctive power of every strategy for one scenario.
//!
//! ```text
//! cargo run --release --example operating_characteristics -- 20000
//! ```

use raradapt::rules::RuleSpec;
use raradapt::sim::{run_experiment, Experiment};
use raradapt::testing::Strategy;
use raradapt::{ScenarioSpec, TrialDesign};

fn main() -> raradapt::Result<()> {
    let sims = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5_000);
    let design = TrialDesign::sequential(2, 60, 30, vec![5, 5], 0.05)?;
    let mut exp = Experiment::new(
        design,
        RuleSpec::inflator(),
        ScenarioSpec::new(0.0, vec![0.0, 1.0]),
        sims,
        42,
    );
    exp.strategies = vec![
        Strategy::AdaptiveClosed,
        Strategy::AdaptiveHolm,
        Strategy::ZClosed,
        Strategy::ZHolm,
        Strategy::ZBonferroni,
        Strategy::DualHolm,
    ];
    let res = run_experiment(&exp, 0)?;
    println!("{sims} trials, {:.1} s", res.wall_clock.as_secs_f64());
    for &s in &exp.strategies {
        let fwer = res.fwer(s).expect("H_1 is true");
        let power = res.power(s).expect("H_2 is false");
        println!(
            "{:<18} FWER {:5.2}% ± {:.2}   power {:5.2}% ± {:.2}",
            s.name(),
            100.0 * fwer.estimate,
            100.0 * fwer.se,
            100.0 * power.estimate,
            100.0 * power.se
        );
    }
    Ok(())
}
