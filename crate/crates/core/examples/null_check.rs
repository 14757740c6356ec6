//! Check that the standardized adaptive statistic is standard normal under the global null
//! for a response-adaptive rule that badly distorts the naive test.

use raradapt::rules::RuleSpec;
use raradapt::sim::null_distribution_check;
use raradapt::{HypothesisSet, TrialDesign};

fn main() -> raradapt::Result<()> {
    let design = TrialDesign::sequential(2, 60, 60, vec![5, 5], 0.05)?;
    for set in HypothesisSet::all_nonempty(2) {
        let r = null_distribution_check(&design, &RuleSpec::inflator(), set, 10_000, 5, 0)?;
        println!(
            "{set}: mean {:+.3} (SE {:.3}), variance {:.3} (SE {:.3}), KS {:.4} (5% critical {:.4}), {} imaginary",
            r.mean,
            r.mean_se(),
            r.variance,
            r.variance_se(),
            r.ks_statistic,
            r.ks_critical(),
            r.imaginary
        );
    }
    Ok(())
}
