//! Empirical check that the standardized adaptive statistic is standard normal under the
//! global null.

use rayon::prelude::*;
use serde::Serialize;

use crate::auxiliary::{generate_auxiliary, AuxPolicy};
use crate::design::{ScenarioSpec, TrialDesign};
use crate::error::{Error, Result};
use crate::normal::normal_cdf;
use crate::rules::RuleSpec;
use crate::sets::HypothesisSet;
use crate::streams::{derive_seed, replicate_rng};
use crate::trial::run_trial;
use crate::weights::{compute_schedule, ScheduleStatus, SplitRule};

/// Moments and Kolmogorov distance of `T̃_I / sd` over the usable replicates.
#[derive(Clone, Debug, Serialize)]
pub struct NullReport {
    pub n_sims: u64,
    /// Replicates whose schedule was valid and entered the moments.
    pub used: u64,
    pub imaginary: u64,
    pub failed: u64,
    pub mean: f64,
    pub variance: f64,
    /// `sup |F_n(z) − Φ(z)|`.
    pub ks_statistic: f64,
}

impl NullReport {
    /// Standard error of the sample mean of a standard normal sample of this size.
    pub fn mean_se(&self) -> f64 {
        (1.0 / self.used as f64).sqrt()
    }

    /// Standard error of the sample variance of a standard normal sample of this size.
    pub fn variance_se(&self) -> f64 {
        (2.0 / (self.used as f64 - 1.0)).sqrt()
    }

    /// Approximate 5% critical value of the Kolmogorov statistic.
    pub fn ks_critical(&self) -> f64 {
        1.358 / (self.used as f64).sqrt()
    }
}

/// Simulate `n_sims` trials with every `δ_i = 0` and summarize the standardized adaptive
/// statistic for `set`. Imaginary and failed schedules are counted and left out.
pub fn null_distribution_check(
    design: &TrialDesign,
    rule: &RuleSpec,
    set: HypothesisSet,
    n_sims: u64,
    seed: u64,
    workers: usize,
) -> Result<NullReport> {
    design.validate()?;
    if set.is_empty() || set.arms().any(|a| a > design.h) {
        return Err(Error::InvalidInput(format!(
            "hypothesis {set} is not defined for h = {}",
            design.h
        )));
    }
    let rule = rule.build(design)?;
    let scenario = ScenarioSpec::null(design.h);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("could not start worker pool: {e}")))?;
    let draws: Vec<(ScheduleStatus, f64)> = pool.install(|| {
        (0..n_sims)
            .into_par_iter()
            .map(|i| {
                let mut rng = replicate_rng(seed, i);
                let trial = run_trial(design, rule.as_ref(), &scenario, &mut rng)?;
                let burn = &trial.allocations[..design.burn_in_len()];
                let aux = generate_auxiliary(
                    design,
                    burn,
                    set,
                    derive_seed(seed, &[i]),
                    AuxPolicy::Independent,
                );
                let schedule =
                    compute_schedule(design, &trial.allocations, &aux, SplitRule::default())?;
                let z = schedule
                    .statistic(&trial)
                    .map_or(f64::NAN, |t| t / schedule.null_sd());
                Ok((schedule.status, z))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut z: Vec<f64> = draws
        .iter()
        .filter(|(s, _)| *s == ScheduleStatus::Valid)
        .map(|d| d.1)
        .collect();
    let imaginary = draws
        .iter()
        .filter(|(s, _)| *s == ScheduleStatus::Imaginary)
        .count() as u64;
    let failed = draws
        .iter()
        .filter(|(s, _)| *s == ScheduleStatus::Failed)
        .count() as u64;
    if z.len() < 2 {
        return Err(Error::InvalidInput(
            "fewer than two usable replicates".into(),
        ));
    }
    let n = z.len() as f64;
    let mean = z.iter().sum::<f64>() / n;
    let variance = z.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    z.sort_by(f64::total_cmp);
    let ks_statistic = z
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let f = normal_cdf(v);
            (f - k as f64 / n).abs().max(((k + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max);
    Ok(NullReport {
        n_sims,
        used: z.len() as u64,
        imaginary,
        failed,
        mean,
        variance,
        ks_statistic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_rule_is_standard_normal() {
        let d = TrialDesign::sequential(2, 30, 20, vec![3, 3], 0.05).unwrap();
        let r = null_distribution_check(
            &d,
            &RuleSpec::equal(),
            HypothesisSet::singleton(1),
            2000,
            3,
            2,
        )
        .unwrap();
        assert!(r.mean.abs() < 4.0 * r.mean_se());
        assert!((r.variance - 1.0).abs() < 4.0 * r.variance_se());
        assert!(r.ks_statistic < 1.5 * r.ks_critical());
    }

    #[test]
    fn rejects_undefined_set() {
        let d = TrialDesign::sequential(2, 30, 20, vec![3, 3], 0.05).unwrap();
        assert!(null_distribution_check(
            &d,
            &RuleSpec::equal(),
            HypothesisSet::singleton(3),
            10,
            3,
            1
        )
        .is_err());
    }
}
