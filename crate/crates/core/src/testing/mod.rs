//! Test statistics, p-values and multiplicity strategies for one completed trial.

pub mod multiplicity;

pub use multiplicity::{bonferroni, closed_test, dual_test, holm, rejects, unadjusted};

use serde::{Deserialize, Serialize};

use crate::auxiliary::{generate_auxiliary, AuxPolicy};
use crate::design::TrialDesign;
use crate::error::{Error, Result};
use crate::normal::normal_sf;
use crate::sets::HypothesisSet;
use crate::trial::TrialData;
use crate::weights::{
    compute_schedule, weighted_sum, AnomalyReport, ScheduleStatus, SplitRule, WeightSchedule,
};

/// Largest `h` for which all `2^h − 1` intersections are tested.
pub const MAX_CLOSURE_ARMS: usize = 12;

/// How the outcome scale enters the thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarianceMode {
    /// Known outcome standard deviation.
    Known { sigma: f64 },
    /// Pooled sample variance over all arms plugged in for the unknown variance.
    Pooled,
}

impl Default for VarianceMode {
    fn default() -> Self {
        VarianceMode::Known { sigma: 1.0 }
    }
}

/// Multiple-testing strategies evaluated on each trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    AdaptiveClosed,
    AdaptiveHolm,
    AdaptiveBonferroni,
    ZClosed,
    ZHolm,
    ZBonferroni,
    DualHolm,
    DualClosed,
    /// Each elementary hypothesis tested at level α without multiplicity adjustment.
    AdaptiveUnadjusted,
    ZUnadjusted,
}

impl Strategy {
    pub const ALL: [Strategy; 10] = [
        Strategy::AdaptiveClosed,
        Strategy::AdaptiveHolm,
        Strategy::AdaptiveBonferroni,
        Strategy::ZClosed,
        Strategy::ZHolm,
        Strategy::ZBonferroni,
        Strategy::DualHolm,
        Strategy::DualClosed,
        Strategy::AdaptiveUnadjusted,
        Strategy::ZUnadjusted,
    ];

    /// The five strategies reported side by side in the error/power tables.
    pub const HEADLINE: [Strategy; 5] = [
        Strategy::AdaptiveClosed,
        Strategy::AdaptiveHolm,
        Strategy::ZClosed,
        Strategy::ZHolm,
        Strategy::ZBonferroni,
    ];

    /// Column heading used in rendered tables.
    pub fn title(self) -> &'static str {
        match self {
            Strategy::AdaptiveClosed => "Adaptive closed test",
            Strategy::AdaptiveHolm => "Adaptive test (Holm)",
            Strategy::AdaptiveBonferroni => "Adaptive test (Bonferroni)",
            Strategy::ZClosed => "Closed z-test",
            Strategy::ZHolm => "z-test (Holm)",
            Strategy::ZBonferroni => "z-test (Bonferroni)",
            Strategy::DualHolm => "Dual test (Holm)",
            Strategy::DualClosed => "Dual closed test",
            Strategy::AdaptiveUnadjusted => "Adaptive test (unadjusted)",
            Strategy::ZUnadjusted => "z-test (unadjusted)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::AdaptiveClosed => "adaptive_closed",
            Strategy::AdaptiveHolm => "adaptive_holm",
            Strategy::AdaptiveBonferroni => "adaptive_bonferroni",
            Strategy::ZClosed => "z_closed",
            Strategy::ZHolm => "z_holm",
            Strategy::ZBonferroni => "z_bonferroni",
            Strategy::DualHolm => "dual_holm",
            Strategy::DualClosed => "dual_closed",
            Strategy::AdaptiveUnadjusted => "adaptive_unadjusted",
            Strategy::ZUnadjusted => "z_unadjusted",
        }
    }

    pub fn parse(s: &str) -> Option<Strategy> {
        Strategy::ALL.into_iter().find(|st| st.name() == s)
    }

    /// Whether the strategy needs every intersection hypothesis.
    pub fn uses_closure(self) -> bool {
        matches!(
            self,
            Strategy::AdaptiveClosed | Strategy::ZClosed | Strategy::DualClosed
        )
    }

    /// Whether the strategy uses the adaptive statistics.
    pub fn uses_adaptive(self) -> bool {
        !matches!(
            self,
            Strategy::ZClosed | Strategy::ZHolm | Strategy::ZBonferroni | Strategy::ZUnadjusted
        )
    }
}

/// Settings for analysing a trial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisOptions {
    pub alpha: f64,
    pub variance: VarianceMode,
    pub split: SplitRule,
    pub aux_seed: u64,
    pub aux_policy: AuxPolicy,
    /// Test every intersection (needed by closed strategies) or only elementary hypotheses.
    pub closure: bool,
}

impl AnalysisOptions {
    pub fn new(alpha: f64, aux_seed: u64) -> Self {
        AnalysisOptions {
            alpha,
            variance: VarianceMode::default(),
            split: SplitRule::default(),
            aux_seed,
            aux_policy: AuxPolicy::Independent,
            closure: true,
        }
    }
}

/// Results for one (intersection) hypothesis `H_I`.
#[derive(Clone, Debug, Serialize)]
pub struct SetResult {
    #[serde(serialize_with = "serialize_set")]
    pub set: HypothesisSet,
    /// Mean of in-set outcomes minus control mean.
    pub naive_statistic: Option<f64>,
    pub naive_p: Option<f64>,
    /// Naive statistic divided by its null standard deviation.
    pub naive_z: Option<f64>,
    pub adaptive_statistic: Option<f64>,
    pub adaptive_p: Option<f64>,
    /// Adaptive statistic divided by its null standard deviation (`−∞` for imaginary weights).
    pub adaptive_z: Option<f64>,
    pub schedule: WeightSchedule,
}

fn serialize_set<S: serde::Serializer>(
    set: &HypothesisSet,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.arms())
}

impl SetResult {
    pub fn status(&self) -> ScheduleStatus {
        self.schedule.status
    }

    pub fn anomalies(&self) -> AnomalyReport {
        self.schedule.anomalies()
    }
}

/// Full analysis of one trial.
#[derive(Clone, Debug, Serialize)]
pub struct TestReport {
    pub h: usize,
    pub alpha: f64,
    pub variance: VarianceMode,
    /// Pooled standard deviation when it was used.
    pub sigma_hat: Option<f64>,
    /// Whether every intersection was tested.
    pub closure: bool,
    /// Tested hypotheses: all intersections in order of their bits, or the elementary
    /// hypotheses in arm order.
    #[serde(skip)]
    pub sets: Vec<SetResult>,
}

impl TestReport {
    pub fn set(&self, set: HypothesisSet) -> Option<&SetResult> {
        let idx = if self.closure {
            set.bits() as usize - 1
        } else if set.len() == 1 {
            set.min_arm()? - 1
        } else {
            return None;
        };
        self.sets.get(idx)
    }

    pub fn elementary(&self, arm: usize) -> &SetResult {
        self.set(HypothesisSet::singleton(arm))
            .expect("elementary hypotheses are always tested")
    }

    pub fn tested_sets(&self) -> impl Iterator<Item = &SetResult> {
        self.sets.iter()
    }

    fn elementary_p(&self, adaptive: bool) -> Vec<f64> {
        (1..=self.h)
            .map(|i| {
                let r = self.elementary(i);
                let p = if adaptive { r.adaptive_p } else { r.naive_p };
                p.unwrap_or(1.0)
            })
            .collect()
    }

    fn closure(&self, adaptive: bool) -> Result<HypothesisSet> {
        if !self.closure {
            return Err(Error::InvalidInput(
                "closed testing needs every intersection to be analysed".into(),
            ));
        }
        let local: Vec<Option<bool>> = std::iter::once(None)
            .chain(self.sets.iter().map(|r| {
                let p = if adaptive { r.adaptive_p } else { r.naive_p };
                Some(p.is_some_and(|p| rejects(p, self.alpha)))
            }))
            .collect();
        closed_test(self.h, &local)
    }

    /// Rejected elementary hypotheses under `strategy`. Unavailable statistics never reject.
    pub fn rejections(&self, strategy: Strategy) -> Result<HypothesisSet> {
        Ok(match strategy {
            Strategy::AdaptiveClosed => self.closure(true)?,
            Strategy::ZClosed => self.closure(false)?,
            Strategy::AdaptiveHolm => holm(&self.elementary_p(true), self.alpha),
            Strategy::ZHolm => holm(&self.elementary_p(false), self.alpha),
            Strategy::AdaptiveBonferroni => bonferroni(&self.elementary_p(true), self.alpha),
            Strategy::ZBonferroni => bonferroni(&self.elementary_p(false), self.alpha),
            Strategy::DualHolm => dual_test(
                holm(&self.elementary_p(true), self.alpha),
                holm(&self.elementary_p(false), self.alpha),
            ),
            Strategy::DualClosed => dual_test(self.closure(true)?, self.closure(false)?),
            Strategy::AdaptiveUnadjusted => unadjusted(&self.elementary_p(true), self.alpha),
            Strategy::ZUnadjusted => unadjusted(&self.elementary_p(false), self.alpha),
        })
    }

    /// Anomalies relevant to `strategy`: any intersection for closed strategies, the
    /// elementary hypotheses otherwise. Naive strategies have none.
    pub fn anomalies(&self, strategy: Strategy) -> AnomalyReport {
        let mut out = AnomalyReport::default();
        if !strategy.uses_adaptive() {
            return out;
        }
        for r in self.tested_sets() {
            if !strategy.uses_closure() && r.set.len() != 1 {
                continue;
            }
            let a = r.anomalies();
            out.imaginary |= a.imaginary;
            out.failed |= a.failed;
            out.negative_treatment |= a.negative_treatment;
            out.negative_control |= a.negative_control;
        }
        out
    }
}

impl TestReport {
    /// One line per tested hypothesis with both statistics, p-values, weight status and the
    /// schedule's weights, then one reject/retain column per strategy (elementary hypotheses
    /// only).
    pub fn write_csv<W: std::io::Write>(&self, w: W, strategies: &[Strategy]) -> Result<()> {
        let decisions: Vec<HypothesisSet> = strategies
            .iter()
            .map(|&s| self.rejections(s))
            .collect::<Result<_>>()?;
        let mut wtr = csv::Writer::from_writer(w);
        let mut header: Vec<String> = [
            "hypothesis",
            "naive_statistic",
            "naive_z",
            "naive_p",
            "adaptive_statistic",
            "adaptive_z",
            "adaptive_p",
            "status",
            "n_set_aux",
            "n_control_aux",
            "treatment_weights",
            "control_weights",
        ]
        .map(String::from)
        .to_vec();
        header.extend(strategies.iter().map(|s| s.name().to_string()));
        wtr.write_record(&header)?;
        let num = |x: Option<f64>| x.map_or_else(String::new, |v| format!("{v}"));
        let list = |ws: &[Option<f64>]| {
            ws.iter()
                .map(|w| w.map_or_else(|| "-".to_string(), |v| format!("{v}")))
                .collect::<Vec<_>>()
                .join(";")
        };
        for r in &self.sets {
            let status = serde_json::to_value(r.status())?;
            let mut rec = vec![
                r.set.to_string(),
                num(r.naive_statistic),
                num(r.naive_z),
                num(r.naive_p),
                num(r.adaptive_statistic),
                num(r.adaptive_z),
                num(r.adaptive_p),
                status.as_str().unwrap_or_default().to_string(),
                r.schedule.n_set_aux.to_string(),
                r.schedule.n_control_aux.to_string(),
                list(&r.schedule.treatment_weights),
                list(&r.schedule.control_weights),
            ];
            for d in &decisions {
                rec.push(match r.set.min_arm() {
                    Some(arm) if r.set.len() == 1 && d.contains(arm) => "reject".into(),
                    Some(_) if r.set.len() == 1 => "retain".into(),
                    _ => String::new(),
                });
            }
            wtr.write_record(&rec)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

/// Pooled sample variance `Σ(n_i − 1)s_i² / Σ(n_i − 1)` over arms `0..=h`. Arms with fewer
/// than two patients contribute nothing; `None` when no arm has two.
pub fn pooled_variance(trial: &TrialData, h: usize) -> Option<f64> {
    let (mut ss, mut df) = (0.0, 0usize);
    for arm in 0..=h {
        let x = trial.arm_outcomes(arm);
        if x.len() < 2 {
            continue;
        }
        let mean = x.iter().sum::<f64>() / x.len() as f64;
        ss += x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
        df += x.len() - 1;
    }
    (df > 0).then(|| ss / df as f64)
}

/// Naive statistic for `set`: mean of all in-set outcomes minus the control mean, together
/// with its null standard deviation `(1/n_I + 1/n_0)^{1/2}` for unit variance.
pub fn naive_z_statistic(trial: &TrialData, set: HypothesisSet) -> Option<(f64, f64)> {
    let n_set = trial
        .allocations
        .iter()
        .filter(|&&a| set.contains(a))
        .count();
    let controls = trial.all_control_outcomes();
    if n_set == 0 || controls.is_empty() {
        return None;
    }
    let c1 = 1.0 / n_set as f64;
    let c0 = 1.0 / controls.len() as f64;
    let coef: Vec<f64> = trial
        .allocations
        .iter()
        .map(|&a| if set.contains(a) { c1 } else { 0.0 })
        .collect();
    let t =
        weighted_sum(&trial.outcomes, &coef) - weighted_sum(&controls, &vec![c0; controls.len()]);
    Some((t, (c1 + c0).sqrt()))
}

/// One-sided p-value `1 − Φ(t / (scale · sd))`; `−∞` gives 1.
pub fn p_value(t: f64, sd: f64, scale: f64) -> f64 {
    if t == f64::NEG_INFINITY {
        return 1.0;
    }
    normal_sf(t / (scale * sd))
}

/// Analyse a trial: naive and adaptive statistics for every tested hypothesis.
pub fn analyze_trial(
    design: &TrialDesign,
    trial: &TrialData,
    opts: &AnalysisOptions,
) -> Result<TestReport> {
    let h = design.h;
    if opts.closure && h > MAX_CLOSURE_ARMS {
        return Err(Error::InvalidInput(format!(
            "closed testing is limited to {MAX_CLOSURE_ARMS} arms"
        )));
    }
    let (scale, sigma_hat) = match opts.variance {
        VarianceMode::Known { sigma } => (sigma, None),
        VarianceMode::Pooled => {
            let v = pooled_variance(trial, h)
                .filter(|v| *v > 0.0)
                .ok_or_else(|| {
                    Error::InvalidInput("pooled variance is unavailable for this trial".into())
                })?;
            (v.sqrt(), Some(v.sqrt()))
        }
    };
    let burn = &trial.allocations[..design.burn_in_len()];
    let sets: Vec<HypothesisSet> = if opts.closure {
        HypothesisSet::all_nonempty(h).collect()
    } else {
        (1..=h).map(HypothesisSet::singleton).collect()
    };
    let mut results = Vec::with_capacity(sets.len());
    for set in sets {
        let aux = generate_auxiliary(design, burn, set, opts.aux_seed, opts.aux_policy);
        let schedule = compute_schedule(design, &trial.allocations, &aux, opts.split)?;
        let naive = naive_z_statistic(trial, set);
        let adaptive_statistic = schedule.statistic(trial);
        let adaptive_p = adaptive_statistic.map(|t| p_value(t, schedule.null_sd(), scale));
        results.push(SetResult {
            set,
            naive_statistic: naive.map(|(t, _)| t),
            naive_p: naive.map(|(t, sd)| p_value(t, sd, scale)),
            naive_z: naive.map(|(t, sd)| t / (scale * sd)),
            adaptive_statistic,
            adaptive_p,
            adaptive_z: adaptive_statistic.map(|t| t / (scale * schedule.null_sd())),
            schedule,
        });
    }
    Ok(TestReport {
        h,
        alpha: opts.alpha,
        variance: opts.variance,
        sigma_hat,
        closure: opts.closure,
        sets: results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::ScenarioSpec;
    use crate::rules::InflatorRule;
    use crate::trial::run_trial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn naive_statistic_hand_example() {
        let t = TrialData {
            allocations: vec![1, 1],
            outcomes: vec![1.0, 1.0],
            control_outcomes: vec![0.0, 0.0],
        };
        let (stat, sd) = naive_z_statistic(&t, HypothesisSet::singleton(1)).unwrap();
        let two_sample = (1.0 + 1.0) / 2.0 - (0.0 + 0.0) / 2.0;
        assert_eq!(stat, two_sample);
        assert_eq!(sd, 1.0);
        let p = p_value(stat, sd, 1.0);
        assert!(!rejects(p, 0.05));
        assert!(stat < 1.6449 * sd);
        let zero = TrialData {
            allocations: vec![1, 1],
            outcomes: vec![0.0, 0.0],
            control_outcomes: vec![0.0, 0.0],
        };
        assert_eq!(
            naive_z_statistic(&zero, HypothesisSet::singleton(1))
                .unwrap()
                .0,
            0.0
        );
    }

    #[test]
    fn pooled_variance_examples() {
        let t = TrialData {
            allocations: vec![1, 1],
            outcomes: vec![1.0, 3.0],
            control_outcomes: vec![0.0, 2.0],
        };
        assert_eq!(pooled_variance(&t, 1), Some(2.0));
        let flat = TrialData {
            allocations: vec![1, 1],
            outcomes: vec![3.0, 3.0],
            control_outcomes: vec![1.0, 1.0],
        };
        assert_eq!(pooled_variance(&flat, 1), Some(0.0));
        let tiny = TrialData {
            allocations: vec![1],
            outcomes: vec![3.0],
            control_outcomes: vec![1.0],
        };
        assert_eq!(pooled_variance(&tiny, 1), None);
    }

    #[test]
    fn imaginary_maps_to_unit_p() {
        assert_eq!(p_value(f64::NEG_INFINITY, 0.3, 1.0), 1.0);
    }

    #[test]
    fn p_value_decreasing_in_statistic() {
        let mut last = 1.0;
        for t in [-2.0, -0.5, 0.0, 0.3, 1.0, 4.0] {
            let p = p_value(t, 0.25, 1.0);
            assert!(p < last);
            last = p;
        }
    }

    #[test]
    fn pooled_mode_only_rescales() {
        let d = TrialDesign::sequential(2, 60, 60, vec![5, 5], 0.05).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = run_trial(
            &d,
            &InflatorRule::default(),
            &ScenarioSpec::null(2),
            &mut rng,
        )
        .unwrap();
        let known = analyze_trial(&d, &t, &AnalysisOptions::new(0.05, 5)).unwrap();
        let pooled = analyze_trial(
            &d,
            &t,
            &AnalysisOptions {
                variance: VarianceMode::Pooled,
                ..AnalysisOptions::new(0.05, 5)
            },
        )
        .unwrap();
        for (a, b) in known.tested_sets().zip(pooled.tested_sets()) {
            assert_eq!(a.adaptive_statistic, b.adaptive_statistic);
            assert_eq!(a.schedule.sequence_coef, b.schedule.sequence_coef);
        }
        assert!(pooled.sigma_hat.is_some());
    }

    #[test]
    fn strategy_ordering() {
        let d = TrialDesign::sequential(3, 80, 60, vec![5, 5, 5], 0.05).unwrap();
        let s = ScenarioSpec::new(0.0, vec![0.0, 0.6, 0.6]);
        for seed in 0..30 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = run_trial(&d, &InflatorRule::default(), &s, &mut rng).unwrap();
            let r = analyze_trial(&d, &t, &AnalysisOptions::new(0.05, seed)).unwrap();
            let bz = r.rejections(Strategy::ZBonferroni).unwrap();
            let hz = r.rejections(Strategy::ZHolm).unwrap();
            assert!(bz.is_subset_of(hz));
            let dual = r.rejections(Strategy::DualHolm).unwrap();
            assert!(dual.is_subset_of(hz));
            assert!(dual.is_subset_of(r.rejections(Strategy::AdaptiveHolm).unwrap()));
        }
    }
}
