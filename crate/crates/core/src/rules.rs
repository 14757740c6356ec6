//! Response-adaptive allocation rules.
//!
//! Every rule maps a snapshot of per-arm sufficient statistics to a probability vector over the
//! arms that are being randomized. In the fixed-control regimes that is the experimental arms
//! `1..=h` (vector index `i - 1`); with an adaptive control it is `0..=h` (vector index `i`).
//! Rules used in the fully sequential regime are handed no control information at all.

use serde::{Deserialize, Serialize};

use crate::design::{Regime, TrialDesign};
use crate::error::{Error, Result};
use crate::normal::normal_cdf;

/// Count and outcome sum for one arm.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ArmStats {
    pub count: usize,
    pub sum: f64,
}

impl ArmStats {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
    }

    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then(|| self.sum / self.count as f64)
    }
}

/// What a rule is allowed to see when it is asked for allocation probabilities.
#[derive(Clone, Copy, Debug)]
pub struct History<'a> {
    /// Statistics of experimental arm `i` at index `i - 1`.
    pub arms: &'a [ArmStats],
    /// Control statistics, withheld in the fully sequential regime.
    pub control: Option<ArmStats>,
    /// Whether the output vector includes a leading control entry.
    pub control_randomized: bool,
    /// Adaptive decisions already taken: patients after burn-in (sequential) or completed
    /// blocks (block regimes).
    pub stage: usize,
}

impl History<'_> {
    pub fn h(&self) -> usize {
        self.arms.len()
    }

    /// Length of the probability vector the rule must return.
    pub fn output_len(&self) -> usize {
        self.h() + usize::from(self.control_randomized)
    }
}

/// A response-adaptive randomization rule.
pub trait AllocationRule: Send + Sync {
    fn name(&self) -> &'static str;

    fn supports(&self, regime: Regime) -> bool;

    fn probabilities(&self, history: &History<'_>) -> Vec<f64>;
}

/// Normal prior on an arm mean together with that arm's sufficient statistics. Outcomes are
/// taken to have unit variance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalArmPosterior {
    pub prior_mean: f64,
    pub prior_var: f64,
    pub count: usize,
    pub sum: f64,
}

impl NormalArmPosterior {
    pub fn new(prior_mean: f64, prior_var: f64) -> Self {
        NormalArmPosterior {
            prior_mean,
            prior_var,
            count: 0,
            sum: 0.0,
        }
    }

    pub fn from_stats(prior_mean: f64, prior_var: f64, stats: ArmStats) -> Self {
        NormalArmPosterior {
            prior_mean,
            prior_var,
            count: stats.count,
            sum: stats.sum,
        }
    }

    pub fn update(mut self, x: f64) -> Self {
        self.count += 1;
        self.sum += x;
        self
    }

    fn shrink(&self) -> f64 {
        1.0 + self.count as f64 * self.prior_var
    }

    /// Conjugate posterior mean `(μ₀ + σ₀² Σx) / (1 + n σ₀²)`.
    pub fn mean(&self) -> f64 {
        (self.prior_mean + self.prior_var * self.sum) / self.shrink()
    }

    pub fn var(&self) -> f64 {
        self.prior_var / self.shrink()
    }
}

/// `P(μ_a > μ_b)` for independent normal posteriors.
pub fn prob_superiority(a: &NormalArmPosterior, b: &NormalArmPosterior) -> f64 {
    let diff = a.mean() - b.mean();
    let v = a.var() + b.var();
    if v < 1e-300 {
        return match diff.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => 1.0,
            Some(std::cmp::Ordering::Less) => 0.0,
            _ => 0.5,
        };
    }
    normal_cdf(diff / v.sqrt())
}

/// Normalize non-negative scores to a probability vector, falling back to uniform when they
/// carry no mass.
pub fn normalize(scores: &mut [f64]) {
    let total: f64 = scores.iter().sum();
    if total > 0.0 && total.is_finite() {
        scores.iter_mut().for_each(|s| *s /= total);
    } else {
        let u = 1.0 / scores.len() as f64;
        scores.iter_mut().for_each(|s| *s = u);
    }
}

/// Check that `probs` is a probability vector of the expected length.
pub fn validate_probabilities(probs: &[f64], expected_len: usize) -> Result<()> {
    let fail = |reason: String| {
        Err(Error::InvalidRule {
            probs: probs.to_vec(),
            reason,
        })
    };
    if probs.len() != expected_len {
        return fail(format!("expected {expected_len} entries"));
    }
    if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
        return fail("entries must be finite and non-negative".into());
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return fail(format!("entries sum to {total}"));
    }
    Ok(())
}

/// Equal randomization over every randomized arm.
#[derive(Clone, Copy, Debug, Default)]
pub struct EqualRule;

impl AllocationRule for EqualRule {
    fn name(&self) -> &'static str {
        "equal"
    }

    fn supports(&self, _: Regime) -> bool {
        true
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let k = history.output_len();
        vec![1.0 / k as f64; k]
    }
}

/// History-independent allocation probabilities.
#[derive(Clone, Debug)]
pub struct FixedRule {
    pub probs: Vec<f64>,
}

impl AllocationRule for FixedRule {
    fn name(&self) -> &'static str {
        "fixed"
    }

    fn supports(&self, _: Regime) -> bool {
        true
    }

    fn probabilities(&self, _: &History<'_>) -> Vec<f64> {
        self.probs.clone()
    }
}

/// Deliberately error-inflating rule: while the running mean of arm 1 is at most `threshold`
/// the experimental mass goes to arm 1; once it exceeds the threshold, arm 1 is closed and the
/// mass is spread equally over the remaining randomized arms (arms `2..=h`, plus the control
/// when it is randomized).
///
/// With an adaptively allocated control, `untriggered_control` is the share kept by the control
/// before the trigger fires (arm 1 receives the rest). Setting it to zero sends every patient to
/// arm 1, which starves the control and produces mostly negative weights.
#[derive(Clone, Copy, Debug)]
pub struct InflatorRule {
    pub threshold: f64,
    pub untriggered_control: f64,
}

impl Default for InflatorRule {
    fn default() -> Self {
        InflatorRule {
            threshold: 0.5,
            untriggered_control: 0.5,
        }
    }
}

impl AllocationRule for InflatorRule {
    fn name(&self) -> &'static str {
        "inflator"
    }

    fn supports(&self, _: Regime) -> bool {
        true
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let h = history.h();
        let offset = usize::from(history.control_randomized);
        let mut p = vec![0.0; history.output_len()];
        let triggered = history.arms[0].mean().is_some_and(|m| m > self.threshold);
        if !triggered || h + offset == 1 {
            let control = if offset == 1 {
                self.untriggered_control
            } else {
                0.0
            };
            if offset == 1 {
                p[0] = control;
            }
            p[offset] = 1.0 - control;
            return p;
        }
        let others = (h - 1 + offset) as f64;
        if offset == 1 {
            p[0] = 1.0 / others;
        }
        for e in p.iter_mut().skip(offset + 1) {
            *e = 1.0 / others;
        }
        p
    }
}

/// Bayesian adaptive randomization favouring arms likely to be best among the experimental
/// treatments. With two arms, `π₁ = P^τ / (P^τ + (1 - P)^τ)` for `P = P(μ₁ > μ₂)`; with more,
/// `π_i ∝ P(μ_i > μ̄)^τ` where `μ̄` is the average of the posterior means. With
/// `random_average` the comparison treats `μ̄` as an independent normal variable with variance
/// `Σ_j Var(μ_j) / h²`; otherwise `μ̄` is a fixed threshold.
#[derive(Clone, Copy, Debug)]
pub struct BarYinRule {
    pub tau: f64,
    pub prior_mean: f64,
    pub prior_var: f64,
    pub random_average: bool,
}

impl AllocationRule for BarYinRule {
    fn name(&self) -> &'static str {
        "bar_yin"
    }

    fn supports(&self, regime: Regime) -> bool {
        !regime.adaptive_control()
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let posts: Vec<_> = history
            .arms
            .iter()
            .map(|s| NormalArmPosterior::from_stats(self.prior_mean, self.prior_var, *s))
            .collect();
        let mut scores = match posts.len() {
            1 => vec![1.0],
            2 => {
                let p = prob_superiority(&posts[0], &posts[1]);
                vec![p.powf(self.tau), (1.0 - p).powf(self.tau)]
            }
            h => {
                let hf = h as f64;
                let mbar = posts.iter().map(|p| p.mean()).sum::<f64>() / hf;
                let mbar_var = if self.random_average {
                    posts.iter().map(|p| p.var()).sum::<f64>() / (hf * hf)
                } else {
                    0.0
                };
                posts
                    .iter()
                    .map(|p| {
                        normal_cdf((p.mean() - mbar) / (p.var() + mbar_var).sqrt()).powf(self.tau)
                    })
                    .collect()
            }
        };
        normalize(&mut scores);
        scores
    }
}

fn superiority_over_control(history: &History<'_>, prior_mean: f64, prior_var: f64) -> Vec<f64> {
    let control = NormalArmPosterior::from_stats(
        prior_mean,
        prior_var,
        history
            .control
            .expect("control statistics are available in block regimes"),
    );
    history
        .arms
        .iter()
        .map(|s| {
            prob_superiority(
                &NormalArmPosterior::from_stats(prior_mean, prior_var, *s),
                &control,
            )
        })
        .collect()
}

/// Bayesian adaptive randomization against the control: `π_i ∝ P(μ_i > μ₀)^γ`.
#[derive(Clone, Copy, Debug)]
pub struct BarWasonRule {
    pub gamma: f64,
    pub prior_mean: f64,
    pub prior_var: f64,
}

impl AllocationRule for BarWasonRule {
    fn name(&self) -> &'static str {
        "bar_wason"
    }

    fn supports(&self, regime: Regime) -> bool {
        regime == Regime::BlockFixedControl
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let mut scores: Vec<f64> =
            superiority_over_control(history, self.prior_mean, self.prior_var)
                .into_iter()
                .map(|p| p.powf(self.gamma))
                .collect();
        normalize(&mut scores);
        scores
    }
}

/// Largest exponent fed to `exp` when weighting the control entry.
const MAX_CONTROL_EXPONENT: f64 = 700.0;

/// Variant of [`BarWasonRule`] that also randomizes to the control. The experimental entries
/// are the normalized Wason weights; the control entry is `(1/h) exp(ν (max_i m̂_i - m̂_0))`,
/// with `m̂` the current arm sizes, and the vector is renormalized.
#[derive(Clone, Copy, Debug)]
pub struct BarAdaptiveControlRule {
    pub gamma: f64,
    pub nu: f64,
    pub prior_mean: f64,
    pub prior_var: f64,
}

impl AllocationRule for BarAdaptiveControlRule {
    fn name(&self) -> &'static str {
        "bar_adaptive_control"
    }

    fn supports(&self, regime: Regime) -> bool {
        regime == Regime::BlockAdaptiveControl
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        let mut experimental: Vec<f64> =
            superiority_over_control(history, self.prior_mean, self.prior_var)
                .into_iter()
                .map(|p| p.powf(self.gamma))
                .collect();
        normalize(&mut experimental);
        let h = history.h();
        let max_size = history.arms.iter().map(|s| s.count).max().unwrap_or(0) as f64;
        let control_size = history.control.map_or(0, |s| s.count) as f64;
        let exponent = (self.nu * (max_size - control_size)).min(MAX_CONTROL_EXPONENT);
        let mut p = Vec::with_capacity(h + 1);
        p.push(exponent.exp() / h as f64);
        p.extend(experimental);
        normalize(&mut p);
        p
    }
}

/// Restricts every allocation probability of the wrapped rule to `[lo, hi]`, redistributing the
/// excess proportionally over the unconstrained entries.
pub struct ClampedRule {
    pub inner: Box<dyn AllocationRule>,
    pub lo: f64,
    pub hi: f64,
}

impl AllocationRule for ClampedRule {
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn supports(&self, regime: Regime) -> bool {
        self.inner.supports(regime)
    }

    fn probabilities(&self, history: &History<'_>) -> Vec<f64> {
        clamp_probabilities(&self.inner.probabilities(history), self.lo, self.hi)
    }
}

/// Project a probability vector onto `{p : lo <= p_i <= hi, Σp = 1}` by pinning violators to
/// the nearest bound and rescaling the rest, repeating until nothing moves.
pub fn clamp_probabilities(p: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let k = p.len();
    if k as f64 * lo > 1.0 + 1e-12 || (k as f64) * hi < 1.0 - 1e-12 {
        return p.to_vec();
    }
    let mut out = p.to_vec();
    let mut pinned = vec![false; k];
    for _ in 0..=k {
        let fixed_mass: f64 = (0..k).filter(|&i| pinned[i]).map(|i| out[i]).sum();
        let free_mass: f64 = (0..k).filter(|&i| !pinned[i]).map(|i| out[i]).sum();
        let free_count = pinned.iter().filter(|&&x| !x).count();
        if free_count == 0 {
            break;
        }
        let target = 1.0 - fixed_mass;
        for i in (0..k).filter(|&i| !pinned[i]) {
            out[i] = if free_mass > 0.0 {
                out[i] * target / free_mass
            } else {
                target / free_count as f64
            };
        }
        let mut moved = false;
        for i in 0..k {
            if pinned[i] {
                continue;
            }
            if out[i] < lo - 1e-15 {
                out[i] = lo;
                pinned[i] = true;
                moved = true;
            } else if out[i] > hi + 1e-15 {
                out[i] = hi;
                pinned[i] = true;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    out
}

/// Rule parameters as they appear in experiment configurations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleParams {
    #[serde(default = "half")]
    pub tau: f64,
    #[serde(default = "half")]
    pub gamma: f64,
    #[serde(default = "default_nu")]
    pub nu: f64,
    #[serde(default)]
    pub probs: Option<Vec<f64>>,
    #[serde(default = "half")]
    pub threshold: f64,
    #[serde(default)]
    pub prior_mean: f64,
    #[serde(default = "one")]
    pub prior_var: f64,
    #[serde(default)]
    pub clamp: Option<(f64, f64)>,
    #[serde(default = "half")]
    pub untriggered_control: f64,
    #[serde(default = "yes")]
    pub random_average: bool,
}

fn half() -> f64 {
    0.5
}

fn yes() -> bool {
    true
}

fn one() -> f64 {
    1.0
}

fn default_nu() -> f64 {
    0.1
}

impl Default for RuleParams {
    fn default() -> Self {
        RuleParams {
            tau: 0.5,
            gamma: 0.5,
            nu: 0.1,
            probs: None,
            threshold: 0.5,
            prior_mean: 0.0,
            prior_var: 1.0,
            clamp: None,
            untriggered_control: 0.5,
            random_average: true,
        }
    }
}

/// A named rule plus its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSpec {
    pub name: String,
    #[serde(default)]
    pub params: RuleParams,
}

impl RuleSpec {
    pub fn new(name: &str, params: RuleParams) -> Self {
        RuleSpec {
            name: name.to_string(),
            params,
        }
    }

    pub fn equal() -> Self {
        RuleSpec::new("equal", RuleParams::default())
    }

    pub fn fixed(probs: Vec<f64>) -> Self {
        RuleSpec::new(
            "fixed",
            RuleParams {
                probs: Some(probs),
                ..Default::default()
            },
        )
    }

    pub fn inflator() -> Self {
        RuleSpec::new("inflator", RuleParams::default())
    }

    /// Instantiate the rule for a design, checking parameters and regime compatibility.
    pub fn build(&self, design: &TrialDesign) -> Result<Box<dyn AllocationRule>> {
        let p = &self.params;
        for (label, v) in [("tau", p.tau), ("gamma", p.gamma), ("nu", p.nu)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::Config(format!(
                    "{label} must be a non-negative number, got {v}"
                )));
            }
        }
        if !(p.prior_var > 0.0 && p.prior_var.is_finite()) {
            return Err(Error::Config(format!(
                "prior_var must be positive, got {}",
                p.prior_var
            )));
        }
        let rule: Box<dyn AllocationRule> = match self.name.as_str() {
            "equal" => Box::new(EqualRule),
            "fixed" => {
                let probs = p
                    .probs
                    .clone()
                    .ok_or_else(|| Error::Config("the fixed rule needs `probs`".into()))?;
                validate_probabilities(&probs, design.randomized_arms())
                    .map_err(|e| Error::Config(e.to_string()))?;
                Box::new(FixedRule { probs })
            }
            "inflator" => {
                if !(0.0..=1.0).contains(&p.untriggered_control) {
                    return Err(Error::Config(
                        "untriggered_control must lie in [0, 1]".into(),
                    ));
                }
                Box::new(InflatorRule {
                    threshold: p.threshold,
                    untriggered_control: p.untriggered_control,
                })
            }
            "bar_yin" => Box::new(BarYinRule {
                tau: p.tau,
                prior_mean: p.prior_mean,
                prior_var: p.prior_var,
                random_average: p.random_average,
            }),
            "bar_wason" => Box::new(BarWasonRule {
                gamma: p.gamma,
                prior_mean: p.prior_mean,
                prior_var: p.prior_var,
            }),
            "bar_adaptive_control" => Box::new(BarAdaptiveControlRule {
                gamma: p.gamma,
                nu: p.nu,
                prior_mean: p.prior_mean,
                prior_var: p.prior_var,
            }),
            other => return Err(Error::Config(format!("unknown rule `{other}`"))),
        };
        if !rule.supports(design.regime) {
            return Err(Error::IncompatibleRule {
                rule: self.name.clone(),
                regime: design.regime.label().to_string(),
            });
        }
        match p.clamp {
            None => Ok(rule),
            Some((lo, hi)) => {
                if !(0.0 <= lo && lo <= hi && hi <= 1.0) {
                    return Err(Error::Config(format!(
                        "clamp must satisfy 0 <= lo <= hi <= 1, got ({lo}, {hi})"
                    )));
                }
                Ok(Box::new(ClampedRule {
                    inner: rule,
                    lo,
                    hi,
                }))
            }
        }
    }
}
