//! Worked case study: one simulated three-arm block trial with a fixed control allocation and
//! BAR allocation, analysed with both the naive and the adaptive tests.
//!
//! Arm means are the published least-squares mean reductions in LDL-C divided by their
//! standard error (17.3, 66.2 and 72.3 over 3.5), so outcomes have unit variance.

use std::fmt::Write as _;
use std::io::Write;

use crate::design::{ScenarioSpec, TrialDesign};
use crate::error::Result;
use crate::rules::{RuleParams, RuleSpec};
use crate::testing::{SetResult, TestReport};
use crate::trial::TrialData;

use super::Experiment;

/// Burn-in of 8 per dose and 7 controls, then three blocks of 15 patients on the doses and 8
/// controls each.
pub fn case_study_design() -> TrialDesign {
    TrialDesign::block_fixed(2, vec![8, 8], 7, vec![15; 3], vec![8; 3], 0.05)
        .expect("valid case-study design")
}

/// BAR against the control with `γ = 0.5` and `N(5, 1)` priors.
pub fn case_study_rule() -> RuleSpec {
    RuleSpec::new(
        "bar_wason",
        RuleParams {
            gamma: 0.5,
            prior_mean: 5.0,
            prior_var: 1.0,
            ..Default::default()
        },
    )
}

pub fn case_study_scenario() -> ScenarioSpec {
    let mu = 17.3 / 3.5;
    ScenarioSpec::new(mu, vec![(66.2 - 17.3) / 3.5, (72.3 - 17.3) / 3.5])
}

/// One simulated case-study trial and its analysis.
#[derive(Clone, Debug)]
pub struct CaseStudy {
    pub design: TrialDesign,
    pub seed: u64,
    pub trial: TrialData,
    pub report: TestReport,
}

/// Simulate and analyse the case-study trial for `seed`.
pub fn run_case_study(seed: u64) -> Result<CaseStudy> {
    let exp = Experiment::new(
        case_study_design(),
        case_study_rule(),
        case_study_scenario(),
        1,
        seed,
    );
    let (trial, report) = exp.replicate(0)?;
    Ok(CaseStudy {
        design: exp.design,
        seed,
        trial,
        report,
    })
}

fn weight_list(ws: &[Option<f64>]) -> String {
    let parts: Vec<String> = ws
        .iter()
        .map(|w| w.map_or("-".into(), |x| format!("{x:.2}")))
        .collect();
    format!("({})", parts.join(", "))
}

fn fmt_p(p: Option<f64>) -> String {
    match p {
        Some(p) if p < 0.001 => "<0.001".into(),
        Some(p) => format!("{p:.3}"),
        None => "-".into(),
    }
}

fn fmt_num(x: Option<f64>) -> String {
    x.map_or("-".into(), |v| format!("{v:.2}"))
}

impl CaseStudy {
    fn arm(&self, arm: usize) -> &SetResult {
        self.report.elementary(arm)
    }

    /// Quantity-by-arm table. The statistics are differences in means on the outcome scale
    /// (naive) or their weighted counterparts (adaptive); standardized versions follow.
    pub fn rows(&self) -> Vec<(String, Vec<String>)> {
        let h = self.design.h;
        let counts = self.trial.arm_counts(h);
        let per_arm = |f: &dyn Fn(usize, &SetResult) -> String| {
            (1..=h).map(|i| f(i, self.arm(i))).collect::<Vec<_>>()
        };
        vec![
            (
                "z_statistic".into(),
                per_arm(&|_, r| fmt_num(r.naive_statistic)),
            ),
            ("z_p".into(), per_arm(&|_, r| fmt_p(r.naive_p))),
            (
                "adaptive_statistic".into(),
                per_arm(&|_, r| fmt_num(r.adaptive_statistic)),
            ),
            ("adaptive_p".into(), per_arm(&|_, r| fmt_p(r.adaptive_p))),
            ("z_standardized".into(), per_arm(&|_, r| fmt_num(r.naive_z))),
            (
                "adaptive_standardized".into(),
                per_arm(&|_, r| fmt_num(r.adaptive_z)),
            ),
            (
                "natural_weight_treatment".into(),
                per_arm(&|i, _| counts[i].to_string()),
            ),
            (
                "natural_weight_control".into(),
                per_arm(&|_, _| counts[0].to_string()),
            ),
            (
                "adaptive_weights_treatment".into(),
                per_arm(&|_, r| weight_list(&r.schedule.treatment_weights)),
            ),
            (
                "adaptive_weights_control".into(),
                per_arm(&|_, r| weight_list(&r.schedule.control_weights)),
            ),
            (
                "auxiliary_count".into(),
                per_arm(&|_, r| r.schedule.n_set_aux.to_string()),
            ),
        ]
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let mut header = vec!["quantity".to_string()];
        header.extend((1..=self.design.h).map(|i| format!("arm_{i}")));
        wtr.write_record(&header)?;
        for (name, values) in self.rows() {
            let mut rec = vec![name];
            rec.extend(values);
            wtr.write_record(&rec)?;
        }
        wtr.flush()?;
        Ok(())
    }

    /// Plain-text rendering with one column per dose.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{:<28}", "");
        for i in 1..=self.design.h {
            let _ = write!(out, "{:<36}", format!("Arm {i}"));
        }
        out.push('\n');
        for (name, values) in self.rows() {
            let _ = write!(out, "{name:<28}");
            for v in values {
                let _ = write!(out, "{v:<36}");
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_study_shape() {
        let cs = run_case_study(11).unwrap();
        let counts = cs.trial.arm_counts(2);
        assert_eq!(counts[0], 31);
        assert_eq!(counts[1] + counts[2], 61);
        for arm in 1..=2 {
            assert_eq!(cs.arm(arm).schedule.treatment_weights.len(), 4);
        }
        assert_eq!(
            cs.arm(1).schedule.treatment_weights[0],
            Some(cs.arm(1).schedule.n_set_aux as f64)
        );
        let mut buf = Vec::new();
        cs.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("quantity,arm_1,arm_2\nz_statistic,"));
        assert_eq!(text.lines().count(), 12);
    }

    #[test]
    fn case_study_is_reproducible() {
        let a = run_case_study(5).unwrap();
        let b = run_case_study(5).unwrap();
        assert_eq!(a.trial, b.trial);
        assert_eq!(a.render(), b.render());
    }
}
