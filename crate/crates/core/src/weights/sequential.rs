use crate::auxiliary::AuxiliaryDesign;
use crate::design::{Regime, TrialDesign};
use crate::error::{Error, Result};
use crate::weights::solver::{solve_two_group, SolveFailure};
use crate::weights::{
    check_split, moments, recip_to_weight, FinalSplit, ScheduleStatus, SplitRule, SplitSide,
    StepKind, StepRecord, WeightSchedule,
};

/// Weight schedule for the fully sequential regime.
///
/// Patient `k` after burn-in swaps `b_k` for `a_k`; the remaining in-set count changes by
/// `1{a_k ∈ I, b_k ∉ I} − 1{a_k ∉ I, b_k ∈ I}` and the treatment and control weights are
/// re-solved. At the last patient the weights are kept when `a_n ∈ I`; otherwise no in-set
/// patient is left to carry a weight and the `n_0` controls are split by `split` instead
/// (default `(n_0 − 1, 1)`).
pub fn weights_sequential(
    design: &TrialDesign,
    actual: &[usize],
    aux: &AuxiliaryDesign,
    split: SplitRule,
) -> Result<WeightSchedule> {
    if design.regime != Regime::FullySequentialFixedControl {
        return Err(Error::InvalidDesign(
            "sequential weights need a sequential design".into(),
        ));
    }
    aux.validate(design, actual)?;
    let (n1, n2) = check_split(split, design.n0)?;
    let set = aux.set;
    let n = design.n;
    let r = design.burn_in_len();
    let n0 = design.n0;
    let n_set = aux.n_in_set();
    let remaining = aux.remaining_in_set();

    let mut s = WeightSchedule::new(set, design.regime, n_set, n0, n);
    let mut cur = (1.0 / n_set as f64, 1.0 / n0 as f64);
    s.sequence_coef = vec![0.0; n];
    s.control_coef = vec![-cur.1; n0];
    s.steps.push(StepRecord {
        step: 0,
        kind: StepKind::Natural,
        lambda: f64::NAN,
        eta: f64::NAN,
        groups: [(n_set, 1.0), (n0, -1.0)],
        recip: cur,
    });
    for (k, &a) in actual.iter().enumerate().take(r) {
        s.treatment_weights[k] = Some(n_set as f64);
        s.control_weights[k] = Some(n0 as f64);
        if set.contains(a) {
            s.sequence_coef[k] = cur.0;
        }
    }

    for k in r..n - 1 {
        let m = remaining[k];
        let a_in = set.contains(actual[k]);
        let b_in = set.contains(aux.allocations[k]);
        let m_adj = m + usize::from(a_in && !b_in) - usize::from(!a_in && b_in);
        let (lambda, eta) = moments(m, n0, cur);
        let kind = if m_adj == m {
            StepKind::Unchanged
        } else {
            match solve_two_group(lambda, eta, (m_adj, 1.0), (n0, -1.0)) {
                Ok(sol) => {
                    cur = sol;
                    StepKind::Standard
                }
                Err(SolveFailure::Imaginary) => {
                    s.status = ScheduleStatus::Imaginary;
                    return Ok(s);
                }
                Err(SolveFailure::Degenerate) => {
                    s.status = ScheduleStatus::Failed;
                    return Ok(s);
                }
            }
        };
        s.steps.push(StepRecord {
            step: k + 1,
            kind,
            lambda,
            eta,
            groups: [(m_adj, 1.0), (n0, -1.0)],
            recip: cur,
        });
        s.treatment_weights[k] = Some(recip_to_weight(cur.0));
        s.control_weights[k] = Some(recip_to_weight(cur.1));
        if a_in {
            s.sequence_coef[k] = cur.0;
        }
    }

    let last = n - 1;
    if set.contains(actual[last]) {
        s.treatment_weights[last] = Some(recip_to_weight(cur.0));
        s.control_weights[last] = Some(recip_to_weight(cur.1));
        s.sequence_coef[last] = cur.0;
        s.control_coef.iter_mut().for_each(|c| *c = -cur.1);
        s.steps.push(StepRecord {
            step: n,
            kind: StepKind::Unchanged,
            lambda: f64::NAN,
            eta: f64::NAN,
            groups: [(1, 1.0), (n0, -1.0)],
            recip: cur,
        });
    } else {
        let (lambda, eta) = moments(1, n0, cur);
        match solve_two_group(lambda, eta, (n1, -1.0), (n2, -1.0)) {
            Ok((v1, v2)) => {
                for (j, c) in s.control_coef.iter_mut().enumerate() {
                    *c = if j < n1 { -v1 } else { -v2 };
                }
                s.final_split = Some(FinalSplit {
                    side: SplitSide::Control,
                    counts: (n1, n2),
                    weights: (recip_to_weight(v1), recip_to_weight(v2)),
                });
                s.steps.push(StepRecord {
                    step: n,
                    kind: StepKind::ControlSplit,
                    lambda,
                    eta,
                    groups: [(n1, -1.0), (n2, -1.0)],
                    recip: (v1, v2),
                });
            }
            Err(SolveFailure::Imaginary) => {
                s.status = ScheduleStatus::Imaginary;
                return Ok(s);
            }
            Err(SolveFailure::Degenerate) => {
                s.status = ScheduleStatus::Failed;
                return Ok(s);
            }
        }
    }
    s.finish_flags(actual);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::HypothesisSet;
    use crate::weights::solver::residuals;

    const AUX: [usize; 10] = [1, 2, 2, 1, 2, 2, 1, 1, 2, 1];

    fn design() -> TrialDesign {
        TrialDesign::sequential(2, 11, 10, vec![1, 1], 0.05).unwrap()
    }

    fn schedule(actual: &[usize], arm: usize) -> WeightSchedule {
        let mut b = AUX.to_vec();
        b.push(arm);
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(arm), b);
        weights_sequential(&design(), actual, &aux, SplitRule::Counts(9, 1)).unwrap()
    }

    fn rounded(s: &WeightSchedule) -> Vec<Option<f64>> {
        s.treatment_weights
            .iter()
            .map(|w| w.map(|x| (x * 100.0).round() / 100.0))
            .collect()
    }

    #[test]
    fn worked_example_one() {
        let a = [1, 2, 2, 2, 1, 2, 2, 1, 2, 1, 2];
        let s = schedule(&a, 1);
        let expect = [6.0, 6.0, 6.0, 5.16, 6.0, 6.0, 4.94, 4.94, 4.94, 4.94];
        for (k, e) in expect.iter().enumerate() {
            assert!(
                (s.treatment_weights[k].unwrap() - e).abs() < 0.006,
                "k={k} {:?}",
                rounded(&s)
            );
        }
        assert_eq!(s.treatment_weights[10], None);
        let split = s.final_split.unwrap();
        assert!((split.weights.0 - 9.744).abs() < 0.006);
        assert!((split.weights.1 + 5.383).abs() < 0.006);
        assert!(s.negative_control_weight);
        assert!(!s.negative_treatment_weight);
    }

    #[test]
    fn identity_when_actual_matches_auxiliary() {
        let mut a = AUX.to_vec();
        a.push(1);
        let s = schedule(&a, 1);
        assert!(s.treatment_weights.iter().all(|w| *w == Some(6.0)));
        assert!(s.control_coef.iter().all(|&c| c == -0.1));
    }

    #[test]
    fn steps_satisfy_moment_equations() {
        let a = [1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2];
        for arm in [1, 2] {
            let s = schedule(&a, arm);
            for st in s
                .steps
                .iter()
                .filter(|st| matches!(st.kind, StepKind::Standard | StepKind::ControlSplit))
            {
                let (x, y) = residuals(st.lambda, st.eta, st.groups[0], st.groups[1], st.recip);
                assert!(x < 1e-12 && y < 1e-12);
            }
        }
    }
}
