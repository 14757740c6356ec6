use crate::auxiliary::AuxiliaryDesign;
use crate::design::{Regime, TrialDesign};
use crate::error::{Error, Result};
use crate::weights::solver::{solve_two_group, SolveFailure};
use crate::weights::{
    check_split, moments, recip_to_weight, FinalSplit, ScheduleStatus, SplitRule, SplitSide,
    StepKind, StepRecord, WeightSchedule,
};

/// Weight schedule for block randomization with fixed control block sizes.
///
/// Block `l` swaps the auxiliary allocations of the block for the actual ones. Control counts
/// are fixed, so only the in-set count is adjusted. In the final block the standard match is
/// used while some actual allocation lands in the set; otherwise the final control block is
/// split by `split` (default `(d_{0,J} − 1, 1)`).
pub fn weights_block_fixed(
    design: &TrialDesign,
    actual: &[usize],
    aux: &AuxiliaryDesign,
    split: SplitRule,
) -> Result<WeightSchedule> {
    if design.regime != Regime::BlockFixedControl {
        return Err(Error::InvalidDesign(
            "expected a block design with a fixed control".into(),
        ));
    }
    aux.validate(design, actual)?;
    check_split(split, *design.control_blocks.last().unwrap())?;
    Ok(block_recursion(design, actual, aux, split))
}

/// Weight schedule for block randomization where the control is randomized too.
///
/// Both the in-set and the control counts are adjusted at every block. The final block uses
/// the standard match when it holds both in-set and control patients, splits the controls when
/// no in-set patient is present (and at least two controls are), splits the in-set patients
/// when no control is present (and at least two in-set patients are), and fails otherwise.
pub fn weights_block_adaptive_control(
    design: &TrialDesign,
    actual: &[usize],
    aux: &AuxiliaryDesign,
    split: SplitRule,
) -> Result<WeightSchedule> {
    if design.regime != Regime::BlockAdaptiveControl {
        return Err(Error::InvalidDesign(
            "expected a block design with an adaptive control".into(),
        ));
    }
    aux.validate(design, actual)?;
    Ok(block_recursion(design, actual, aux, split))
}

/// Per-block counts, index 0 being the burn-in.
struct BlockCounts {
    actual_set: Vec<usize>,
    actual_control: Vec<usize>,
    aux_set: Vec<usize>,
    aux_control: Vec<usize>,
}

impl BlockCounts {
    fn new(design: &TrialDesign, actual: &[usize], aux: &AuxiliaryDesign) -> Self {
        let adaptive = design.regime.adaptive_control();
        let ranges: Vec<_> = std::iter::once(0..design.burn_in_len())
            .chain(design.block_ranges())
            .collect();
        let count = |seq: &[usize], r: &std::ops::Range<usize>, pred: &dyn Fn(usize) -> bool| {
            seq[r.clone()].iter().filter(|&&a| pred(a)).count()
        };
        let in_set = |a: usize| aux.set.contains(a);
        let is_control = |a: usize| a == 0;
        let fixed_controls: Vec<usize> = std::iter::once(design.control_burn_in)
            .chain(design.control_blocks.iter().copied())
            .collect();
        BlockCounts {
            actual_set: ranges.iter().map(|r| count(actual, r, &in_set)).collect(),
            aux_set: ranges
                .iter()
                .map(|r| count(&aux.allocations, r, &in_set))
                .collect(),
            actual_control: if adaptive {
                ranges
                    .iter()
                    .map(|r| count(actual, r, &is_control))
                    .collect()
            } else {
                fixed_controls.clone()
            },
            aux_control: if adaptive {
                ranges
                    .iter()
                    .map(|r| count(&aux.allocations, r, &is_control))
                    .collect()
            } else {
                fixed_controls
            },
        }
    }
}

fn suffix_sums(v: &[usize]) -> Vec<usize> {
    let mut out = vec![0; v.len() + 1];
    for l in (0..v.len()).rev() {
        out[l] = out[l + 1] + v[l];
    }
    out
}

fn block_recursion(
    design: &TrialDesign,
    actual: &[usize],
    aux: &AuxiliaryDesign,
    split: SplitRule,
) -> WeightSchedule {
    let set = aux.set;
    let adaptive = design.regime.adaptive_control();
    let j_last = design.num_blocks();
    let counts = BlockCounts::new(design, actual, aux);
    let m_set = suffix_sums(&counts.aux_set);
    let m_control = suffix_sums(&counts.aux_control);
    let n_set = m_set[0];
    let n_control = m_control[0];

    let mut s = WeightSchedule::new(set, design.regime, n_set, n_control, j_last + 1);
    // Reciprocal weights per block, applied to that block's in-set patients and controls.
    let mut block_u = vec![0.0; j_last + 1];
    let mut block_v = vec![0.0; j_last + 1];
    let mut cur = (1.0 / n_set as f64, 1.0 / n_control as f64);
    block_u[0] = cur.0;
    block_v[0] = cur.1;
    s.treatment_weights[0] = Some(n_set as f64);
    s.control_weights[0] = Some(n_control as f64);
    s.steps.push(StepRecord {
        step: 0,
        kind: StepKind::Natural,
        lambda: f64::NAN,
        eta: f64::NAN,
        groups: [(n_set, 1.0), (n_control, -1.0)],
        recip: cur,
    });

    let mut split_applied: Option<FinalSplit> = None;
    for l in 1..=j_last {
        let (lambda, eta) = moments(m_set[l], m_control[l], cur);
        let final_block = l == j_last;
        let (adj_set, adj_control) = if final_block {
            (counts.actual_set[l], counts.actual_control[l])
        } else {
            (
                m_set[l + 1] + counts.actual_set[l],
                m_control[l + 1] + counts.actual_control[l],
            )
        };
        let fail = |s: &mut WeightSchedule, e: SolveFailure| {
            s.status = match e {
                SolveFailure::Imaginary => ScheduleStatus::Imaginary,
                SolveFailure::Degenerate => ScheduleStatus::Failed,
            };
        };
        if adj_set > 0 && adj_control > 0 {
            let kind = if adj_set == m_set[l] && adj_control == m_control[l] {
                StepKind::Unchanged
            } else {
                match solve_two_group(lambda, eta, (adj_set, 1.0), (adj_control, -1.0)) {
                    Ok(sol) => {
                        cur = sol;
                        StepKind::Standard
                    }
                    Err(e) => {
                        fail(&mut s, e);
                        return s;
                    }
                }
            };
            s.steps.push(StepRecord {
                step: l,
                kind,
                lambda,
                eta,
                groups: [(adj_set, 1.0), (adj_control, -1.0)],
                recip: cur,
            });
            block_u[l] = cur.0;
            block_v[l] = cur.1;
            s.treatment_weights[l] = Some(recip_to_weight(cur.0));
            s.control_weights[l] = Some(recip_to_weight(cur.1));
            continue;
        }
        debug_assert!(
            final_block,
            "non-final blocks always keep in-set and control allocations"
        );
        let (side, total, sign) = if adj_set == 0 {
            (SplitSide::Control, adj_control, -1.0)
        } else {
            (SplitSide::Treatment, adj_set, 1.0)
        };
        let Some((n1, n2)) = split.resolve(total) else {
            s.status = ScheduleStatus::Failed;
            return s;
        };
        match solve_two_group(lambda, eta, (n1, sign), (n2, sign)) {
            Ok((r1, r2)) => {
                s.steps.push(StepRecord {
                    step: l,
                    kind: match side {
                        SplitSide::Control => StepKind::ControlSplit,
                        SplitSide::Treatment => StepKind::TreatmentSplit,
                    },
                    lambda,
                    eta,
                    groups: [(n1, sign), (n2, sign)],
                    recip: (r1, r2),
                });
                split_applied = Some(FinalSplit {
                    side,
                    counts: (n1, n2),
                    weights: (recip_to_weight(r1), recip_to_weight(r2)),
                });
                s.final_split = split_applied;
            }
            Err(e) => {
                fail(&mut s, e);
                return s;
            }
        }
    }

    // Map block weights onto individual observations.
    let labels = design.block_labels();
    s.sequence_coef = vec![0.0; design.n];
    let split_recip = s.steps.last().map(|st| st.recip).unwrap_or_default();
    let (mut seen_set, mut seen_control) = (0usize, 0usize);
    for (k, &a) in actual.iter().enumerate() {
        let l = labels[k];
        let in_final_split = l == j_last && split_applied.is_some();
        if set.contains(a) {
            s.sequence_coef[k] = match split_applied {
                Some(sp) if in_final_split && sp.side == SplitSide::Treatment => {
                    seen_set += 1;
                    if seen_set <= sp.counts.0 {
                        split_recip.0
                    } else {
                        split_recip.1
                    }
                }
                _ => block_u[l],
            };
        } else if adaptive && a == 0 {
            s.sequence_coef[k] = -match split_applied {
                Some(sp) if in_final_split && sp.side == SplitSide::Control => {
                    seen_control += 1;
                    if seen_control <= sp.counts.0 {
                        split_recip.0
                    } else {
                        split_recip.1
                    }
                }
                _ => block_v[l],
            };
        }
    }
    if !adaptive {
        let clabels = design.control_block_labels();
        s.control_coef = clabels
            .iter()
            .map(|&l| -match split_applied {
                Some(sp) if l == j_last && sp.side == SplitSide::Control => {
                    seen_control += 1;
                    if seen_control <= sp.counts.0 {
                        split_recip.0
                    } else {
                        split_recip.1
                    }
                }
                _ => block_v[l],
            })
            .collect();
    }
    s.finish_flags(actual);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::HypothesisSet;
    use crate::weights::solver::residuals;

    fn check_steps(s: &WeightSchedule) {
        for st in &s.steps {
            if matches!(st.kind, StepKind::Natural | StepKind::Unchanged) {
                continue;
            }
            let (x, y) = residuals(st.lambda, st.eta, st.groups[0], st.groups[1], st.recip);
            assert!(x < 1e-12 && y < 1e-12, "{st:?}");
        }
    }

    #[test]
    fn single_block_identity() {
        let d = TrialDesign::block_fixed(2, vec![1, 1], 1, vec![4], vec![3], 0.05).unwrap();
        let a = vec![1, 2, 2, 1, 2, 1];
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(1), a.clone());
        let s = weights_block_fixed(&d, &a, &aux, SplitRule::default()).unwrap();
        assert_eq!(s.status, ScheduleStatus::Valid);
        assert_eq!(s.treatment_weights, vec![Some(3.0), Some(3.0)]);
        assert!(s.control_coef.iter().all(|&c| c == -0.25));
    }

    #[test]
    fn control_split_when_final_block_misses_the_set() {
        let d = TrialDesign::block_fixed(2, vec![1, 1], 2, vec![3, 3], vec![2, 3], 0.05).unwrap();
        let a = vec![1, 2, 1, 1, 2, 2, 2, 2];
        let b = vec![1, 2, 2, 1, 2, 1, 2, 1];
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(1), b);
        let s = weights_block_fixed(&d, &a, &aux, SplitRule::default()).unwrap();
        assert_eq!(s.status, ScheduleStatus::Valid);
        let sp = s.final_split.unwrap();
        assert_eq!(sp.side, SplitSide::Control);
        assert_eq!(sp.counts, (2, 1));
        check_steps(&s);
        // Controls of the final block: two with the first split weight, one with the second.
        let tail = &s.control_coef[4..];
        assert_eq!(tail[0], tail[1]);
        assert_ne!(tail[1], tail[2]);
    }

    fn ac_design() -> TrialDesign {
        TrialDesign::block_adaptive_control(1, vec![1], 1, vec![3, 3], 0.05).unwrap()
    }

    #[test]
    fn adaptive_control_identity() {
        let d = ac_design();
        let a = vec![0, 1, 1, 0, 1, 1, 0, 1];
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(1), a.clone());
        let s = weights_block_adaptive_control(&d, &a, &aux, SplitRule::default()).unwrap();
        assert_eq!(s.status, ScheduleStatus::Valid);
        assert!(s.treatment_weights.iter().all(|w| *w == Some(5.0)));
        assert!(s.control_weights.iter().all(|w| *w == Some(3.0)));
    }

    #[test]
    fn adaptive_control_split_branches() {
        let d = ac_design();
        let b = vec![0, 1, 1, 0, 1, 1, 0, 1];
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(1), b);
        // Final block without in-set patients but two controls.
        let a = vec![0, 1, 1, 0, 1, 0, 0, 0];
        let s = weights_block_adaptive_control(&d, &a, &aux, SplitRule::default()).unwrap();
        assert_eq!(s.status, ScheduleStatus::Valid);
        assert_eq!(s.final_split.unwrap().side, SplitSide::Control);
        check_steps(&s);
        // Final block without controls but two in-set patients.
        let a = vec![0, 1, 1, 0, 1, 1, 1, 1];
        let s = weights_block_adaptive_control(&d, &a, &aux, SplitRule::default()).unwrap();
        assert_eq!(s.status, ScheduleStatus::Valid);
        assert_eq!(s.final_split.unwrap().side, SplitSide::Treatment);
        check_steps(&s);
    }

    #[test]
    fn adaptive_control_failure() {
        let d = TrialDesign::block_adaptive_control(2, vec![1, 1], 1, vec![3, 2], 0.05).unwrap();
        let b = vec![0, 1, 2, 1, 2, 0, 0, 1];
        let aux = AuxiliaryDesign::from_sequence(HypothesisSet::singleton(1), b);
        for tail in [[1, 2], [0, 2]] {
            let mut a = vec![0, 1, 2, 1, 2, 0];
            a.extend(tail);
            let s = weights_block_adaptive_control(&d, &a, &aux, SplitRule::default()).unwrap();
            assert_eq!(s.status, ScheduleStatus::Failed);
            assert!(s.anomalies().failed);
        }
    }
}
