//! Multiple-testing procedures over elementary hypotheses `H_1..H_h`.

use crate::error::{Error, Result};
use crate::sets::HypothesisSet;

/// Level-`alpha` decision for a p-value. Ties reject; `alpha = 0` never rejects.
pub fn rejects(p: f64, alpha: f64) -> bool {
    alpha > 0.0 && p <= alpha
}

/// Closed testing: `H_i` is rejected iff every intersection containing `i` is rejected
/// locally. `local[bits]` holds the local decision for the set with those bits; index 0 is
/// unused.
pub fn closed_test(h: usize, local: &[Option<bool>]) -> Result<HypothesisSet> {
    if local.len() < 1 << h {
        return Err(Error::InvalidInput(format!(
            "closed testing over {h} hypotheses needs {} local decisions",
            (1usize << h) - 1
        )));
    }
    let mut retained = 0u32;
    for set in HypothesisSet::all_nonempty(h) {
        match local[set.bits() as usize] {
            Some(true) => {}
            Some(false) => retained |= set.bits(),
            None => {
                return Err(Error::InvalidInput(format!(
                    "missing local decision for {set}"
                )))
            }
        }
    }
    Ok(HypothesisSet::from_bits(
        HypothesisSet::full(h).bits() & !retained,
    ))
}

/// Holm's step-down procedure: sort the p-values (stable in hypothesis index), reject while
/// `p_(k) <= alpha / (h - k + 1)`, and stop at the first acceptance.
pub fn holm(p: &[f64], alpha: f64) -> HypothesisSet {
    let h = p.len();
    let mut order: Vec<usize> = (0..h).collect();
    order.sort_by(|&a, &b| p[a].total_cmp(&p[b]));
    let mut out = 0u32;
    for (k, &i) in order.iter().enumerate() {
        if rejects(p[i], alpha / (h - k) as f64) {
            out |= 1 << i;
        } else {
            break;
        }
    }
    HypothesisSet::from_bits(out)
}

/// Bonferroni: reject `H_i` iff `p_i <= alpha / h`.
pub fn bonferroni(p: &[f64], alpha: f64) -> HypothesisSet {
    let h = p.len();
    let bits = p
        .iter()
        .enumerate()
        .filter(|(_, &pi)| rejects(pi, alpha / h as f64))
        .fold(0u32, |acc, (i, _)| acc | (1 << i));
    HypothesisSet::from_bits(bits)
}

/// Each hypothesis at level `alpha` on its own.
pub fn unadjusted(p: &[f64], alpha: f64) -> HypothesisSet {
    let bits = p
        .iter()
        .enumerate()
        .filter(|(_, &pi)| rejects(pi, alpha))
        .fold(0u32, |acc, (i, _)| acc | (1 << i));
    HypothesisSet::from_bits(bits)
}

/// Reject only what both procedures reject.
pub fn dual_test(a: HypothesisSet, b: HypothesisSet) -> HypothesisSet {
    HypothesisSet::from_bits(a.bits() & b.bits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn holm_examples() {
        assert_eq!(holm(&[0.01, 0.04], 0.05), HypothesisSet::full(2));
        assert!(holm(&[0.03, 0.04], 0.05).is_empty());
        assert_eq!(holm(&[0.04, 0.01], 0.05), HypothesisSet::full(2));
        // Duplicated p-values face the same thresholds whatever their order.
        assert_eq!(
            holm(&[0.01, 0.01, 0.5], 0.05),
            HypothesisSet::from_arms(&[1, 2])
        );
    }

    #[test]
    fn bonferroni_examples() {
        assert_eq!(bonferroni(&[0.02, 0.03], 0.05), HypothesisSet::singleton(1));
        assert!(bonferroni(&[1.0, 1.0], 0.05).is_empty());
        assert!(bonferroni(&[0.0, 0.0], 0.0).is_empty());
    }

    #[test]
    fn closure_examples() {
        let all = vec![None, Some(true), Some(true), Some(true)];
        assert_eq!(closed_test(2, &all).unwrap(), HypothesisSet::full(2));
        let top_retained = vec![None, Some(true), Some(true), Some(false)];
        assert!(closed_test(2, &top_retained).unwrap().is_empty());
        assert!(closed_test(2, &[None, Some(true), None, Some(true)]).is_err());
    }

    #[test]
    fn dual_is_intersection() {
        let a = HypothesisSet::from_arms(&[1, 2]);
        let b = HypothesisSet::from_arms(&[2, 3]);
        assert_eq!(dual_test(a, b), HypothesisSet::singleton(2));
    }

    fn brute_force_closure(h: usize, local: &[Option<bool>]) -> HypothesisSet {
        let arms: Vec<usize> = (1..=h)
            .filter(|&i| {
                HypothesisSet::all_nonempty(h)
                    .filter(|s| s.contains(i))
                    .all(|s| local[s.bits() as usize] == Some(true))
            })
            .collect();
        HypothesisSet::from_arms(&arms)
    }

    proptest! {
        #[test]
        fn closure_matches_enumeration(h in 1usize..=4, bits in any::<u32>()) {
            let mut local = vec![None];
            for s in 1..(1u32 << h) {
                local.push(Some(bits >> s & 1 == 1));
            }
            prop_assert_eq!(closed_test(h, &local).unwrap(), brute_force_closure(h, &local));
        }

        #[test]
        fn holm_is_closed_bonferroni(p in prop::collection::vec(0.0f64..0.2, 1..=3), alpha in 0.01f64..0.1) {
            let h = p.len();
            let mut local = vec![None];
            for s in HypothesisSet::all_nonempty(h) {
                let k = s.len() as f64;
                local.push(Some(s.arms().any(|i| rejects(p[i - 1], alpha / k))));
            }
            prop_assert_eq!(holm(&p, alpha), closed_test(h, &local).unwrap());
            prop_assert!(bonferroni(&p, alpha).is_subset_of(holm(&p, alpha)));
        }
    }
}
