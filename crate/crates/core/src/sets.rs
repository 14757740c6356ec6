//! Index sets of elementary hypotheses, stored as bitmasks.

use std::fmt;

/// A non-empty subset of `{1, ..., h}` for `h <= 31`, bit `i - 1` set when arm `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HypothesisSet(u32);

pub const MAX_ARMS: usize = 31;

impl HypothesisSet {
    pub fn from_bits(bits: u32) -> Self {
        HypothesisSet(bits)
    }

    pub fn singleton(arm: usize) -> Self {
        debug_assert!((1..=MAX_ARMS).contains(&arm));
        HypothesisSet(1 << (arm - 1))
    }

    pub fn full(h: usize) -> Self {
        HypothesisSet(((1u64 << h) - 1) as u32)
    }

    pub fn from_arms(arms: &[usize]) -> Self {
        arms.iter().fold(HypothesisSet(0), |s, &a| {
            HypothesisSet(s.0 | (1 << (a - 1)))
        })
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether experimental arm `arm` (1-based) belongs to the set. Arm 0 never does.
    pub fn contains(self, arm: usize) -> bool {
        (1..=MAX_ARMS).contains(&arm) && self.0 & (1 << (arm - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: HypothesisSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest-indexed member.
    pub fn min_arm(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn arms(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=MAX_ARMS).filter(move |&a| bits & (1 << (a - 1)) != 0)
    }

    /// All non-empty subsets of `{1, ..., h}`.
    pub fn all_nonempty(h: usize) -> impl Iterator<Item = HypothesisSet> {
        (1..(1u32 << h)).map(HypothesisSet)
    }
}

impl fmt::Display for HypothesisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.arms().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let s = HypothesisSet::from_arms(&[1, 3]);
        assert!(s.contains(1) && !s.contains(2) && s.contains(3));
        assert!(!s.contains(0));
        assert_eq!(s.len(), 2);
        assert_eq!(s.min_arm(), Some(1));
        assert_eq!(s.to_string(), "{1,3}");
        assert!(HypothesisSet::singleton(3).is_subset_of(s));
    }

    #[test]
    fn enumerates_all_subsets() {
        assert_eq!(HypothesisSet::all_nonempty(3).count(), 7);
        assert_eq!(HypothesisSet::full(3).bits(), 7);
    }
}
