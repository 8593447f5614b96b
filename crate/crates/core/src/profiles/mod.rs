//! Reduced ramification profiles and their combinatorics.
//!
//! A profile is a tuple of reduced partitions together with a parity of the
//! total degree. Four statistics drive everything downstream:
//!
//! - `pairs` (c): total number of disjoint equal pairs extractable from the
//!   partitions, `sum floor(N/2)` over all entry multiplicities `N`;
//! - `odd_labels` (o): partitions containing an odd entry an odd number of
//!   times;
//! - `even_labels` (e): partitions containing an even entry an odd number
//!   of times;
//! - `big_even_labels` (b): partitions with exactly one odd and one even
//!   entry of odd multiplicity where the even entry is the bigger one;
//!
//! plus the repeat divisor `A = prod floor(N/2)` over multiplicities
//! `N >= 2`. The vanishing predicates, degree bounds, and the simple-base
//! machinery ([`enumerate_simple_bases`] and the sums and counts built on
//! it) are all expressed in these terms.

mod simple_bases;

pub use simple_bases::{
    enumerate_simple_bases, leading_coefficients, simple_base_counts_closed, simple_base_sums,
    BaseKind, ClosedCounts, Component, CrossingPassage, LeadingCoefficients, SimpleBase,
    SimpleBaseSums,
};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::BiDegree;

/// Parity of the degree `d` a profile is understood against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// A partition: weakly decreasing positive parts (possibly none).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileError {
    NotWeaklyDecreasing,
    ZeroPart,
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::NotWeaklyDecreasing => write!(f, "parts must be weakly decreasing"),
            ProfileError::ZeroPart => write!(f, "parts must be positive"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ProfileError {}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ProfileError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(ProfileError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ProfileError::NotWeaklyDecreasing);
        }
        Ok(Partition { parts })
    }

    /// Sorts the inputs, so any multiset of positive entries is accepted.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, ProfileError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Entry -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

/// A tuple of reduced partitions with the parity of `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedProfiles {
    partitions: Vec<Partition>,
    parity: Parity,
}

impl ReducedProfiles {
    pub fn new(partitions: Vec<Partition>, parity: Parity) -> Self {
        ReducedProfiles { partitions, parity }
    }

    pub fn empty(parity: Parity) -> Self {
        ReducedProfiles::new(Vec::new(), parity)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn total_length(&self) -> usize {
        self.partitions.iter().map(Partition::len).sum()
    }
}

/// The derived statistics of a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileStats {
    /// c: equal pairs over all partitions.
    pub pairs: u32,
    /// o: partitions with an odd entry of odd multiplicity.
    pub odd_labels: u32,
    /// e: partitions with an even entry of odd multiplicity.
    pub even_labels: u32,
    /// b: partitions where both parities occur an odd number of times and
    /// the even entry is bigger than the odd one.
    pub big_even_labels: u32,
    /// A: product of floor(N/2) over multiplicities N >= 2 (empty = 1).
    pub repeat_divisor: BigUint,
}

/// Entries of one partition with odd multiplicity, split by entry parity.
fn odd_multiplicity_entries(p: &Partition) -> (Vec<u32>, Vec<u32>) {
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for (&v, &n) in &p.multiplicities() {
        if n % 2 == 1 {
            if v % 2 == 1 {
                odd.push(v);
            } else {
                even.push(v);
            }
        }
    }
    (odd, even)
}

pub fn stats(profiles: &ReducedProfiles) -> ProfileStats {
    let mut s = ProfileStats {
        pairs: 0,
        odd_labels: 0,
        even_labels: 0,
        big_even_labels: 0,
        repeat_divisor: BigUint::one(),
    };
    for p in profiles.partitions() {
        for &n in p.multiplicities().values() {
            s.pairs += (n / 2) as u32;
            if n >= 2 {
                s.repeat_divisor *= BigUint::from(n / 2);
            }
        }
        let (odd, even) = odd_multiplicity_entries(p);
        if !odd.is_empty() {
            s.odd_labels += 1;
        }
        if !even.is_empty() {
            s.even_labels += 1;
        }
        if let ([o], [e]) = (odd.as_slice(), even.as_slice()) {
            if e > o {
                s.big_even_labels += 1;
            }
        }
    }
    s
}

/// Why a profile's generating series vanishes identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingReason {
    /// Some partition repeats a parity among its odd-multiplicity entries
    /// (kills both parities of `d`).
    RepeatedParityEntry { label: usize },
    /// For `d` odd only: an odd number of partitions have an even entry of
    /// odd multiplicity.
    OddCountOfEvenLabels,
}

/// The two vanishing criteria, checked against the stored parity.
pub fn trivially_vanishes(profiles: &ReducedProfiles) -> Option<VanishingReason> {
    for (label, p) in profiles.partitions().iter().enumerate() {
        let (odd, even) = odd_multiplicity_entries(p);
        if odd.len() > 1 || even.len() > 1 {
            return Some(VanishingReason::RepeatedParityEntry { label });
        }
    }
    if profiles.parity() == Parity::Odd {
        let even_labels = profiles
            .partitions()
            .iter()
            .filter(|p| !odd_multiplicity_entries(p).1.is_empty())
            .count();
        if even_labels % 2 == 1 {
            return Some(VanishingReason::OddCountOfEvenLabels);
        }
    }
    None
}

/// The if-and-only-if non-vanishing conditions, evaluated directly (an
/// independent route from [`trivially_vanishes`]).
pub fn nonvanishing(profiles: &ReducedProfiles) -> bool {
    let per_partition = profiles.partitions().iter().all(|p| {
        let mut odd_seen = 0usize;
        let mut even_seen = 0usize;
        for (&v, &n) in &p.multiplicities() {
            if n % 2 == 1 {
                if v % 2 == 1 {
                    odd_seen += 1;
                } else {
                    even_seen += 1;
                }
            }
        }
        odd_seen <= 1 && even_seen <= 1
    });
    if !per_partition {
        return false;
    }
    match profiles.parity() {
        Parity::Even => true,
        Parity::Odd => {
            let even_labels = profiles
                .partitions()
                .iter()
                .filter(|p| {
                    p.multiplicities()
                        .iter()
                        .any(|(&v, &n)| v % 2 == 0 && n % 2 == 1)
                })
                .count();
            even_labels % 2 == 0
        }
    }
}

/// Upper bounds for the degrees of the profile's generating series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub deg_f: BiDegree,
    pub deg_g: BiDegree,
}

pub fn degree_bounds(profiles: &ReducedProfiles) -> DegreeBounds {
    let s = stats(profiles);
    let high = s.pairs + s.odd_labels + 2;
    match profiles.parity() {
        Parity::Odd => DegreeBounds {
            deg_f: BiDegree::new(s.pairs + 1, high),
            deg_g: BiDegree::new(s.pairs, high),
        },
        Parity::Even => DegreeBounds {
            deg_f: BiDegree::new(s.pairs, high),
            deg_g: BiDegree::new(s.pairs + 1, high),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn profiles(parts: &[&[u32]], parity: Parity) -> ReducedProfiles {
        ReducedProfiles::new(
            parts
                .iter()
                .map(|p| Partition::new(p.to_vec()).unwrap())
                .collect(),
            parity,
        )
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 2, 2]).is_ok());
        assert_eq!(
            Partition::new(vec![2, 3]),
            Err(ProfileError::NotWeaklyDecreasing)
        );
        assert_eq!(Partition::new(vec![1, 0]), Err(ProfileError::ZeroPart));
        assert_eq!(
            Partition::from_unsorted(vec![2, 3]).unwrap().parts(),
            &[3, 2]
        );
    }

    #[test]
    fn stats_examples() {
        let s = stats(&ReducedProfiles::empty(Parity::Odd));
        assert_eq!(
            (s.pairs, s.odd_labels, s.even_labels, s.big_even_labels),
            (0, 0, 0, 0)
        );
        assert!(s.repeat_divisor.is_one());

        let s = stats(&profiles(&[&[3, 2, 1, 1], &[3, 2, 2]], Parity::Even));
        assert_eq!(
            (s.pairs, s.odd_labels, s.even_labels, s.big_even_labels),
            (2, 2, 1, 0)
        );
        assert!(s.repeat_divisor.is_one());

        let s = stats(&profiles(&[&[2, 2, 2]], Parity::Even));
        assert_eq!(
            (s.pairs, s.odd_labels, s.even_labels, s.big_even_labels),
            (1, 0, 1, 0)
        );

        // (4,3): one odd, one even odd-multiplicity entry, even bigger.
        let s = stats(&profiles(&[&[4, 3]], Parity::Odd));
        assert_eq!(s.big_even_labels, 1);
    }

    #[test]
    fn vanishing_examples() {
        // (3,1): two odd entries of odd multiplicity kills both parities.
        for parity in [Parity::Odd, Parity::Even] {
            assert!(matches!(
                trivially_vanishes(&profiles(&[&[3, 1]], parity)),
                Some(VanishingReason::RepeatedParityEntry { label: 0 })
            ));
        }
        // (2,1): vanishes for d odd only.
        assert_eq!(
            trivially_vanishes(&profiles(&[&[2, 1]], Parity::Odd)),
            Some(VanishingReason::OddCountOfEvenLabels)
        );
        assert_eq!(
            trivially_vanishes(&profiles(&[&[2, 1]], Parity::Even)),
            None
        );
        assert_eq!(
            trivially_vanishes(&ReducedProfiles::empty(Parity::Odd)),
            None
        );
    }

    #[test]
    fn nonvanishing_is_the_negation() {
        let cases: [(&[&[u32]], Parity, bool); 5] = [
            (&[&[2, 2]], Parity::Odd, true),
            (&[&[2, 1]], Parity::Odd, false),
            (&[&[2, 1]], Parity::Even, true),
            (&[&[3, 1]], Parity::Even, false),
            (&[], Parity::Odd, true),
        ];
        for (parts, parity, expect) in cases {
            let p = profiles(parts, parity);
            assert_eq!(nonvanishing(&p), expect, "{parts:?} {parity:?}");
            assert_eq!(nonvanishing(&p), trivially_vanishes(&p).is_none());
        }
    }

    #[test]
    fn degree_bound_examples() {
        let odd = degree_bounds(&ReducedProfiles::empty(Parity::Odd));
        assert_eq!(odd.deg_f, BiDegree::new(1, 2));
        assert_eq!(odd.deg_g, BiDegree::new(0, 2));
        let even = degree_bounds(&ReducedProfiles::empty(Parity::Even));
        assert_eq!(even.deg_f, BiDegree::new(0, 2));
        assert_eq!(even.deg_g, BiDegree::new(1, 2));
    }
}
