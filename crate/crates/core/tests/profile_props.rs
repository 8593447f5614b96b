//! Property tests for profile statistics, the vanishing predicates, and the
//! simple-base enumeration against its closed class counts.

use proptest::prelude::*;

use num_bigint::BigInt;

use ratsign_core::profiles::{
    degree_bounds, nonvanishing, simple_base_counts_closed, simple_base_sums, stats,
    trivially_vanishes, Parity, Partition, ReducedProfiles,
};

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..5).prop_map(|parts| Partition::from_unsorted(parts).unwrap())
}

fn profiles_strategy() -> impl Strategy<Value = ReducedProfiles> {
    (
        prop::collection::vec(partition_strategy(), 0..4),
        prop::bool::ANY,
    )
        .prop_map(|(parts, odd)| {
            ReducedProfiles::new(parts, if odd { Parity::Odd } else { Parity::Even })
        })
}

/// A partition with at most one odd and one even entry of odd multiplicity:
/// pairs plus an optional singleton of each parity.
fn conforming_partition_strategy() -> impl Strategy<Value = Partition> {
    (
        prop::collection::vec((1u32..=6, 1usize..=2), 0..3),
        prop::option::of(1u32..=3),
        prop::option::of(1u32..=3),
    )
        .prop_map(|(pairs, odd_single, even_single)| {
            let mut parts = Vec::new();
            for (v, reps) in pairs {
                for _ in 0..2 * reps {
                    parts.push(v);
                }
            }
            if let Some(o) = odd_single {
                let v = 2 * o - 1;
                // Avoid colliding with a pair of the same value, which would
                // flip the multiplicity parity.
                if parts.iter().filter(|&&p| p == v).count() % 2 == 0 {
                    parts.push(v);
                }
            }
            if let Some(e) = even_single {
                let v = 2 * e;
                if parts.iter().filter(|&&p| p == v).count() % 2 == 0 {
                    parts.push(v);
                }
            }
            Partition::from_unsorted(parts).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// 2c + o + e accounts for every part when each partition has at most
    /// one odd-multiplicity entry of each parity.
    #[test]
    fn stats_identity_on_conforming_profiles(
        parts in prop::collection::vec(conforming_partition_strategy(), 0..4),
    ) {
        let profiles = ReducedProfiles::new(parts, Parity::Even);
        let s = stats(&profiles);
        prop_assert_eq!(
            2 * s.pairs + s.odd_labels + s.even_labels,
            profiles.total_length() as u32
        );
    }

    /// The non-vanishing predicate is exactly the negation of the vanishing
    /// reasons, for arbitrary profiles.
    #[test]
    fn nonvanishing_negates_vanishing(profiles in profiles_strategy()) {
        prop_assert_eq!(nonvanishing(&profiles), trivially_vanishes(&profiles).is_none());
    }

    /// Degree bounds are monotone data: both bounds share the second
    /// component and differ by one in the first.
    #[test]
    fn degree_bound_shape(profiles in profiles_strategy()) {
        let b = degree_bounds(&profiles);
        prop_assert_eq!(b.deg_f.f_exp, b.deg_g.f_exp);
        let (hi, lo) = match profiles.parity() {
            Parity::Odd => (b.deg_f.q_exp, b.deg_g.q_exp),
            Parity::Even => (b.deg_g.q_exp, b.deg_f.q_exp),
        };
        prop_assert_eq!(hi, lo + 1);
    }
}

proptest! {
    // Simple-base enumeration is exponential in the profile size; keep the
    // random profiles small and the case count moderate.
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Enumerated signed sums against the closed class counts, on the cells
    /// where all signs in a class agree: kind C for e = 0 or d even, kind B
    /// for d odd with e even and positive. For d odd with crossings the
    /// kind C signs cancel completely; for e odd so do the kind B signs.
    #[test]
    fn simple_base_two_route(
        parts in prop::collection::vec(conforming_partition_strategy(), 0..3),
        odd in prop::bool::ANY,
    ) {
        let profiles = ReducedProfiles::new(parts, if odd { Parity::Odd } else { Parity::Even });
        prop_assume!(profiles.total_length() <= 4);
        let s = stats(&profiles);
        let sums = simple_base_sums(&profiles);
        let closed = simple_base_counts_closed(&profiles);
        let unit: i64 = if (s.odd_labels + s.big_even_labels) % 2 == 0 { 1 } else { -1 };

        if s.even_labels == 0 || profiles.parity() == Parity::Even {
            prop_assert_eq!(BigInt::from(sums.type_c * unit), closed.type_c.clone());
            prop_assert_eq!(BigInt::from(sums.classes_c), closed.type_c);
        } else {
            prop_assert_eq!(sums.type_c, 0);
        }

        if profiles.parity() == Parity::Odd && s.even_labels > 0 {
            let closed_b = closed.type_b.unwrap();
            prop_assert_eq!(BigInt::from(sums.classes_b), closed_b.clone());
            if s.even_labels % 2 == 0 {
                prop_assert_eq!(BigInt::from(sums.type_b * unit), closed_b);
            } else {
                prop_assert_eq!(sums.type_b, 0);
            }
        }
        if s.even_labels == 0 {
            prop_assert_eq!(sums.bases_b, 0);
        }
    }
}
