//! Bridge check between the two halves of the pipeline: every enumerated
//! simple base, converted to a descriptor, must reproduce its sign through
//! the descriptor route, and the sum of the assembled per-base series must
//! hit the extremal coefficients computed by the profile layer. The routes
//! are independent: one evaluates closed per-base leads against the
//! enumeration, the other runs the operator algebra on converted
//! ramification sequences.

use ratsign_core::algebra::BiDegree;
use ratsign_core::algebra::GElement;
use ratsign_core::profiles::{
    enumerate_simple_bases, leading_coefficients, BaseKind, Parity, Partition, ReducedProfiles,
};
use ratsign_core::snumbers::{assemble_fb, descriptor_from_simple_base, epsilon_base};

fn profile(parts: &[&[u32]], parity: Parity) -> ReducedProfiles {
    ReducedProfiles::new(
        parts
            .iter()
            .map(|p| Partition::new(p.to_vec()).unwrap())
            .collect(),
        parity,
    )
}

#[test]
fn descriptor_route_reproduces_signs_and_extremal_coefficients() {
    let cases: &[&[&[u32]]] = &[
        &[],
        &[&[2]],
        &[&[3]],
        &[&[1, 1]],
        &[&[2, 2]],
        &[&[3], &[2]],
        &[&[2], &[2]],
        &[&[3, 1, 1]],
        &[&[2, 2], &[3]],
        &[&[4], &[2]],
        &[&[2, 1], &[1]],
    ];
    for parts in cases {
        for parity in [Parity::Odd, Parity::Even] {
            let profiles = profile(parts, parity);
            let mut total = GElement::zero();
            for kind in [BaseKind::B, BaseKind::C] {
                for (base, sign) in enumerate_simple_bases(&profiles, kind) {
                    let descriptor = descriptor_from_simple_base(&base);
                    assert_eq!(
                        epsilon_base(&descriptor).unwrap(),
                        sign,
                        "sign mismatch for {base:?}"
                    );
                    total = &total + &assemble_fb(&descriptor).unwrap();
                }
            }
            let lc = leading_coefficients(&profiles);
            assert_eq!(
                total.f_part().coeff(lc.f_degree),
                lc.f_coeff,
                "f coefficient for {parts:?} {parity:?}"
            );
            let g_key = BiDegree::new(lc.g_degree.q_exp, lc.g_degree.f_exp - 1);
            assert_eq!(
                total.g_part().coeff(g_key),
                lc.g_coeff,
                "g coefficient for {parts:?} {parity:?}"
            );
        }
    }
}
