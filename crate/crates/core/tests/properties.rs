// SPDX-License-Identifier: Apache-2.0

use gibbs::bridges::{gibbs_to_quaternion, quaternion_to_gibbs};
use gibbs::gibbs::{TOL_ORTHO_OUTPUT, TOL_PI_TRACE};
use gibbs::{
    align_line, align_pair, compose, gibbs_to_matrix, invert, matrix_to_gibbs, GibbsVector, RotationError,
    Vector3,
};
use proptest::prelude::*;

fn component() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1.0..1.0f64,
        -1e3..1e3f64,
        (-6.0..3.0f64, any::<bool>()).prop_map(|(e, neg)| if neg { -(10f64.powf(e)) } else { 10f64.powf(e) }),
        Just(0.0),
    ]
}

fn gibbs() -> impl Strategy<Value = GibbsVector> {
    (component(), component(), component()).prop_map(|(x, y, z)| GibbsVector::new(x, y, z).unwrap())
}

fn half_turn() -> impl Strategy<Value = GibbsVector> {
    vector(1.0)
        .prop_filter("nonzero", |v| v.norm() > 1e-3)
        .prop_map(|v| GibbsVector::pi_rotation(v).unwrap())
}

fn any_rotation() -> impl Strategy<Value = GibbsVector> {
    prop_oneof![4 => gibbs(), 1 => half_turn()]
}

fn vector(scale: f64) -> impl Strategy<Value = Vector3> {
    (-scale..scale, -scale..scale, -scale..scale).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

/// Entry error allowed for a result snapped to a half turn. The snap fires
/// when 1 + tr U <= TOL_PI_TRACE, i.e. within δ = √TOL_PI_TRACE of π, and
/// drops the sin δ part.
fn snap_tol() -> f64 {
    TOL_PI_TRACE.sqrt() * 1.001
}

/// 1e-9 for finite results; a snapped half turn gets [`snap_tol`].
fn compose_tol(c: &GibbsVector) -> f64 {
    if c.is_pi_encoded() { snap_tol() } else { 1e-9 }
}

fn rel(a: &GibbsVector, b: &GibbsVector) -> f64 {
    a.as_vector().distance(b.as_vector()) / b.norm().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn matrix_round_trip(r in gibbs()) {
        prop_assert!(rel(&matrix_to_gibbs(&gibbs_to_matrix(&r)), &r) <= 1e-9);
    }

    #[test]
    fn matrices_are_rotations(r in any_rotation()) {
        let d = gibbs_to_matrix(&r).diagnostic();
        prop_assert!(d.passes(TOL_ORTHO_OUTPUT), "{d:?}");
    }

    #[test]
    fn rotation_preserves_length_and_dot(r in any_rotation(), a in vector(5.0), b in vector(5.0)) {
        let (ra, rb) = (r.rotate(a), r.rotate(b));
        let scale = 1.0 + a.norm() * b.norm();
        prop_assert!((ra.norm() - a.norm()).abs() <= 1e-12 * (1.0 + a.norm()));
        prop_assert!((ra.dot(rb) - a.dot(b)).abs() <= 1e-12 * scale);
    }

    #[test]
    fn inverse_undoes(r in any_rotation(), a in vector(5.0)) {
        let back = invert(&r).rotate(r.rotate(a));
        prop_assert!(back.distance(a) <= 1e-12 * (1.0 + a.norm()));
        let id = compose(&r, &invert(&r));
        prop_assert!(gibbs_to_matrix(&id).max_abs_diff(&gibbs_to_matrix(&GibbsVector::IDENTITY)) <= 1e-12);
    }

    #[test]
    fn compose_is_matrix_product(r in any_rotation(), s in any_rotation()) {
        let c = compose(&r, &s);
        let rhs = gibbs_to_matrix(&r) * gibbs_to_matrix(&s);
        prop_assert!(gibbs_to_matrix(&c).max_abs_diff(&rhs) <= compose_tol(&c));
    }

    #[test]
    fn compose_is_associative(r in gibbs(), s in gibbs(), t in gibbs()) {
        let a = gibbs_to_matrix(&compose(&compose(&r, &s), &t));
        let b = gibbs_to_matrix(&compose(&r, &compose(&s, &t)));
        prop_assert!(a.max_abs_diff(&b) <= 1e-9);
    }

    #[test]
    fn compose_acts_first_then_second(r in any_rotation(), s in any_rotation(), a in vector(3.0)) {
        let c = compose(&r, &s);
        let stepwise = s.rotate(r.rotate(a));
        prop_assert!(c.rotate(a).distance(stepwise) <= compose_tol(&c) * 2.0 * (1.0 + a.norm()));
    }

    #[test]
    fn quaternion_round_trip(r in any_rotation()) {
        let back = quaternion_to_gibbs(&gibbs_to_quaternion(&r));
        prop_assert!(gibbs_to_matrix(&back).max_abs_diff(&gibbs_to_matrix(&r)) <= 1e-12);
    }

    #[test]
    fn align_line_every_member_works(
        p in vector(3.0).prop_filter("nonzero", |v| v.norm() > 1e-2),
        rot in gibbs(),
        gamma in -1e3..1e3f64,
    ) {
        let q = rot.rotate(p);
        match align_line(p, q, gamma) {
            Ok(r) => prop_assert!(r.rotate(p).distance(q) <= 1e-9 * p.norm()),
            Err(RotationError::Antipodal { .. }) => prop_assert!(p.dot(q) < 0.0),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn align_pair_recovers_rotation(
        p1 in vector(3.0).prop_filter("nonzero", |v| v.norm() > 1e-2),
        p2 in vector(3.0).prop_filter("nonzero", |v| v.norm() > 1e-2),
        rot in any_rotation(),
    ) {
        let (q1, q2) = (rot.rotate(p1), rot.rotate(p2));
        let r = align_pair(p1, q1, p2, q2).unwrap();
        prop_assert!(r.rotate(p1).distance(q1) <= 1e-9 * p1.norm());
        prop_assert!(r.rotate(p2).distance(q2) <= 1e-9 * p2.norm());
        // independent pairs pin the rotation down completely
        let cross = p1.cross(p2).norm() / (p1.norm() * p2.norm());
        if cross > 1e-3 {
            let err = gibbs_to_matrix(&r).max_abs_diff(&gibbs_to_matrix(&rot));
            prop_assert!(err <= 1e-9 / cross, "err {err}");
        }
    }

    #[test]
    fn align_pair_rejects_unequal_lengths(
        p1 in vector(3.0).prop_filter("nonzero", |v| v.norm() > 1e-1),
        p2 in vector(3.0).prop_filter("nonzero", |v| v.norm() > 1e-1),
        rot in gibbs(),
        stretch in 1e-3..0.5f64,
    ) {
        let (q1, q2) = (rot.rotate(p1) * (1.0 + stretch), rot.rotate(p2));
        prop_assert!(matches!(align_pair(p1, q1, p2, q2), Err(RotationError::InvalidPair(_))));
    }
}
