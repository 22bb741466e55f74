// SPDX-License-Identifier: Apache-2.0

//! Fast 3D paths against slower general ones.

use gibbs::bridges::{
    axis_angle_to_gibbs, euler_to_matrix, gibbs_to_axis_angle, gibbs_to_quaternion, matrix_to_euler,
    quaternion_to_gibbs, AxisAngle, EulerAngles, UnitQuaternion,
};
use gibbs::cayley::{cayley_forward, cayley_forward_raw, cayley_inverse, skew_from_vector, vector_from_skew};
use gibbs::{compose, gibbs_to_matrix, matrix_to_gibbs, GibbsVector, RotationError, SkewMatrix, SquareMatrix, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rotation(rng: &mut ChaCha8Rng, max_angle: f64) -> GibbsVector {
    let axis = loop {
        let v = Vector3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if let Some(u) = v.normalized().filter(|_| v.norm() <= 1.0 && v.norm() > 1e-3) {
            break u;
        }
    };
    let angle = rng.gen_range(0.0..max_angle);
    GibbsVector::from_vector(axis * (angle / 2.0).tan()).unwrap()
}

fn square(r: &GibbsVector) -> SquareMatrix {
    SquareMatrix::from_rows(&gibbs_to_matrix(r).rows()).unwrap()
}

#[test]
fn cayley_paths_agree_with_vector_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..2000 {
        let r = random_rotation(&mut rng, 3.0);
        let s = cayley_forward(&square(&r)).unwrap();
        let v = vector_from_skew(&s).unwrap();
        assert!(v.as_vector().distance(r.as_vector()) <= 1e-10 * (1.0 + r.norm()));
        let u = cayley_inverse(&skew_from_vector(&r).unwrap());
        assert!(u.max_abs_diff(&square(&r)) <= 1e-12);
    }
}

#[test]
fn both_factor_orders_match() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let u = square(&random_rotation(&mut rng, 3.0));
        let id = SquareMatrix::identity(3);
        // (U - I)(U + I)⁻¹ via the transpose trick: solve (U + I)ᵀ Xᵀ = (U - I)ᵀ
        let right = u.add(&id).transpose().solve(&u.sub(&id).transpose()).unwrap().transpose();
        let left = cayley_forward_raw(&u).unwrap();
        assert!(left.max_abs_diff(&right) <= 1e-12);
    }
}

#[test]
fn higher_dimensional_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in 2..=7 {
        for _ in 0..50 {
            let lower: Vec<f64> = (0..n * (n - 1) / 2).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let s = SkewMatrix::from_lower(n, lower).unwrap();
            let u = cayley_inverse(&s);
            assert!(u.orthogonality_residual() <= 1e-12, "n={n}");
            assert!((u.determinant() - 1.0).abs() <= 1e-12);
            let back = cayley_forward(&u).unwrap();
            assert!(back.max_abs_diff(&s) <= 1e-9 * (1.0 + s.to_square().max_abs()).powi(2), "n={n}");
        }
    }
}

#[test]
fn half_turns_are_outside_the_cayley_domain() {
    let r = GibbsVector::pi_rotation(Vector3::new(1.0, 2.0, 2.0)).unwrap();
    assert!(matches!(cayley_forward(&square(&r)), Err(RotationError::SingularCayley { .. })));
    assert!(matches!(skew_from_vector(&r), Err(RotationError::OutOfDomain(_))));
    let mut four = vec![0.0; 16];
    for i in 0..4 {
        four[i * 5] = -1.0;
    }
    let u = SquareMatrix::new(4, four).unwrap();
    assert!(matches!(cayley_forward(&u), Err(RotationError::SingularCayley { .. })));
}

#[test]
fn bridge_triangle_commutes() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..2000 {
        let r = random_rotation(&mut rng, std::f64::consts::PI);
        let m = gibbs_to_matrix(&r);
        let via_q = UnitQuaternion::from_matrix(&m);
        let direct_q = gibbs_to_quaternion(&r);
        for (a, b) in via_q.components().iter().zip(direct_q.components()) {
            assert!((a - b).abs() <= 1e-12);
        }
        let via_aa = axis_angle_to_gibbs(&gibbs_to_axis_angle(&r));
        assert!(gibbs_to_matrix(&via_aa).max_abs_diff(&m) <= 1e-12);
        let via_euler = matrix_to_gibbs(&euler_to_matrix(&matrix_to_euler(&m)));
        assert!(gibbs_to_matrix(&via_euler).max_abs_diff(&m) <= 1e-10);
        assert!(gibbs_to_matrix(&quaternion_to_gibbs(&via_q)).max_abs_diff(&m) <= 1e-12);
    }
}

#[test]
fn quaternion_order_convention() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..500 {
        let (r, s) = (random_rotation(&mut rng, 3.0), random_rotation(&mut rng, 3.0));
        let q = gibbs_to_quaternion(&s) * gibbs_to_quaternion(&r);
        let c = compose(&r, &s);
        assert!(q.to_matrix().max_abs_diff(&gibbs_to_matrix(&c)) <= 1e-12);
        let v = Vector3::new(0.3, -1.0, 2.0);
        assert!(q.rotate(v).distance(c.rotate(v)) <= 1e-12);
    }
}

#[test]
fn named_rotations_agree_across_representations() {
    // quarter turn about z: x goes to y
    let r = GibbsVector::new(0.0, 0.0, 1.0).unwrap();
    let aa = AxisAngle::new(Vector3::Z, std::f64::consts::FRAC_PI_2).unwrap();
    let e = EulerAngles::new(std::f64::consts::FRAC_PI_2, 0.0, 0.0).unwrap();
    assert!(r.rotate(Vector3::X).distance(Vector3::Y) < 1e-15);
    assert!(gibbs_to_matrix(&axis_angle_to_gibbs(&aa)).max_abs_diff(&gibbs_to_matrix(&r)) < 1e-15);
    assert!(euler_to_matrix(&e).max_abs_diff(&gibbs_to_matrix(&r)) < 1e-15);
    assert!(gibbs_to_quaternion(&r).rotate(Vector3::X).distance(Vector3::Y) < 1e-15);
}

#[test]
fn forward_transform_is_antisymmetric_before_cleanup() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..2000 {
        let sq = square(&random_rotation(&mut rng, 3.0));
        let raw = cayley_forward_raw(&sq).unwrap();
        let residual = raw.add(&raw.transpose()).max_abs();
        assert!(residual <= 1e-12 * raw.max_abs().max(1.0), "{residual}");
    }
}

#[test]
fn inverse_transform_is_orthogonal_for_large_entries() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for n in 2..=5 {
        for _ in 0..200 {
            let lower: Vec<f64> = (0..n * (n - 1) / 2).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let u = cayley_inverse(&SkewMatrix::from_lower(n, lower).unwrap());
            assert!(u.orthogonality_residual() <= 1e-12, "n={n}: {}", u.orthogonality_residual());
            assert!((u.determinant() - 1.0).abs() <= 1e-12);
        }
    }
}
