// SPDX-License-Identifier: Apache-2.0

//! Cross-module oracle checks: each fast path against an independent one.

use rand::Rng;

use crate::algebra::compose;
use crate::alignment::{align_line, align_pair};
use crate::bridges::{
    axis_angle_to_gibbs, euler_to_matrix, gibbs_to_axis_angle, gibbs_to_quaternion, matrix_to_euler,
    quaternion_to_gibbs, EulerAngles, UnitQuaternion,
};
use crate::cayley::{cayley_forward, cayley_inverse, skew_from_vector, vector_from_skew, SquareMatrix};
use crate::gibbs::{gibbs_to_matrix, invert, matrix_to_gibbs, GibbsVector, RotationMatrix3};
use crate::sample;
use crate::vector::Vector3;

use super::bench::gibbs_err;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_err: f64,
    pub tol: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_err <= self.tol
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} max_err={:e} tol={:e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.max_err,
            self.tol
        )
    }
}

fn square(m: &RotationMatrix3) -> SquareMatrix {
    SquareMatrix::from_rows(&m.rows()).expect("3x3")
}

fn square_diff(a: &SquareMatrix, b: &RotationMatrix3) -> f64 {
    a.max_abs_diff(&square(b))
}

/// Runs every check on `samples` random cases drawn from `seed`.
pub fn run(samples: usize, seed: u64) -> Vec<Check> {
    let mut rng = sample::rng(seed);
    let mut checks = Vec::new();
    let mut check = |name, tol, errs: &mut dyn Iterator<Item = f64>| {
        // NaN counts as a failure
        let max_err = errs.fold(0.0f64, |m, e| if e.is_nan() { f64::INFINITY } else { m.max(e) });
        checks.push(Check { name, max_err, tol });
    };

    let rs: Vec<GibbsVector> = (0..samples).map(|_| sample::gibbs_log_uniform(&mut rng, 1e-6, 1e3)).collect();
    check(
        "gibbs_matrix_roundtrip",
        1e-9,
        &mut rs.iter().map(|r| gibbs_err(&matrix_to_gibbs(&gibbs_to_matrix(r)), r)),
    );
    check(
        "matrix_is_orthogonal",
        1e-12,
        &mut rs.iter().map(|r| gibbs_to_matrix(r).diagnostic().orthogonality),
    );
    check(
        "matrix_vs_quaternion",
        1e-12,
        &mut rs.iter().map(|r| gibbs_to_quaternion(r).to_matrix().max_abs_diff(&gibbs_to_matrix(r))),
    );
    check(
        "quaternion_roundtrip",
        1e-9,
        &mut rs.iter().map(|r| gibbs_err(&quaternion_to_gibbs(&gibbs_to_quaternion(r)), r)),
    );
    check(
        "axis_angle_roundtrip",
        1e-9,
        &mut rs.iter().map(|r| gibbs_err(&axis_angle_to_gibbs(&gibbs_to_axis_angle(r)), r)),
    );
    check(
        "inverse_is_transpose",
        1e-12,
        &mut rs.iter().map(|r| gibbs_to_matrix(&invert(r)).max_abs_diff(&gibbs_to_matrix(r).transpose())),
    );

    let half_turns: Vec<Vector3> = (0..samples).map(|_| sample::unit_vector(&mut rng)).collect();
    check(
        "half_turn_matrix_path",
        1e-6,
        &mut half_turns.iter().map(|u| {
            let u = u.to_array();
            let rows: [[f64; 3]; 3] = std::array::from_fn(|i| {
                std::array::from_fn(|j| 2.0 * u[i] * u[j] - if i == j { 1.0 } else { 0.0 })
            });
            let m = RotationMatrix3::from_rows_unchecked(rows);
            let r = matrix_to_gibbs(&m);
            if r.is_pi_encoded() {
                gibbs_to_matrix(&r).max_abs_diff(&m)
            } else {
                f64::INFINITY
            }
        }),
    );

    let moderate: Vec<GibbsVector> = (0..samples).map(|_| sample::gibbs_by_angle(&mut rng, 3.0)).collect();
    check(
        "cayley_forward_oracle",
        1e-10,
        &mut moderate.iter().map(|r| {
            let m = gibbs_to_matrix(r);
            match cayley_forward(&square(&m)).and_then(|s| vector_from_skew(&s)) {
                Ok(v) => gibbs_err(&v, &matrix_to_gibbs(&m)),
                Err(_) => f64::INFINITY,
            }
        }),
    );
    check(
        "cayley_inverse_oracle",
        1e-10,
        &mut moderate.iter().map(|r| match skew_from_vector(r) {
            Ok(s) => square_diff(&cayley_inverse(&s), &gibbs_to_matrix(r)),
            Err(_) => f64::INFINITY,
        }),
    );

    let pairs: Vec<(GibbsVector, GibbsVector)> = (0..samples)
        .map(|_| (sample::gibbs_uniform(&mut rng, 10.0), sample::gibbs_uniform(&mut rng, 10.0)))
        .collect();
    check(
        "compose_vs_matrix",
        1e-10,
        &mut pairs
            .iter()
            .map(|(r, s)| gibbs_to_matrix(&compose(r, s)).max_abs_diff(&(gibbs_to_matrix(r) * gibbs_to_matrix(s)))),
    );
    check(
        "compose_vs_quaternion",
        1e-10,
        &mut pairs.iter().map(|(r, s)| {
            let q = gibbs_to_quaternion(s) * gibbs_to_quaternion(r);
            gibbs_to_matrix(&compose(r, s)).max_abs_diff(&q.to_matrix())
        }),
    );

    let mut line_errs = Vec::with_capacity(samples);
    let mut pair_errs = Vec::with_capacity(samples);
    for _ in 0..samples {
        let rot = sample::gibbs_uniform(&mut rng, 10.0);
        let p1 = sample::vector(&mut rng, 2.0);
        let p2 = sample::vector(&mut rng, 2.0);
        let (q1, q2) = (rot.rotate(p1), rot.rotate(p2));
        let gamma = rng.gen_range(-10.0..=10.0);
        line_errs.push(match align_line(p1, q1, gamma) {
            Ok(r) => r.rotate(p1).distance(q1) / p1.norm(),
            Err(_) => f64::INFINITY,
        });
        pair_errs.push(match align_pair(p1, q1, p2, q2) {
            Ok(r) => (r.rotate(p1).distance(q1) / p1.norm()).max(r.rotate(p2).distance(q2) / p2.norm()),
            Err(_) => f64::INFINITY,
        });
    }
    check("align_line_maps_p_to_q", 1e-9, &mut line_errs.into_iter());
    check("align_pair_maps_both", 1e-9, &mut pair_errs.into_iter());

    let eulers: Vec<EulerAngles> = (0..samples)
        .map(|_| {
            EulerAngles::new(
                rng.gen_range(-3.1..3.1),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-3.1..3.1),
            )
            .expect("finite")
        })
        .collect();
    check(
        "euler_matrix_roundtrip",
        1e-10,
        &mut eulers
            .iter()
            .map(|e| euler_to_matrix(&matrix_to_euler(&euler_to_matrix(e))).max_abs_diff(&euler_to_matrix(e))),
    );
    check(
        "euler_quaternion_gibbs_triangle",
        1e-10,
        &mut eulers.iter().map(|e| {
            let m = euler_to_matrix(e);
            let via_q = gibbs_to_matrix(&quaternion_to_gibbs(&UnitQuaternion::from_matrix(&m)));
            via_q.max_abs_diff(&m)
        }),
    );

    checks
}
