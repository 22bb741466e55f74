// SPDX-License-Identifier: Apache-2.0

//! Conversion and composition timings across representations.
//!
//! Each row times one operation over a seeded corpus and reports the worst
//! round-trip error seen on that corpus. The fastest of [`REPEATS`] passes
//! is kept to damp scheduler noise.

use std::hint::black_box;
use std::time::Instant;

use crate::algebra::compose;
use crate::bridges::{euler_to_matrix, matrix_to_euler, EulerAngles, UnitQuaternion};
use crate::gibbs::{gibbs_to_matrix, matrix_to_gibbs, GibbsVector, RotationMatrix3};
use crate::sample;

pub const HEADER: &str = "operation,representation,iterations,total_ns,ns_per_op,max_roundtrip_err";

pub const REPEATS: usize = 5;

/// Inputs are cycled if `iters` exceeds this.
const CORPUS_MAX: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub operation: &'static str,
    pub representation: &'static str,
    pub iterations: u64,
    pub total_ns: u128,
    pub max_roundtrip_err: f64,
}

impl BenchRow {
    pub fn ns_per_op(&self) -> f64 {
        self.total_ns as f64 / self.iterations as f64
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{:.3},{:e}",
            self.operation,
            self.representation,
            self.iterations,
            self.total_ns,
            self.ns_per_op(),
            self.max_roundtrip_err
        )
    }
}

/// Largest component difference over `|b|` (norm-relative).
pub fn gibbs_err(a: &GibbsVector, b: &GibbsVector) -> f64 {
    let (a, b) = (a.components(), b.components());
    let scale = b.iter().map(|c| c * c).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    (0..3).fold(0.0f64, |m, i| m.max((a[i] - b[i]).abs())) / scale
}

fn quat_err(a: &UnitQuaternion, b: &UnitQuaternion) -> f64 {
    let (a, b) = (a.components(), b.components());
    (0..4).fold(0.0f64, |m, i| m.max((a[i] - b[i]).abs()))
}

fn euler_err(a: &EulerAngles, b: &EulerAngles) -> f64 {
    (a.yaw - b.yaw)
        .abs()
        .max((a.pitch - b.pitch).abs())
        .max((a.roll - b.roll).abs())
}

fn time<T, R>(inputs: &[T], iters: u64, f: impl Fn(&T) -> R) -> u128 {
    (0..REPEATS)
        .map(|_| {
            let start = Instant::now();
            let mut j = 0;
            for _ in 0..iters {
                black_box(f(black_box(&inputs[j])));
                j += 1;
                if j == inputs.len() {
                    j = 0;
                }
            }
            start.elapsed().as_nanos()
        })
        .min()
        .unwrap_or(0)
}

/// Runs the full table. `iters` must be at least 1.
pub fn run(iters: u64, seed: u64) -> Vec<BenchRow> {
    let iters = iters.max(1);
    let n = (iters as usize).min(CORPUS_MAX);
    let mut rng = sample::rng(seed);
    let gibbs: Vec<GibbsVector> = (0..n).map(|_| sample::gibbs_log_uniform(&mut rng, 1e-3, 1e2)).collect();
    let second: Vec<GibbsVector> = (0..n).map(|_| sample::gibbs_log_uniform(&mut rng, 1e-3, 1e2)).collect();
    let matrices: Vec<RotationMatrix3> = gibbs.iter().map(gibbs_to_matrix).collect();
    let quats: Vec<UnitQuaternion> = matrices.iter().map(UnitQuaternion::from_matrix).collect();
    // keep pitch off the gimbal lock so the angle round trip is meaningful
    let eulers: Vec<EulerAngles> = (0..n)
        .map(|_| {
            let u = sample::vector(&mut rng, 1.0);
            EulerAngles::new(3.0 * u.x, 1.5 * u.y, 3.0 * u.z).expect("finite")
        })
        .collect();
    let euler_mats: Vec<RotationMatrix3> = eulers.iter().map(euler_to_matrix).collect();

    let pairs: Vec<(GibbsVector, GibbsVector)> = gibbs.iter().copied().zip(second.iter().copied()).collect();
    let quat_pairs: Vec<(UnitQuaternion, UnitQuaternion)> = pairs
        .iter()
        .map(|(r, s)| (UnitQuaternion::from_matrix(&gibbs_to_matrix(r)), UnitQuaternion::from_matrix(&gibbs_to_matrix(s))))
        .collect();
    let mat_pairs: Vec<(RotationMatrix3, RotationMatrix3)> =
        pairs.iter().map(|(r, s)| (gibbs_to_matrix(r), gibbs_to_matrix(s))).collect();

    let max = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0f64, f64::max);
    let row = |operation, representation, total_ns, max_roundtrip_err| BenchRow {
        operation,
        representation,
        iterations: iters,
        total_ns,
        max_roundtrip_err,
    };

    vec![
        row(
            "gibbs_to_matrix",
            "gibbs",
            time(&gibbs, iters, gibbs_to_matrix),
            max(&mut gibbs.iter().map(|r| gibbs_err(&matrix_to_gibbs(&gibbs_to_matrix(r)), r))),
        ),
        row(
            "matrix_to_gibbs",
            "gibbs",
            time(&matrices, iters, matrix_to_gibbs),
            max(&mut matrices.iter().map(|u| gibbs_to_matrix(&matrix_to_gibbs(u)).max_abs_diff(u))),
        ),
        row(
            "quaternion_to_matrix",
            "quaternion",
            time(&quats, iters, UnitQuaternion::to_matrix),
            max(&mut quats.iter().map(|q| quat_err(&UnitQuaternion::from_matrix(&q.to_matrix()), q))),
        ),
        row(
            "matrix_to_quaternion",
            "quaternion",
            time(&matrices, iters, UnitQuaternion::from_matrix),
            max(&mut matrices.iter().map(|u| UnitQuaternion::from_matrix(u).to_matrix().max_abs_diff(u))),
        ),
        row(
            "euler_to_matrix",
            "euler",
            time(&eulers, iters, euler_to_matrix),
            max(&mut eulers.iter().map(|e| euler_err(&matrix_to_euler(&euler_to_matrix(e)), e))),
        ),
        row(
            "matrix_to_euler",
            "euler",
            time(&euler_mats, iters, matrix_to_euler),
            max(&mut euler_mats.iter().map(|u| euler_to_matrix(&matrix_to_euler(u)).max_abs_diff(u))),
        ),
        row(
            "compose",
            "gibbs",
            time(&pairs, iters, |(r, s)| compose(r, s)),
            max(&mut pairs
                .iter()
                .zip(&mat_pairs)
                .map(|((r, s), (a, b))| gibbs_to_matrix(&compose(r, s)).max_abs_diff(&(*a * *b)))),
        ),
        row(
            "compose",
            "quaternion",
            time(&quat_pairs, iters, |(p, q)| *q * *p),
            max(&mut quat_pairs
                .iter()
                .zip(&mat_pairs)
                .map(|((p, q), (a, b))| (*q * *p).to_matrix().max_abs_diff(&(*a * *b)))),
        ),
        // the reference product itself
        row("compose", "matrix", time(&mat_pairs, iters, |(a, b)| *a * *b), 0.0),
    ]
}
