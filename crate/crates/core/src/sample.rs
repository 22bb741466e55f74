// SPDX-License-Identifier: Apache-2.0

//! Seeded random corpora for the benchmark and self-test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gibbs::GibbsVector;
use crate::vector::Vector3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the unit sphere (rejection from the cube).
pub fn unit_vector<R: Rng>(rng: &mut R) -> Vector3 {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n2 = v.norm_squared();
        if n2 > 1e-6 && n2 <= 1.0 {
            return v / n2.sqrt();
        }
    }
}

/// Random direction, `|r|` log-uniform in `[lo, hi]`.
pub fn gibbs_log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> GibbsVector {
    let mag = (rng.gen_range(lo.ln()..=hi.ln())).exp();
    GibbsVector::from_vector(unit_vector(rng) * mag).expect("finite sample")
}

/// Random direction, `|r|` uniform in `[0, hi]`.
pub fn gibbs_uniform<R: Rng>(rng: &mut R, hi: f64) -> GibbsVector {
    let mag = rng.gen_range(0.0..=hi);
    GibbsVector::from_vector(unit_vector(rng) * mag).expect("finite sample")
}

/// Random rotation angle in `[0, max_angle]` about a random axis.
pub fn gibbs_by_angle<R: Rng>(rng: &mut R, max_angle: f64) -> GibbsVector {
    let angle = rng.gen_range(0.0..=max_angle);
    GibbsVector::from_vector(unit_vector(rng) * (0.5 * angle).tan()).expect("finite sample")
}

/// Random vector with each coordinate in `[-scale, scale]`.
pub fn vector<R: Rng>(rng: &mut R, scale: f64) -> Vector3 {
    Vector3::new(
        rng.gen_range(-scale..=scale),
        rng.gen_range(-scale..=scale),
        rng.gen_range(-scale..=scale),
    )
}
