// SPDX-License-Identifier: Apache-2.0

//! Composition of rotations directly in Gibbs-vector form.
//!
//! `compose(r, s)` is the rotation "first `r`, then `s`":
//!
//! ```text
//! r ⊗ s = (r + s - r × s) / (1 - r·s)
//! ```
//!
//! and `U(r ⊗ s) = U(r)·U(s)`. In quaternion terms (Hamilton product,
//! `q(r) ∝ (1, r)`) it is `q(s)·q(r)`.

use crate::error::{Result, RotationError};
use crate::gibbs::{gibbs_to_matrix, matrix_to_gibbs, GibbsVector};
use crate::kernel;

/// Relative size of `1 - r·s` below which the composite is a half turn.
pub const TOL_COMPOSE_SING: f64 = 1e-12;

/// `r` followed by `s`.
///
/// When `1 - r·s` vanishes (relative to `sqrt((1+|r|²)(1+|s|²))`, the
/// quaternion-norm scale) the composite is a half turn along the numerator.
/// Half-turn operands go through the matrix product instead.
pub fn compose(r: &GibbsVector, s: &GibbsVector) -> GibbsVector {
    if r.is_pi_encoded() || s.is_pi_encoded() {
        return compose_via_matrix(r, s);
    }
    let (kr, vr) = r.homogeneous();
    let (ks, vs) = s.homogeneous();
    let (w, n) = kernel::compose_scaled(&kr, &vr, &ks, &vs);

    let sq = |k: f64, v: &[f64; 3]| k * k + v.iter().map(|c| c * c).sum::<f64>();
    let scale = sq(kr, &vr) * sq(ks, &vs);
    let tol2 = TOL_COMPOSE_SING * TOL_COMPOSE_SING;
    if w * w <= tol2 * scale {
        let nn: f64 = n.iter().map(|c| c * c).sum();
        if nn <= tol2 * scale {
            return compose_via_matrix(r, s);
        }
        return GibbsVector::pi_rotation(n.into()).unwrap_or_else(|_| compose_via_matrix(r, s));
    }
    let out = n.map(|c| c / w);
    GibbsVector::new(out[0], out[1], out[2]).unwrap_or_else(|_| compose_via_matrix(r, s))
}

fn compose_via_matrix(r: &GibbsVector, s: &GibbsVector) -> GibbsVector {
    matrix_to_gibbs(&(gibbs_to_matrix(r) * gibbs_to_matrix(s)))
}

/// Left fold of [`compose`]: the first rotation in the list acts first.
pub fn compose_sequence(rotations: &[GibbsVector]) -> Result<GibbsVector> {
    let (first, rest) = rotations
        .split_first()
        .ok_or_else(|| RotationError::InvalidInput("cannot compose an empty sequence".into()))?;
    Ok(rest.iter().fold(*first, |acc, r| compose(&acc, r)))
}
