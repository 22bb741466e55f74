// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Result, RotationError};
use crate::gibbs::RotationMatrix3;
use crate::vector::join_reals;

/// `cos(pitch)` below which the decomposition is treated as gimbal-locked.
pub const GIMBAL_TOL: f64 = 1e-10;

/// Intrinsic z-y-x Euler angles: yaw about z, then pitch about the new y,
/// then roll about the newest x.
///
/// Ranges: yaw and roll in `(-π, π]`, pitch in `[-π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    pub yaw: f64,
    pub pitch: f64,
    pub roll: f64,
}

impl EulerAngles {
    pub fn new(yaw: f64, pitch: f64, roll: f64) -> Result<Self> {
        if !(yaw.is_finite() && pitch.is_finite() && roll.is_finite()) {
            return Err(RotationError::InvalidInput("Euler angles must be finite".into()));
        }
        Ok(EulerAngles { yaw, pitch, roll })
    }
}

impl fmt::Display for EulerAngles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_reals(&[self.yaw, self.pitch, self.roll], ","))
    }
}

fn to_half_open(a: f64) -> f64 {
    if a <= -PI {
        a + 2.0 * PI
    } else {
        a
    }
}

/// `Rz(yaw)·Ry(pitch)·Rx(roll)` in column-vector form, returned transposed
/// to match the crate's row-vector convention.
pub fn euler_to_matrix(e: &EulerAngles) -> RotationMatrix3 {
    let (sy, cy) = e.yaw.sin_cos();
    let (sp, cp) = e.pitch.sin_cos();
    let (sr, cr) = e.roll.sin_cos();
    // column-vector R, written out
    let r = [
        [cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr],
        [sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr],
        [-sp, cp * sr, cp * cr],
    ];
    RotationMatrix3::from_rows_unchecked(r).transpose()
}

/// Inverse of [`euler_to_matrix`]. At gimbal lock (`|pitch| = π/2`) roll is
/// set to zero and the remaining freedom goes into yaw.
pub fn matrix_to_euler(u: &RotationMatrix3) -> EulerAngles {
    let r = u.transpose().rows();
    let cp = r[0][0].hypot(r[1][0]);
    let pitch = (-r[2][0]).atan2(cp);
    let (yaw, roll) = if cp > GIMBAL_TOL {
        (r[1][0].atan2(r[0][0]), r[2][1].atan2(r[2][2]))
    } else {
        ((-r[0][1]).atan2(r[1][1]), 0.0)
    };
    EulerAngles {
        yaw: to_half_open(yaw),
        pitch,
        roll: to_half_open(roll),
    }
}
