// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Result, RotationError};
use crate::gibbs::GibbsVector;
use crate::vector::{join_reals, Vector3};

/// Unit axis and an angle in `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    axis: Vector3,
    angle: f64,
}

/// Axis reported for the identity rotation, which has none.
pub const IDENTITY_AXIS: Vector3 = Vector3::Z;

fn wrap_angle(a: f64) -> f64 {
    let mut t = a.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    // rem_euclid maps -π to π already; keep (−π, π]
    if t <= -PI {
        t += 2.0 * PI;
    }
    t
}

impl AxisAngle {
    /// Normalizes `axis` and wraps `angle` into `(-π, π]`.
    pub fn new(axis: Vector3, angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(RotationError::InvalidInput(format!("angle must be finite, got {angle}")));
        }
        let axis = axis
            .normalized()
            .filter(|_| !axis.has_nan())
            .ok_or_else(|| RotationError::InvalidInput(format!("axis must be a nonzero vector, got {axis}")))?;
        Ok(AxisAngle {
            axis,
            angle: wrap_angle(angle),
        })
    }

    pub fn axis(&self) -> Vector3 {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// `angle · axis`: the representation whose length is the angle itself.
    pub fn rotation_vector(&self) -> Vector3 {
        self.axis * self.angle
    }

    pub fn from_rotation_vector(v: Vector3) -> Result<Self> {
        match v.normalized() {
            Some(axis) if !v.has_nan() => AxisAngle::new(axis, v.norm()),
            _ if v == Vector3::ZERO => Ok(AxisAngle {
                axis: IDENTITY_AXIS,
                angle: 0.0,
            }),
            _ => Err(RotationError::InvalidInput(format!("bad rotation vector {v}"))),
        }
    }
}

impl fmt::Display for AxisAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_reals(&[self.axis.x, self.axis.y, self.axis.z, self.angle], ","))
    }
}

/// `axis = r/|r|`, `angle = 2 atan |r|`, in `[0, π]`.
pub fn gibbs_to_axis_angle(r: &GibbsVector) -> AxisAngle {
    match r.axis() {
        None => AxisAngle {
            axis: IDENTITY_AXIS,
            angle: 0.0,
        },
        Some(axis) => AxisAngle { axis, angle: r.angle() },
    }
}

/// `r = tan(angle/2) · axis`; `|angle| = π` gives the half-turn encoding.
pub fn axis_angle_to_gibbs(a: &AxisAngle) -> GibbsVector {
    let result = if a.angle.abs() >= PI {
        GibbsVector::pi_rotation(a.axis)
    } else {
        GibbsVector::from_vector(a.axis * (0.5 * a.angle).tan())
    };
    result.unwrap_or(GibbsVector::IDENTITY)
}
