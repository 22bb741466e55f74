// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::Mul;

use crate::error::{Result, RotationError};
use crate::gibbs::{GibbsVector, RotationMatrix3, L};
use crate::vector::{join_reals, Vector3};

/// Real part below which a quaternion is read as a half turn. Reciprocal of
/// [`crate::gibbs::PI_ENCODING_THRESHOLD`].
pub const TOL_W: f64 = 4.0 / L;

/// Unit quaternion `w + xi + yj + zk`, kept in canonical sign: `w >= 0`, and
/// when `w == 0` the first nonzero of `x, y, z` is positive.
///
/// `q` and `-q` are the same rotation, so canonicalization loses nothing
/// about the rotation itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    /// Normalizes and canonicalizes. Zero and NaN are rejected.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let c = [w, x, y, z];
        if c.iter().any(|v| !v.is_finite()) {
            return Err(RotationError::InvalidInput(format!(
                "non-finite quaternion component in ({w}, {x}, {y}, {z})"
            )));
        }
        let m = c.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if m == 0.0 {
            return Err(RotationError::InvalidInput("zero quaternion".into()));
        }
        let s = c.map(|v| v / m);
        let n = s.iter().map(|v| v * v).sum::<f64>().sqrt();
        Ok(canonical(UnitQuaternion {
            w: s[0] / n,
            x: s[1] / n,
            y: s[2] / n,
            z: s[3] / n,
        }))
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn vector_part(&self) -> Vector3 {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn conjugate(&self) -> Self {
        canonical(UnitQuaternion {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        })
    }

    /// Hamilton product without renormalization.
    fn hamilton(a: &Self, b: &Self) -> Self {
        UnitQuaternion {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        }
    }

    /// `q v q*`
    pub fn rotate(&self, v: Vector3) -> Vector3 {
        let u = self.vector_part();
        let t = 2.0 * u.cross(v);
        v + self.w * t + u.cross(t)
    }

    /// Matrix in the crate's row-vector convention (`v·U = q v q*`), i.e.
    /// the transpose of the usual column-vector matrix.
    pub fn to_matrix(&self) -> RotationMatrix3 {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        RotationMatrix3::from_rows_unchecked([
            [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y + w * z), 2.0 * (x * z - w * y)],
            [2.0 * (x * y - w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z + w * x)],
            [2.0 * (x * z + w * y), 2.0 * (y * z - w * x), 1.0 - 2.0 * (x * x + y * y)],
        ])
    }

    /// Shepperd's method: pick the largest of `w², x², y², z²` to divide by.
    pub fn from_matrix(u: &RotationMatrix3) -> Self {
        // column-vector matrix R = Uᵀ
        let r = u.transpose().rows();
        let tr = r[0][0] + r[1][1] + r[2][2];
        let (w, x, y, z);
        if tr >= r[0][0] && tr >= r[1][1] && tr >= r[2][2] {
            let s = 2.0 * (1.0 + tr).sqrt();
            w = 0.25 * s;
            x = (r[2][1] - r[1][2]) / s;
            y = (r[0][2] - r[2][0]) / s;
            z = (r[1][0] - r[0][1]) / s;
        } else if r[0][0] >= r[1][1] && r[0][0] >= r[2][2] {
            let s = 2.0 * (1.0 + r[0][0] - r[1][1] - r[2][2]).sqrt();
            w = (r[2][1] - r[1][2]) / s;
            x = 0.25 * s;
            y = (r[0][1] + r[1][0]) / s;
            z = (r[0][2] + r[2][0]) / s;
        } else if r[1][1] >= r[2][2] {
            let s = 2.0 * (1.0 + r[1][1] - r[0][0] - r[2][2]).sqrt();
            w = (r[0][2] - r[2][0]) / s;
            x = (r[0][1] + r[1][0]) / s;
            y = 0.25 * s;
            z = (r[1][2] + r[2][1]) / s;
        } else {
            let s = 2.0 * (1.0 + r[2][2] - r[0][0] - r[1][1]).sqrt();
            w = (r[1][0] - r[0][1]) / s;
            x = (r[0][2] + r[2][0]) / s;
            y = (r[1][2] + r[2][1]) / s;
            z = 0.25 * s;
        }
        UnitQuaternion::new(w, x, y, z).unwrap_or(UnitQuaternion::IDENTITY)
    }
}

/// Hamilton product. `a * b` applies `b` first.
impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, rhs: UnitQuaternion) -> UnitQuaternion {
        let p = UnitQuaternion::hamilton(&self, &rhs);
        UnitQuaternion::new(p.w, p.x, p.y, p.z).unwrap_or(UnitQuaternion::IDENTITY)
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_reals(&self.components(), ","))
    }
}

/// Sign-canonical representative of `±q`.
pub fn canonical(q: UnitQuaternion) -> UnitQuaternion {
    let flip = if q.w != 0.0 {
        q.w < 0.0
    } else {
        [q.x, q.y, q.z]
            .into_iter()
            .find(|c| *c != 0.0)
            .is_some_and(|c| c < 0.0)
    };
    if flip {
        UnitQuaternion {
            w: -q.w,
            x: -q.x,
            y: -q.y,
            z: -q.z,
        }
    } else {
        // also clears a -0.0 real part
        UnitQuaternion { w: q.w + 0.0, ..q }
    }
}

/// `q ∝ (1, r)`; a half turn becomes `(0, u)`.
pub fn gibbs_to_quaternion(r: &GibbsVector) -> UnitQuaternion {
    let (k, v) = r.homogeneous();
    UnitQuaternion::new(k, v[0], v[1], v[2]).unwrap_or(UnitQuaternion::IDENTITY)
}

/// `r = (x, y, z) / w`, or a half turn along `(x, y, z)` when `|w| <= TOL_W`.
pub fn quaternion_to_gibbs(q: &UnitQuaternion) -> GibbsVector {
    let u = q.vector_part();
    let result = if q.w.abs() > TOL_W {
        GibbsVector::from_vector(u / q.w)
    } else {
        GibbsVector::pi_rotation(u)
    };
    result.unwrap_or(GibbsVector::IDENTITY)
}
