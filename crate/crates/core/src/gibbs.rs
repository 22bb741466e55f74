// SPDX-License-Identifier: Apache-2.0

//! The Gibbs vector, the rotation matrix, and the fast conversions between
//! them.
//!
//! A rotation by `θ` about the unit axis `u` is the Gibbs vector
//! `r = tan(θ/2) u`. Going from `r` to the matrix `U` and back takes a few
//! dozen additions, multiplications and divisions; see [`crate::kernel`].
//!
//! # Convention
//!
//! Vectors are rows and multiply matrices from the left: the image of `s`
//! under `U` is `s·U`. Under that convention `U(r)` turns vectors by `+θ`
//! about `r` in the right-handed sense. For example `(1,0,0)` is a quarter
//! turn about x, and it maps `(0,1,0)` to `(0,0,1)`. Composition reads
//! left to right, so `compose(r, s)` applies `r` first and has matrix
//! `U(r)·U(s)`.
//!
//! # Half turns
//!
//! A half turn has `|r| = ∞`. It is stored as a vector along the axis whose
//! largest component has magnitude [`L`], the largest finite `f64`. Every
//! vector with `|r| >= PI_ENCODING_THRESHOLD` is read as a half turn about
//! `r/|r|`.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Result, RotationError};
use crate::kernel;
use crate::vector::{join_reals, Vector3};

/// Largest finite value of the working precision.
pub const L: f64 = f64::MAX;

/// `|r|` at or above this is a half turn.
pub const PI_ENCODING_THRESHOLD: f64 = L / 4.0;

/// `1 + trace(U)` at or below this sends matrix-to-vector conversion down
/// the half-turn path.
pub const TOL_PI_TRACE: f64 = 1e-12;

/// Orthogonality / determinant tolerance for matrices coming from outside.
pub const TOL_ORTHO_INPUT: f64 = 1e-9;

/// Orthogonality / determinant tolerance met by matrices we produce.
pub const TOL_ORTHO_OUTPUT: f64 = 1e-12;

/// A rotation as `tan(θ/2)` times its unit axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GibbsVector {
    r: [f64; 3],
}

/// `Σ (c/T)² >= 1`, i.e. `|r| >= T` without a square root or overflow.
fn in_pi_regime(r: &[f64; 3]) -> bool {
    let m = r.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    // |r| <= sqrt(3)·m, so below T/2 the answer is no. Dividing small
    // components by T would produce subnormals, which are very slow.
    if m < 0.5 * PI_ENCODING_THRESHOLD {
        return false;
    }
    let s: f64 = r.iter().map(|c| (c / PI_ENCODING_THRESHOLD).powi(2)).sum();
    s >= 1.0
}

/// Power of two `k` with `max|r|·k` in `[0.5, 1)`, for `max|r| >= 1`.
fn pow2_scale(m: f64) -> f64 {
    let exp = ((m.to_bits() >> 52) & 0x7ff) as i64 - 1023;
    // m in [2^exp, 2^(exp+1)); scale by 2^-(exp+1)
    f64::from_bits(((1023 - exp - 1) as u64) << 52)
}

impl GibbsVector {
    pub const IDENTITY: GibbsVector = GibbsVector { r: [0.0; 3] };

    /// Builds a Gibbs vector. NaN is rejected. Infinite components, or any
    /// vector at or beyond [`PI_ENCODING_THRESHOLD`], become the canonical
    /// half-turn encoding along the same direction.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let r = [x, y, z];
        if r.iter().any(|c| c.is_nan()) {
            return Err(RotationError::InvalidInput(format!(
                "NaN component in Gibbs vector ({x}, {y}, {z})"
            )));
        }
        if r.iter().any(|c| c.is_infinite()) {
            let dir = r.map(|c| if c.is_infinite() { c.signum() } else { 0.0 });
            return Ok(Self::pi_from_direction(dir));
        }
        if in_pi_regime(&r) {
            return Ok(Self::pi_from_direction(r));
        }
        Ok(GibbsVector { r })
    }

    pub fn from_vector(v: Vector3) -> Result<Self> {
        Self::new(v.x, v.y, v.z)
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        Self::new(a[0], a[1], a[2])
    }

    /// The half turn about `axis`.
    pub fn pi_rotation(axis: Vector3) -> Result<Self> {
        if axis.has_nan() || axis.max_abs() == 0.0 {
            return Err(RotationError::InvalidInput(format!(
                "half-turn axis must be nonzero, got {axis}"
            )));
        }
        if !axis.is_finite() {
            return Self::new(axis.x, axis.y, axis.z);
        }
        Ok(Self::pi_from_direction(axis.to_array()))
    }

    // `dir` is finite, nonzero, NaN-free.
    fn pi_from_direction(dir: [f64; 3]) -> Self {
        let m = dir.iter().fold(0.0f64, |a, c| a.max(c.abs()));
        GibbsVector {
            r: dir.map(|c| (c / m) * L),
        }
    }

    pub fn components(&self) -> [f64; 3] {
        self.r
    }

    pub fn as_vector(&self) -> Vector3 {
        Vector3::from_array(self.r)
    }

    pub fn x(&self) -> f64 {
        self.r[0]
    }

    pub fn y(&self) -> f64 {
        self.r[1]
    }

    pub fn z(&self) -> f64 {
        self.r[2]
    }

    pub fn is_pi_encoded(&self) -> bool {
        in_pi_regime(&self.r)
    }

    pub fn is_identity(&self) -> bool {
        self.r == [0.0; 3]
    }

    /// `|r| = tan(θ/2)`; infinite for a half turn.
    pub fn norm(&self) -> f64 {
        if self.is_pi_encoded() {
            f64::INFINITY
        } else {
            self.as_vector().norm()
        }
    }

    /// Unit rotation axis, `None` for the identity.
    pub fn axis(&self) -> Option<Vector3> {
        self.as_vector().normalized()
    }

    /// Rotation angle in `[0, π]`.
    pub fn angle(&self) -> f64 {
        if self.is_pi_encoded() {
            std::f64::consts::PI
        } else {
            2.0 * self.norm().atan()
        }
    }

    pub fn to_matrix(&self) -> RotationMatrix3 {
        gibbs_to_matrix(self)
    }

    pub fn from_matrix(u: &RotationMatrix3) -> Self {
        matrix_to_gibbs(u)
    }

    pub fn rotate(&self, s: Vector3) -> Vector3 {
        rotate_vector(self, s)
    }

    pub fn inverse(&self) -> Self {
        invert(self)
    }

    /// Largest absolute component; cheap scale for tolerances.
    pub(crate) fn max_abs(&self) -> f64 {
        self.r.iter().fold(0.0f64, |a, c| a.max(c.abs()))
    }

    /// Homogeneous form `(k, v)` with `r = v / k` and all entries of
    /// moderate size. Half turns get `k = 0`.
    pub(crate) fn homogeneous(&self) -> (f64, [f64; 3]) {
        let m = self.max_abs();
        if self.is_pi_encoded() {
            (0.0, self.r.map(|c| c / m))
        } else if m >= 1.0 {
            let k = pow2_scale(m);
            (k, self.r.map(|c| c * k))
        } else {
            (1.0, self.r)
        }
    }
}

impl Neg for GibbsVector {
    type Output = GibbsVector;
    fn neg(self) -> GibbsVector {
        invert(&self)
    }
}

impl fmt::Display for GibbsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pi_encoded() {
            let u = self.axis().unwrap_or(Vector3::X);
            write!(f, "pi-rotation axis={}", join_reals(&u.to_array(), ","))
        } else {
            f.write_str(&join_reals(&self.r, ","))
        }
    }
}

/// Orthogonality and determinant residuals of a 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationDiagnostic {
    /// `max |(UᵀU - I)_ij|`
    pub orthogonality: f64,
    /// `|det U - 1|`
    pub det_deviation: f64,
}

impl RotationDiagnostic {
    pub fn of(m: &[[f64; 3]; 3]) -> Self {
        let mut orth = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let g: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
                let e = if i == j { g - 1.0 } else { g };
                orth = orth.max(e.abs());
            }
        }
        RotationDiagnostic {
            orthogonality: orth,
            det_deviation: (det3(m) - 1.0).abs(),
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.orthogonality <= tol && self.det_deviation <= tol
    }
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Checks `UᵀU = I` and `det U = +1` entrywise at `tol`.
pub fn is_rotation_matrix(m: &[[f64; 3]; 3], tol: f64) -> Result<(bool, RotationDiagnostic)> {
    if m.iter().flatten().any(|c| c.is_nan()) {
        return Err(RotationError::InvalidInput("NaN entry in matrix".into()));
    }
    let d = RotationDiagnostic::of(m);
    Ok((d.passes(tol), d))
}

/// A 3×3 proper orthogonal matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix3 {
    m: [[f64; 3]; 3],
}

impl RotationMatrix3 {
    pub const IDENTITY: RotationMatrix3 = RotationMatrix3 {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Validates at [`TOL_ORTHO_INPUT`].
    pub fn new(rows: [[f64; 3]; 3]) -> Result<Self> {
        Self::with_tolerance(rows, TOL_ORTHO_INPUT)
    }

    pub fn with_tolerance(rows: [[f64; 3]; 3], tol: f64) -> Result<Self> {
        if rows.iter().flatten().any(|c| !c.is_finite()) {
            return Err(RotationError::InvalidInput("non-finite entry in matrix".into()));
        }
        let (ok, d) = is_rotation_matrix(&rows, tol)?;
        if !ok {
            return Err(RotationError::NotARotation {
                orthogonality: d.orthogonality,
                det_deviation: d.det_deviation,
            });
        }
        Ok(RotationMatrix3 { m: rows })
    }

    /// Wraps `rows` without checking. The caller vouches for orthogonality.
    pub fn from_rows_unchecked(rows: [[f64; 3]; 3]) -> Self {
        RotationMatrix3 { m: rows }
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        RotationMatrix3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| m[j][i])),
        }
    }

    /// `v·U`: the image of `v` under this rotation.
    pub fn transform(&self, v: Vector3) -> Vector3 {
        let m = &self.m;
        Vector3::new(
            v.x * m[0][0] + v.y * m[1][0] + v.z * m[2][0],
            v.x * m[0][1] + v.y * m[1][1] + v.z * m[2][1],
            v.x * m[0][2] + v.y * m[1][2] + v.z * m[2][2],
        )
    }

    pub fn diagnostic(&self) -> RotationDiagnostic {
        RotationDiagnostic::of(&self.m)
    }

    pub fn max_abs_diff(&self, other: &RotationMatrix3) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .fold(0.0f64, |a, (x, y)| a.max((x - y).abs()))
    }
}

impl Mul for RotationMatrix3 {
    type Output = RotationMatrix3;
    fn mul(self, rhs: RotationMatrix3) -> RotationMatrix3 {
        RotationMatrix3 {
            m: kernel::mat_mul(&self.m, &rhs.m),
        }
    }
}

impl fmt::Display for RotationMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(&join_reals(row, ","))?;
        }
        Ok(())
    }
}

/// `U_ij = ((1 - r·r) δ_ij + 2 r_i r_j + 2 ε_ijk r_k) / (1 + r·r)`.
///
/// Large vectors are rescaled by an exact power of two first, and half turns
/// use the limit `2 u uᵀ - I`. No square root or trigonometric call on any
/// path.
pub fn gibbs_to_matrix(r: &GibbsVector) -> RotationMatrix3 {
    let (k, v) = r.homogeneous();
    RotationMatrix3 {
        m: kernel::matrix_from_scaled(&v, &k),
    }
}

/// Inverse of [`gibbs_to_matrix`] with the default [`TOL_PI_TRACE`].
pub fn matrix_to_gibbs(u: &RotationMatrix3) -> GibbsVector {
    matrix_to_gibbs_with(u, TOL_PI_TRACE)
}

/// `r_i = ε_ijk U_jk / (1 + U_kk)` when `1 + trace(U) > pi_trace_tol`.
///
/// Otherwise `U` is (numerically) a half turn and the axis is read from the
/// column `K` holding the largest diagonal entry (lowest index on ties):
/// `r_i ∝ (δ_iK + (U_iK + U_Ki)/2) / (1 + U_KK)`, scaled so its largest component is
/// [`L`].
pub fn matrix_to_gibbs_with(u: &RotationMatrix3, pi_trace_tol: f64) -> GibbsVector {
    let (num, den) = kernel::gibbs_parts_from_matrix(&u.m);
    if den > pi_trace_tol {
        let r = num.map(|n| n / den);
        return GibbsVector::new(r[0], r[1], r[2]).unwrap_or_else(|_| half_turn_from_matrix(u));
    }
    half_turn_from_matrix(u)
}

fn half_turn_from_matrix(u: &RotationMatrix3) -> GibbsVector {
    let m = &u.m;
    let mut k = 0;
    for i in 1..3 {
        if m[i][i] > m[k][k] {
            k = i;
        }
    }
    let d = 1.0 + m[k][k];
    // Column K of U + I, symmetrized. Identical for an exact half turn; just
    // short of one it drops the sin-sized antisymmetric part, which would
    // otherwise tilt the axis.
    let dir: [f64; 3] = std::array::from_fn(|i| {
        if i == k {
            1.0
        } else {
            0.5 * (m[i][k] + m[k][i]) / d
        }
    });
    GibbsVector::pi_from_direction(dir)
}

/// Image of `s` under the rotation `r`, i.e. `s·U(r)`.
pub fn rotate_vector(r: &GibbsVector, s: Vector3) -> Vector3 {
    gibbs_to_matrix(r).transform(s)
}

/// The inverse rotation, `-r`.
pub fn invert(r: &GibbsVector) -> GibbsVector {
    GibbsVector { r: r.r.map(|c| -c) }
}
