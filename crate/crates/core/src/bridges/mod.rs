// SPDX-License-Identifier: Apache-2.0

//! Conversions between Gibbs vectors and the other common representations.
//!
//! The quaternion of a Gibbs vector `r` is `(1, r)/sqrt(1 + |r|²)`, so `r` is
//! the ratio of imaginary to real part. The axis-angle form has
//! `|r| = tan(angle/2)`. Euler angles are here as a comparison baseline.
//!
//! All matrices use the crate's row-vector convention (see [`crate::gibbs`]).

pub mod axis_angle;
pub mod euler;
pub mod quaternion;

pub use axis_angle::{axis_angle_to_gibbs, gibbs_to_axis_angle, AxisAngle};
pub use euler::{euler_to_matrix, matrix_to_euler, EulerAngles};
pub use quaternion::{canonical, gibbs_to_quaternion, quaternion_to_gibbs, UnitQuaternion};
