// SPDX-License-Identifier: Apache-2.0

//! Rotations in three dimensions represented by the Gibbs (Rodrigues) vector
//! `r = tan(θ/2)·axis`.
//!
//! - [`gibbs`]: the vector and matrix types, conversion both ways using only
//!   `+ - × ÷`, vector rotation, inversion, and half-turn handling.
//! - [`algebra`]: composing rotations without going through matrices.
//! - [`alignment`]: rotations that carry one vector, or a pair of vectors,
//!   onto another; frame transport along a curve.
//! - [`cayley`]: the N-dimensional Cayley transform, as a reference path.
//! - [`bridges`]: quaternions, axis-angle and Euler angles.
//! - [`sweep`]: sweeping a profile along a polyline into a tube mesh.
//! - [`cli`]: the `gibbs` command line tool.
//!
//! Vectors are rows: the image of `s` under `U` is `s·U`. See [`gibbs`] for
//! what that means for handedness and composition order.
//!
//! ```
//! use gibbs::{compose, GibbsVector, Vector3};
//!
//! let quarter_x = GibbsVector::new(1.0, 0.0, 0.0)?;
//! assert_eq!(quarter_x.rotate(Vector3::Y), Vector3::Z);
//!
//! let half_x = compose(&quarter_x, &quarter_x);
//! assert!(half_x.is_pi_encoded());
//! # Ok::<(), gibbs::RotationError>(())
//! ```

pub mod algebra;
pub mod alignment;
pub mod bridges;
pub mod cayley;
pub mod cli;
pub mod error;
pub mod gibbs;
pub mod kernel;
pub mod sample;
pub mod sweep;
pub mod vector;

pub use algebra::{compose, compose_sequence};
pub use alignment::{align_line, align_pair, frame_transport, AlignmentLine, Frame, FrameTransport};
pub use bridges::{AxisAngle, EulerAngles, UnitQuaternion};
pub use cayley::{SkewMatrix, SquareMatrix};
pub use error::{PairViolation, Result, RotationError};
pub use gibbs::{
    gibbs_to_matrix, invert, is_rotation_matrix, matrix_to_gibbs, rotate_vector, GibbsVector,
    RotationDiagnostic, RotationMatrix3,
};
pub use vector::{Real, Vector3};
