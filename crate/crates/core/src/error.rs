// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::vector::Vector3;

/// Which precondition of the vector-pair solver was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairViolation {
    /// `|p1| != |q1|`
    FirstLengths,
    /// `|p2| != |q2|`
    SecondLengths,
    /// `p1·p2 != q1·q2`
    SubtendedAngle,
    /// A zero-length input vector.
    ZeroVector,
}

impl std::fmt::Display for PairViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PairViolation::FirstLengths => "|p1| and |q1| differ",
            PairViolation::SecondLengths => "|p2| and |q2| differ",
            PairViolation::SubtendedAngle => "angle(p1, p2) and angle(q1, q2) differ",
            PairViolation::ZeroVector => "zero-length input vector",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RotationError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a rotation matrix: orthogonality residual {orthogonality:e}, det deviation {det_deviation:e}")]
    NotARotation { orthogonality: f64, det_deviation: f64 },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: f64, right: f64 },

    /// `q = -p`: every half-turn about an axis in the plane spanned by
    /// `basis` maps `p` onto `q`.
    #[error("antipodal vectors: any half-turn about an axis in span({}, {}) is a solution", basis[0], basis[1])]
    Antipodal { basis: [Vector3; 2] },

    #[error("invalid vector pair: {0}")]
    InvalidPair(PairViolation),

    /// `U + I` is singular; `det` is `|det(U + I)|`.
    #[error("Cayley transform undefined: |det(U + I)| = {det:e}")]
    SingularCayley { det: f64 },

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("frame step {index}: {source}")]
    FrameStep {
        index: usize,
        #[source]
        source: Box<RotationError>,
    },
}

impl RotationError {
    /// Stable machine-readable code, used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            RotationError::InvalidInput(_) => "INVALID_INPUT",
            RotationError::NotARotation { .. } => "NOT_A_ROTATION",
            RotationError::LengthMismatch { .. } => "LENGTH_MISMATCH",
            RotationError::Antipodal { .. } => "ANTIPODAL",
            RotationError::InvalidPair(_) => "INVALID_PAIR",
            RotationError::SingularCayley { .. } => "SINGULAR_CAYLEY",
            RotationError::OutOfDomain(_) => "OUT_OF_DOMAIN",
            RotationError::FrameStep { source, .. } => source.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, RotationError>;
