// SPDX-License-Identifier: Apache-2.0

//! Rotations fixed by geometric constraints.
//!
//! Every rotation carrying `p` onto `q` (same length) has an axis in the
//! plane bisecting `p` and `q`. In Gibbs form the whole family is a straight
//! line:
//!
//! ```text
//! r(γ) = (p × q + γ (p + q)) / (p · (p + q))
//! ```
//!
//! A second pair `p2 → q2` picks the member orthogonal to `p2 - q2`:
//!
//! ```text
//! γ = -((p1 × q1) · (p2 - q2)) / ((p1 + q1) · (p2 - q2))
//! ```

use crate::algebra::compose;
use crate::error::{PairViolation, Result, RotationError};
use crate::gibbs::GibbsVector;
use crate::kernel;
use crate::vector::Vector3;

/// Relative tolerance on lengths and angles of inputs.
pub const TOL_LEN: f64 = 1e-9;

/// If the textbook second pair conditions `γ` at least this well, use it
/// even if the cross-product pair would be better.
const PREFERRED_SCORE: f64 = 1e-3;

/// The straight line of Gibbs vectors mapping `p` onto `q`.
///
/// Every finite `γ` is a solution. As `γ → ±∞` the members approach the half
/// turn about `p + q`, which [`AlignmentLine::at`] returns for infinite `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentLine {
    base: GibbsVector,
    direction: Vector3,
}

impl AlignmentLine {
    /// The `γ = 0` member, `p × q / (p·(p + q))`. It is the smallest
    /// rotation in the family.
    pub fn base(&self) -> GibbsVector {
        self.base
    }

    /// Coefficient of `γ`: `(p + q) / (p·(p + q))`.
    pub fn direction(&self) -> Vector3 {
        self.direction
    }

    pub fn at(&self, gamma: f64) -> Result<GibbsVector> {
        if gamma.is_nan() {
            return Err(RotationError::InvalidInput("γ is NaN".into()));
        }
        if gamma.is_infinite() {
            return self.limit();
        }
        let v = self.base.as_vector() + self.direction * gamma;
        if v.is_finite() {
            GibbsVector::from_vector(v)
        } else {
            // |γ| so large the sum overflowed: that is the limit member
            GibbsVector::pi_rotation(self.direction * gamma.signum())
        }
    }

    /// The half turn about `p + q`.
    pub fn limit(&self) -> Result<GibbsVector> {
        GibbsVector::pi_rotation(self.direction)
    }
}

fn check_vector(v: Vector3, what: &str) -> Result<f64> {
    if !v.is_finite() {
        return Err(RotationError::InvalidInput(format!("{what} must be finite, got {v}")));
    }
    Ok(v.norm())
}

fn lengths_match(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.max(b)
}

/// Orthonormal basis of the plane perpendicular to `p`.
fn perpendicular_basis(p: Vector3) -> [Vector3; 2] {
    let e1 = p.any_orthogonal();
    let e2 = p.normalized().unwrap_or(Vector3::Z).cross(e1);
    [e1, e2]
}

/// All rotations taking `p` to `q`, with [`TOL_LEN`].
pub fn solution_line(p: Vector3, q: Vector3) -> Result<AlignmentLine> {
    solution_line_with(p, q, TOL_LEN)
}

pub fn solution_line_with(p: Vector3, q: Vector3, tol: f64) -> Result<AlignmentLine> {
    let np = check_vector(p, "p")?;
    let nq = check_vector(q, "q")?;
    if np == 0.0 || nq == 0.0 {
        return Err(RotationError::InvalidInput("p and q must be nonzero".into()));
    }
    if !lengths_match(np, nq, tol) {
        return Err(RotationError::LengthMismatch { left: np, right: nq });
    }
    let (w, s, den) = kernel::alignment_parts(&p.to_array(), &q.to_array());
    if den <= tol * np * np {
        return Err(RotationError::Antipodal {
            basis: perpendicular_basis(p),
        });
    }
    Ok(AlignmentLine {
        base: GibbsVector::from_vector(Vector3::from(w) / den)?,
        direction: Vector3::from(s) / den,
    })
}

/// The member `γ` of the family taking `p` to `q`.
pub fn align_line(p: Vector3, q: Vector3, gamma: f64) -> Result<GibbsVector> {
    solution_line(p, q)?.at(gamma)
}

/// The rotation taking `p1 → q1` and `p2 → q2`, with [`TOL_LEN`].
pub fn align_pair(p1: Vector3, q1: Vector3, p2: Vector3, q2: Vector3) -> Result<GibbsVector> {
    align_pair_with(p1, q1, p2, q2, TOL_LEN)
}

/// Validated vector-pair alignment.
///
/// Inputs must be consistent with some rotation: `|p1| = |q1|`,
/// `|p2| = |q2|` and `p1·p2 = q1·q2`, each within `tol` relative. Otherwise
/// the result is [`RotationError::InvalidPair`] naming the failed condition.
///
/// Degenerate configurations where the textbook `γ` is `0/0` are resolved
/// as follows:
/// - both pairs fixed: the identity;
/// - `p1 ∥ p2`: the rotation is not unique and the smallest one is returned;
/// - `p1 → q1` antipodal: the pairs swap roles;
/// - `p2 = q2`, or `p1 - q1 ∥ p2 - q2`: `γ` is taken from the pair
///   `p1 × p2 → q1 × q2` instead, which any valid rotation also satisfies;
/// - vanishing denominator with a nonzero numerator: the half turn about
///   `p1 + q1`.
pub fn align_pair_with(p1: Vector3, q1: Vector3, p2: Vector3, q2: Vector3, tol: f64) -> Result<GibbsVector> {
    let np1 = check_vector(p1, "p1")?;
    let nq1 = check_vector(q1, "q1")?;
    let np2 = check_vector(p2, "p2")?;
    let nq2 = check_vector(q2, "q2")?;
    if [np1, nq1, np2, nq2].contains(&0.0) {
        return Err(RotationError::InvalidPair(PairViolation::ZeroVector));
    }
    if !lengths_match(np1, nq1, tol) {
        return Err(RotationError::InvalidPair(PairViolation::FirstLengths));
    }
    if !lengths_match(np2, nq2, tol) {
        return Err(RotationError::InvalidPair(PairViolation::SecondLengths));
    }
    if (p1.dot(p2) - q1.dot(q2)).abs() > tol * np1 * np2 {
        return Err(RotationError::InvalidPair(PairViolation::SubtendedAngle));
    }

    let fixed1 = (p1 - q1).norm() <= tol * np1;
    let fixed2 = (p2 - q2).norm() <= tol * np2;
    if fixed1 && fixed2 {
        return Ok(GibbsVector::IDENTITY);
    }

    // cosine-like closeness to antipodal, in [0, 2]
    let c1 = p1.dot(p1 + q1) / (np1 * np1);
    let c2 = p2.dot(p2 + q2) / (np2 * np2);

    if p1.cross(p2).norm() <= tol * np1 * np2 {
        // p2 is a multiple of p1; only the first pair matters
        return match solution_line_with(p1, q1, tol) {
            Ok(line) => Ok(line.base()),
            Err(RotationError::Antipodal { basis }) => GibbsVector::pi_rotation(basis[0]),
            Err(e) => Err(e),
        };
    }

    // The line comes from a pair that moves, preferring the one further
    // from antipodal.
    let first_is_line = !fixed1 && (fixed2 || c1 >= 0.25 || c1 >= c2);
    let ((a, b), (c, d), ca) = if first_is_line {
        ((p1, q1), (p2, q2), c1)
    } else {
        ((p2, q2), (p1, q1), c2)
    };
    if ca <= tol {
        let other_fixed = if first_is_line { fixed2 } else { fixed1 };
        return if other_fixed {
            // half turn about the fixed vector
            GibbsVector::pi_rotation(c)
        } else {
            // both pairs reversed: half turn about the common normal
            GibbsVector::pi_rotation(p1.cross(p2))
        };
    }

    let line = solution_line_with(a, b, tol)?;
    let s = a + b;
    let w = a.cross(b);
    let ns = s.norm();

    struct Candidate {
        score: f64,
        num: f64,
        den: f64,
    }
    let candidates: Vec<Candidate> = [(c, d), (a.cross(c), b.cross(d))]
        .into_iter()
        .filter_map(|(e, f)| {
            let diff = e - f;
            let nd = diff.norm();
            if nd <= tol * e.norm() {
                return None;
            }
            let den = s.dot(diff);
            Some(Candidate {
                score: den.abs() / (ns * nd),
                num: -w.dot(diff),
                den,
            })
        })
        .collect();

    let chosen = candidates
        .first()
        .filter(|cand| cand.score >= PREFERRED_SCORE)
        .or_else(|| candidates.iter().max_by(|x, y| x.score.total_cmp(&y.score)));

    match chosen {
        Some(cand) if cand.score > tol => line.at(cand.num / cand.den),
        _ => line.limit(),
    }
}

/// The raw vector-pair formula with no validation or degenerate-case
/// handling. On inconsistent inputs it still returns *a* vector, which will
/// generally not map either pair. Fails only when the formula is `0/0`.
pub fn align_pair_unchecked(p1: Vector3, q1: Vector3, p2: Vector3, q2: Vector3) -> Result<GibbsVector> {
    let s = p1 + q1;
    let w = p1.cross(q1);
    let diff = p2 - q2;
    let gamma = -w.dot(diff) / s.dot(diff);
    let r = (w + s * gamma) / p1.dot(s);
    if r.has_nan() {
        return Err(RotationError::InvalidInput(
            "vector-pair formula is 0/0 for these inputs".into(),
        ));
    }
    GibbsVector::from_vector(r)
}

/// A moving frame sample: curve tangent and a normal (e.g. curvature
/// direction). Neither needs to be unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub tangent: Vector3,
    pub normal: Vector3,
}

impl Frame {
    pub fn new(tangent: Vector3, normal: Vector3) -> Self {
        Frame { tangent, normal }
    }

    /// Unit tangent and the unit normal re-orthogonalized against it.
    pub fn orthonormalized(&self) -> Result<(Vector3, Vector3)> {
        let t = self
            .tangent
            .normalized()
            .filter(|_| self.tangent.is_finite())
            .ok_or_else(|| RotationError::InvalidInput(format!("bad tangent {}", self.tangent)))?;
        if !self.normal.is_finite() {
            return Err(RotationError::InvalidInput(format!("bad normal {}", self.normal)));
        }
        let n = self.normal - t * self.normal.dot(t);
        if n.norm() <= 1e-12 * self.normal.norm() {
            return Err(RotationError::InvalidInput("normal is parallel to tangent".into()));
        }
        let n = n
            .normalized()
            .ok_or_else(|| RotationError::InvalidInput("normal is zero".into()))?;
        Ok((t, n))
    }
}

/// Rotations along a sequence of frames.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameTransport {
    /// `steps[i]` carries frame `i` onto frame `i + 1`.
    pub steps: Vec<GibbsVector>,
    /// `cumulative[i]` carries frame 0 onto frame `i`; `cumulative[0]` is the
    /// identity.
    pub cumulative: Vec<GibbsVector>,
}

/// Solves each consecutive frame pair with [`align_pair`] and accumulates
/// the result by composition.
pub fn frame_transport(frames: &[Frame]) -> Result<FrameTransport> {
    if frames.is_empty() {
        return Err(RotationError::InvalidInput("no frames".into()));
    }
    let unit: Vec<(Vector3, Vector3)> = frames
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.orthonormalized().map_err(|e| RotationError::FrameStep {
                index: i,
                source: Box::new(e),
            })
        })
        .collect::<Result<_>>()?;

    let mut steps = Vec::with_capacity(frames.len() - 1);
    let mut cumulative = Vec::with_capacity(frames.len());
    cumulative.push(GibbsVector::IDENTITY);
    for (i, pair) in unit.windows(2).enumerate() {
        let ((t0, n0), (t1, n1)) = (pair[0], pair[1]);
        let step = align_pair(t0, t1, n0, n1).map_err(|e| RotationError::FrameStep {
            index: i,
            source: Box::new(e),
        })?;
        let last = cumulative[i];
        cumulative.push(compose(&last, &step));
        steps.push(step);
    }
    Ok(FrameTransport { steps, cumulative })
}
