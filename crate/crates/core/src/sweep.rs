// SPDX-License-Identifier: Apache-2.0

//! Sweeping a closed profile along a polyline.
//!
//! Frames are estimated from the polyline (central-difference tangents,
//! curvature normals), [`frame_transport`] turns them into rotations, and
//! the profile is carried along by the cumulative rotation at each sample.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::alignment::{frame_transport, Frame, FrameTransport};
use crate::error::{Result, RotationError};
use crate::vector::{join_reals, Vector3};

/// Curvature below this (relative to the tangent change scale) counts as a
/// straight segment.
const STRAIGHT_TOL: f64 = 1e-9;

/// Points closer than this (relative to polyline extent) are the same.
const CLOSE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<Vector3>,
    /// Last point connects back to the first.
    pub closed: bool,
}

impl Polyline {
    /// A polyline whose last point repeats the first is treated as closed,
    /// and the duplicate is dropped.
    pub fn new(mut points: Vec<Vector3>) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(RotationError::InvalidInput("non-finite polyline point".into()));
        }
        let extent = points.iter().fold(0.0f64, |a, p| a.max(p.max_abs()));
        let closed = points.len() > 3
            && points[0].distance(points[points.len() - 1]) <= CLOSE_TOL * extent.max(1.0);
        if closed {
            points.pop();
        }
        if points.len() < 2 {
            return Err(RotationError::InvalidInput("polyline needs at least two distinct points".into()));
        }
        Ok(Polyline { points, closed })
    }

    /// One `x,y,z` per line; blank lines and `#` comments skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let vals: Vec<f64> = line
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| RotationError::InvalidInput(format!("line {}: {e}", lineno + 1)))?;
            if vals.len() != 3 {
                return Err(RotationError::InvalidInput(format!(
                    "line {}: expected 3 values, got {}",
                    lineno + 1,
                    vals.len()
                )));
            }
            points.push(Vector3::new(vals[0], vals[1], vals[2]));
        }
        Polyline::new(points)
    }

    fn neighbour(&self, i: usize, offset: isize) -> Option<Vector3> {
        let n = self.points.len() as isize;
        let j = i as isize + offset;
        if self.closed {
            Some(self.points[j.rem_euclid(n) as usize])
        } else if (0..n).contains(&j) {
            Some(self.points[j as usize])
        } else {
            None
        }
    }

    /// Central-difference tangents (one-sided at open ends).
    pub fn tangents(&self) -> Vec<Vector3> {
        (0..self.points.len())
            .map(|i| {
                let prev = self.neighbour(i, -1).unwrap_or(self.points[i]);
                let next = self.neighbour(i, 1).unwrap_or(self.points[i]);
                next - prev
            })
            .collect()
    }

    /// Tangents and curvature normals. Straight stretches inherit the
    /// previous normal; a wholly straight polyline gets an arbitrary
    /// perpendicular.
    pub fn frames(&self) -> Result<Vec<Frame>> {
        let tangents: Vec<Vector3> = self
            .tangents()
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.normalized().ok_or_else(|| {
                    RotationError::InvalidInput(format!("zero tangent at point {i} (repeated point?)"))
                })
            })
            .collect::<Result<_>>()?;
        let n = tangents.len();
        let tangent_at = |i: isize| -> Option<Vector3> {
            if self.closed {
                Some(tangents[i.rem_euclid(n as isize) as usize])
            } else if (0..n as isize).contains(&i) {
                Some(tangents[i as usize])
            } else {
                None
            }
        };
        let curvature: Vec<Option<Vector3>> = (0..n)
            .map(|i| {
                let t = tangents[i];
                let prev = tangent_at(i as isize - 1).unwrap_or(t);
                let next = tangent_at(i as isize + 1).unwrap_or(t);
                let k = next - prev;
                let k = k - t * k.dot(t);
                (k.norm() > STRAIGHT_TOL).then(|| k.normalized()).flatten()
            })
            .collect();

        let mut last = curvature
            .iter()
            .flatten()
            .next()
            .copied()
            .unwrap_or_else(|| tangents[0].any_orthogonal());
        let mut frames = Vec::with_capacity(n);
        for (t, k) in tangents.iter().zip(&curvature) {
            let normal = match k {
                Some(k) => *k,
                None => {
                    let carried = last - *t * last.dot(*t);
                    carried.normalized().unwrap_or_else(|| t.any_orthogonal())
                }
            };
            last = normal;
            frames.push(Frame::new(*t, normal));
        }
        if self.closed {
            // repeat the first frame so the transport closes the loop
            frames.push(frames[0]);
        }
        Ok(frames)
    }

    pub fn transport(&self) -> Result<FrameTransport> {
        frame_transport(&self.frames()?)
    }
}

/// Cross-section swept along the curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Profile {
    /// Regular polygon approximating a circle: `radius`, `segments`.
    Circle { radius: f64, segments: usize },
}

impl FromStr for Profile {
    type Err = RotationError;

    /// `circle:R:K`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["circle", r, k] => {
                let radius: f64 = r
                    .parse()
                    .map_err(|_| RotationError::InvalidInput(format!("bad radius {r:?}")))?;
                let segments: usize = k
                    .parse()
                    .map_err(|_| RotationError::InvalidInput(format!("bad segment count {k:?}")))?;
                if !(radius.is_finite() && radius > 0.0) || segments < 3 {
                    return Err(RotationError::InvalidInput(
                        "circle profile needs radius > 0 and at least 3 segments".into(),
                    ));
                }
                Ok(Profile::Circle { radius, segments })
            }
            _ => Err(RotationError::InvalidInput(format!(
                "unknown profile {s:?}, expected circle:R:K"
            ))),
        }
    }
}

impl Profile {
    /// Profile points in the plane spanned by `u`, `v`.
    fn points(&self, u: Vector3, v: Vector3) -> Vec<Vector3> {
        match *self {
            Profile::Circle { radius, segments } => (0..segments)
                .map(|j| {
                    let (s, c) = (TAU * j as f64 / segments as f64).sin_cos();
                    (u * c + v * s) * radius
                })
                .collect(),
        }
    }
}

/// Quad mesh with 0-based indices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Mesh {
    pub vertices: Vec<Vector3>,
    pub faces: Vec<[usize; 4]>,
}

impl Mesh {
    /// Wavefront OBJ text (1-based face indices).
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for p in &self.vertices {
            let _ = writeln!(out, "v {}", join_reals(&p.to_array(), " "));
        }
        for f in &self.faces {
            let _ = writeln!(out, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1);
        }
        out
    }
}

/// Sweeps `profile` along `line`. The profile starts in the plane spanned by
/// the first frame's normal and binormal; ring `i` is that profile carried by
/// the cumulative rotation to frame `i`.
pub fn tube_mesh(line: &Polyline, profile: &Profile) -> Result<Mesh> {
    let frames = line.frames()?;
    let transport = frame_transport(&frames)?;
    let (t0, n0) = frames[0].orthonormalized()?;
    let base = profile.points(n0, t0.cross(n0));
    let k = base.len();

    let mut mesh = Mesh::default();
    for (p, rot) in line.points.iter().zip(&transport.cumulative) {
        let m = rot.to_matrix();
        mesh.vertices.extend(base.iter().map(|b| *p + m.transform(*b)));
    }
    let rings = line.points.len();
    let spans = if line.closed { rings } else { rings - 1 };
    for i in 0..spans {
        let a = i * k;
        let b = ((i + 1) % rings) * k;
        for j in 0..k {
            let j1 = (j + 1) % k;
            mesh.faces.push([a + j, a + j1, b + j1, b + j]);
        }
    }
    Ok(mesh)
}
