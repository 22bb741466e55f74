// SPDX-License-Identifier: Apache-2.0

//! Text and JSON forms of every representation the tool reads or writes.
//!
//! Numbers print with Rust's shortest round-trip formatting, so every value
//! written parses back to the same bits.

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::alignment::AlignmentLine;
use crate::bridges::{
    axis_angle_to_gibbs, euler_to_matrix, gibbs_to_axis_angle, gibbs_to_quaternion, matrix_to_euler,
    quaternion_to_gibbs, AxisAngle, EulerAngles, UnitQuaternion,
};
use crate::gibbs::{gibbs_to_matrix, matrix_to_gibbs, GibbsVector, RotationMatrix3};
use crate::vector::{join_reals, Vector3};

use super::CliError;

const PI_PREFIX: &str = "pi-rotation axis=";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Gibbs,
    Matrix,
    Quaternion,
    AxisAngle,
    Euler,
}

/// One rotation in whatever representation it arrived in.
#[derive(Debug, Clone, Copy)]
pub enum Rotation {
    Gibbs(GibbsVector),
    Matrix(RotationMatrix3),
    Quaternion(UnitQuaternion),
    AxisAngle(AxisAngle),
    Euler(EulerAngles),
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split([',', ';'])
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .map_err(|_| CliError::parse(format!("not a number: {t:?} in {s:?}")))
        })
        .collect()
}

fn parse_n<const N: usize>(s: &str) -> Result<[f64; N], CliError> {
    let v = parse_list(s)?;
    v.as_slice()
        .try_into()
        .map_err(|_| CliError::parse(format!("expected {N} comma-separated values, got {} in {s:?}", v.len())))
}

pub fn parse_vector(s: &str) -> Result<Vector3, CliError> {
    parse_n::<3>(s).map(Vector3::from_array)
}

/// `x,y,z`, or the half-turn form this tool prints: `pi-rotation axis=x,y,z`.
pub fn parse_gibbs(s: &str) -> Result<GibbsVector, CliError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix(PI_PREFIX) {
        return Ok(GibbsVector::pi_rotation(parse_vector(rest)?)?);
    }
    Ok(GibbsVector::from_array(parse_n::<3>(s)?)?)
}

pub fn parse_rotation(repr: Repr, s: &str) -> Result<Rotation, CliError> {
    Ok(match repr {
        Repr::Gibbs => Rotation::Gibbs(parse_gibbs(s)?),
        Repr::Matrix => {
            let v = parse_n::<9>(s)?;
            let rows = [[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]];
            Rotation::Matrix(RotationMatrix3::new(rows)?)
        }
        Repr::Quaternion => {
            let [w, x, y, z] = parse_n::<4>(s)?;
            Rotation::Quaternion(UnitQuaternion::new(w, x, y, z)?)
        }
        Repr::AxisAngle => {
            let [x, y, z, a] = parse_n::<4>(s)?;
            Rotation::AxisAngle(AxisAngle::new(Vector3::new(x, y, z), a)?)
        }
        Repr::Euler => {
            let [y, p, r] = parse_n::<3>(s)?;
            Rotation::Euler(EulerAngles::new(y, p, r)?)
        }
    })
}

impl Rotation {
    pub fn to_gibbs(&self) -> GibbsVector {
        match self {
            Rotation::Gibbs(r) => *r,
            Rotation::Matrix(m) => matrix_to_gibbs(m),
            Rotation::Quaternion(q) => quaternion_to_gibbs(q),
            Rotation::AxisAngle(a) => axis_angle_to_gibbs(a),
            Rotation::Euler(e) => matrix_to_gibbs(&euler_to_matrix(e)),
        }
    }

    pub fn to_matrix(&self) -> RotationMatrix3 {
        match self {
            Rotation::Matrix(m) => *m,
            Rotation::Euler(e) => euler_to_matrix(e),
            Rotation::Quaternion(q) => q.to_matrix(),
            other => gibbs_to_matrix(&other.to_gibbs()),
        }
    }

    /// Takes the most direct route available.
    pub fn convert(&self, to: Repr) -> Rotation {
        match (to, self) {
            (Repr::Gibbs, _) => Rotation::Gibbs(self.to_gibbs()),
            (Repr::Matrix, _) => Rotation::Matrix(self.to_matrix()),
            (Repr::Quaternion, Rotation::Quaternion(q)) => Rotation::Quaternion(*q),
            (Repr::Quaternion, Rotation::Matrix(_) | Rotation::Euler(_)) => {
                Rotation::Quaternion(UnitQuaternion::from_matrix(&self.to_matrix()))
            }
            (Repr::Quaternion, _) => Rotation::Quaternion(gibbs_to_quaternion(&self.to_gibbs())),
            (Repr::AxisAngle, Rotation::AxisAngle(a)) => Rotation::AxisAngle(*a),
            (Repr::AxisAngle, _) => Rotation::AxisAngle(gibbs_to_axis_angle(&self.to_gibbs())),
            (Repr::Euler, Rotation::Euler(e)) => Rotation::Euler(*e),
            (Repr::Euler, _) => Rotation::Euler(matrix_to_euler(&self.to_matrix())),
        }
    }

    pub fn text(&self) -> String {
        match self {
            Rotation::Gibbs(r) => gibbs_text(r),
            Rotation::Matrix(m) => m.to_string(),
            Rotation::Quaternion(q) => q.to_string(),
            Rotation::AxisAngle(a) => a.to_string(),
            Rotation::Euler(e) => e.to_string(),
        }
    }

    pub fn json(&self) -> Value {
        match self {
            Rotation::Gibbs(r) => gibbs_json(r),
            Rotation::Matrix(m) => json!({"kind": "matrix", "rows": m.rows()}),
            Rotation::Quaternion(q) => json!({"kind": "quaternion", "value": q.components()}),
            Rotation::AxisAngle(a) => json!({
                "kind": "axis_angle",
                "axis": a.axis().to_array(),
                "angle": a.angle(),
            }),
            Rotation::Euler(e) => json!({
                "kind": "euler",
                "yaw": e.yaw,
                "pitch": e.pitch,
                "roll": e.roll,
            }),
        }
    }
}

fn unit_axis(r: &GibbsVector) -> [f64; 3] {
    r.axis().map(|a| a.to_array()).unwrap_or([0.0; 3])
}

pub fn gibbs_text(r: &GibbsVector) -> String {
    r.to_string()
}

pub fn gibbs_json(r: &GibbsVector) -> Value {
    if r.is_pi_encoded() {
        json!({"kind": "gibbs", "pi": true, "axis": unit_axis(r)})
    } else {
        json!({"kind": "gibbs", "pi": false, "value": r.components()})
    }
}

pub fn line_text(line: &AlignmentLine) -> String {
    let d = line.direction();
    format!("base={}\ndirection={}", gibbs_text(&line.base()), join_reals(&d.to_array(), ","))
}

pub fn line_json(line: &AlignmentLine) -> Value {
    json!({
        "kind": "line",
        "base": line.base().components(),
        "direction": line.direction().to_array(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gibbs_text_round_trips() {
        for s in ["0.1,-0.2,0.5", "pi-rotation axis=0,0,1", "0,0,0"] {
            let r = parse_gibbs(s).unwrap();
            assert_eq!(gibbs_text(&r), s);
        }
        let r = GibbsVector::new(0.1 + 0.2, 1.0 / 3.0, -7.0).unwrap();
        assert_eq!(parse_gibbs(&gibbs_text(&r)).unwrap(), r);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_gibbs("abc").is_err());
        assert!(parse_gibbs("1,2").is_err());
        assert!(parse_rotation(Repr::Matrix, "1,0,0,0,1,0,0,0").is_err());
        assert!(parse_rotation(Repr::Matrix, "1;0;0;0;1;0;0;0;1").is_ok());
    }

    #[test]
    fn json_shapes() {
        let pi = GibbsVector::pi_rotation(Vector3::X).unwrap();
        assert_eq!(gibbs_json(&pi).to_string(), r#"{"axis":[1.0,0.0,0.0],"kind":"gibbs","pi":true}"#);
        let m = Rotation::Matrix(RotationMatrix3::IDENTITY).json();
        assert_eq!(m["kind"], "matrix");
        assert_eq!(m["rows"][1][1], 1.0);
    }
}
