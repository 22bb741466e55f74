// SPDX-License-Identifier: Apache-2.0

// Carry a frame around a closed trefoil and sweep a circle along it.
// Writes trefoil.obj to the current directory.
//
// $ cargo run --example sweep_tube

use std::f64::consts::TAU;

use gibbs::sweep::{tube_mesh, Polyline, Profile};
use gibbs::Vector3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 240;
    let mut pts: Vec<Vector3> = (0..n)
        .map(|i| {
            let t = TAU * i as f64 / n as f64;
            Vector3::new(t.sin() + 2.0 * (2.0 * t).sin(), t.cos() - 2.0 * (2.0 * t).cos(), -(3.0 * t).sin())
        })
        .collect();
    pts.push(pts[0]);
    let line = Polyline::new(pts)?;

    let transport = line.transport()?;
    // closed curve, so the cumulative rotation comes back to the identity
    println!("{} steps, closing rotation {}", transport.steps.len(), transport.cumulative.last().unwrap());

    let mesh = tube_mesh(&line, &Profile::Circle { radius: 0.2, segments: 12 })?;
    std::fs::write("trefoil.obj", mesh.to_obj())?;
    println!("trefoil.obj: {} vertices, {} faces", mesh.vertices.len(), mesh.faces.len());
    Ok(())
}
