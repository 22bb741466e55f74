// SPDX-License-Identifier: Apache-2.0

// Recover a rotation from two vectors and their images.
//
// $ cargo run --example align_pair

use gibbs::{align_pair, GibbsVector, Vector3};

fn main() -> gibbs::Result<()> {
    let truth = GibbsVector::new(0.3, -0.8, 0.5)?;
    let p1 = Vector3::new(1.0, 2.0, 0.5);
    let p2 = Vector3::new(-0.4, 0.1, 3.0);
    let (q1, q2) = (truth.rotate(p1), truth.rotate(p2));

    let r = align_pair(p1, q1, p2, q2)?;
    println!("truth     {truth}");
    println!("recovered {r}");
    println!("residuals {:e} {:e}", r.rotate(p1).distance(q1), r.rotate(p2).distance(q2));

    // targets that no rotation can reach are rejected
    let bad = align_pair(p1, q1 * 1.001, p2, q2);
    println!("stretched q1: {}", bad.unwrap_err());
    Ok(())
}
