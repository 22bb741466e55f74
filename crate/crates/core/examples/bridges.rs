// SPDX-License-Identifier: Apache-2.0

// One rotation in every representation.
//
// $ cargo run --example bridges

use gibbs::bridges::{
    axis_angle_to_gibbs, euler_to_matrix, gibbs_to_axis_angle, gibbs_to_quaternion, matrix_to_euler,
    quaternion_to_gibbs,
};
use gibbs::{gibbs_to_matrix, matrix_to_gibbs, GibbsVector};

fn main() -> gibbs::Result<()> {
    let r = GibbsVector::new(0.1, 0.4, -0.25)?;
    let q = gibbs_to_quaternion(&r);
    let aa = gibbs_to_axis_angle(&r);
    let u = gibbs_to_matrix(&r);
    let e = matrix_to_euler(&u);
    println!("gibbs       {r}");
    println!("quaternion  {q}  (gibbs = vector part / w)");
    println!("axis-angle  {aa}");
    println!("euler zyx   {e}");

    // every path back lands on the same vector
    for (name, back) in [
        ("quaternion", quaternion_to_gibbs(&q)),
        ("axis-angle", axis_angle_to_gibbs(&aa)),
        ("euler", matrix_to_gibbs(&euler_to_matrix(&e))),
    ] {
        println!("from {name:<10} {back}");
    }
    Ok(())
}
