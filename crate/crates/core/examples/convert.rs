// SPDX-License-Identifier: Apache-2.0

// Gibbs vector to matrix and back, using only + - × ÷.
//
// $ cargo run --example convert

use gibbs::{gibbs_to_matrix, matrix_to_gibbs, GibbsVector, Vector3};

fn main() -> gibbs::Result<()> {
    // a third of a turn about (1,1,1): tan(60°)/√3 per component
    let r = GibbsVector::new(1.0, 1.0, 1.0)?;
    let u = gibbs_to_matrix(&r);
    println!("r = {r}\nU =\n{u}");

    // cycles the axes: x -> y -> z -> x
    for v in [Vector3::X, Vector3::Y, Vector3::Z] {
        println!("{v} -> {}", u.transform(v));
    }

    let back = matrix_to_gibbs(&u);
    println!("back = {back}");
    println!("angle = {} deg", r.angle().to_degrees());
    Ok(())
}
