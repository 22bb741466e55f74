// SPDX-License-Identifier: Apache-2.0

// Composing rotations without matrices: (r + s - r×s) / (1 - r·s).
//
// $ cargo run --example compose

use gibbs::{compose, compose_sequence, gibbs_to_matrix, GibbsVector, Vector3};

fn main() -> gibbs::Result<()> {
    let quarter_x = GibbsVector::new(1.0, 0.0, 0.0)?;
    let quarter_z = GibbsVector::new(0.0, 0.0, 1.0)?;

    // x first, then z
    let c = compose(&quarter_x, &quarter_z);
    println!("x then z = {c}");
    let v = Vector3::new(0.0, 1.0, 0.0);
    println!("  {v} -> {} (stepwise {})", c.rotate(v), quarter_z.rotate(quarter_x.rotate(v)));

    // order matters
    println!("z then x = {}", compose(&quarter_z, &quarter_x));

    // the matrix of the composite is the product, r's matrix on the left
    let err = gibbs_to_matrix(&c).max_abs_diff(&(gibbs_to_matrix(&quarter_x) * gibbs_to_matrix(&quarter_z)));
    println!("|U(x∘z) - U(x)U(z)| = {err:e}");

    // 1 - r·s = 0: two quarter turns make a half turn
    println!("x then x = {}", compose(&quarter_x, &quarter_x));
    println!("four quarter turns = {}", compose_sequence(&[quarter_x; 4])?);
    Ok(())
}
