// SPDX-License-Identifier: Apache-2.0

// Every rotation taking p to q lies on one line in Gibbs space.
//
// $ cargo run --example align_vectors

use gibbs::alignment::solution_line;
use gibbs::{align_line, RotationError, Vector3};

fn main() -> gibbs::Result<()> {
    let p = Vector3::new(1.0, 0.0, 0.0);
    let q = Vector3::new(0.0, 1.0, 0.0);
    let line = solution_line(p, q)?;
    println!("base {}  direction {}", line.base(), line.direction());

    for gamma in [-2.0, 0.0, 1.0, 10.0] {
        let r = align_line(p, q, gamma)?;
        println!("gamma {gamma:>5}: r = {r}  p -> {}", r.rotate(p));
    }
    // the far end of the line is the half turn about p + q
    println!("limit: {}", line.limit()?);

    match align_line(p, -p, 0.0) {
        Err(RotationError::Antipodal { basis }) => {
            println!("p -> -p: any half turn about span({}, {})", basis[0], basis[1])
        }
        other => println!("unexpected {other:?}"),
    }
    match align_line(p, q * 2.0, 0.0) {
        Err(e) => println!("|p| != |q|: {} ({e})", e.code()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
