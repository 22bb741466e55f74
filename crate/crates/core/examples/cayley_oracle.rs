// SPDX-License-Identifier: Apache-2.0

// The N-dimensional Cayley transform, and in 3D the check that it agrees
// with the vector formulas.
//
// $ cargo run --example cayley_oracle

use gibbs::cayley::{cayley_forward, cayley_inverse, skew_from_vector, vector_from_skew};
use gibbs::{gibbs_to_matrix, GibbsVector, SkewMatrix, SquareMatrix};

fn main() -> gibbs::Result<()> {
    let r = GibbsVector::new(0.2, -0.5, 1.5)?;
    let via_cayley = cayley_inverse(&skew_from_vector(&r)?);
    let direct = SquareMatrix::from_rows(&gibbs_to_matrix(&r).rows())?;
    println!("3D: |cayley - direct| = {:e}", via_cayley.max_abs_diff(&direct));
    println!("3D: back to vector    = {}", vector_from_skew(&cayley_forward(&direct)?)?);

    // a 5D rotation from 10 free coefficients
    let s = SkewMatrix::from_lower(5, vec![0.1, -0.3, 0.7, 0.2, 0.0, 1.1, -0.4, 0.6, 0.25, -0.9])?;
    let u = cayley_inverse(&s);
    println!("5D: orthogonality residual {:e}, det {}", u.orthogonality_residual(), u.determinant());
    println!("5D: round trip error {:e}", cayley_forward(&u)?.max_abs_diff(&s));

    // -I in 4D has no Cayley image
    let mut minus = vec![0.0; 16];
    minus.iter_mut().step_by(5).for_each(|d| *d = -1.0);
    println!("4D -I: {}", cayley_forward(&SquareMatrix::new(4, minus)?).unwrap_err());
    Ok(())
}
