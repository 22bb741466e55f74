// SPDX-License-Identifier: Apache-2.0

// Half turns have infinite Gibbs length. They are kept at the float ceiling
// and handled by a separate matrix path.
//
// $ cargo run --example pi_rotations

use gibbs::{compose, gibbs_to_matrix, matrix_to_gibbs, GibbsVector, RotationMatrix3, Vector3};

fn main() -> gibbs::Result<()> {
    let half = GibbsVector::pi_rotation(Vector3::new(1.0, 1.0, 0.0))?;
    println!("{half}  (norm {}, angle {})", half.norm(), half.angle());
    println!("{}", gibbs_to_matrix(&half));

    // 2uuᵀ - I has 1 + trace = 0; the axis comes from the largest diagonal
    let back = matrix_to_gibbs(&RotationMatrix3::new([[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]])?);
    println!("half turn about y recovered as {back}");

    // approaching the half turn: the two paths hand over smoothly
    for k in [2, 4, 6, 8, 12] {
        let theta = std::f64::consts::PI - 10f64.powi(-k);
        let r = GibbsVector::from_vector(Vector3::Z * (theta / 2.0).tan())?;
        let err = gibbs_to_matrix(&matrix_to_gibbs(&gibbs_to_matrix(&r))).max_abs_diff(&gibbs_to_matrix(&r));
        println!("pi - 1e-{k:<2}: |r| = {:.3e}, pi-encoded after round trip: {}, err {err:.1e}",
            r.norm(), matrix_to_gibbs(&gibbs_to_matrix(&r)).is_pi_encoded());
    }

    // composing through a half turn
    let quarter = GibbsVector::new(1.0, 0.0, 0.0)?;
    println!("half then quarter: {}", compose(&GibbsVector::pi_rotation(Vector3::X)?, &quarter));
    Ok(())
}
