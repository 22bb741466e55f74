// SPDX-License-Identifier: Apache-2.0

//! The N-dimensional Cayley transform between rotation matrices and
//! antisymmetric matrices:
//!
//! ```text
//! S = (U - I)(U + I)⁻¹        U = (I + S)(I - S)⁻¹
//! ```
//!
//! This is the slow general route (a dense solve per call). In 3D it serves as
//! an independent check on the closed forms in [`crate::gibbs`], since
//! `S_ij = ε_ijk r_k`.

use std::fmt;

use crate::error::{Result, RotationError};
use crate::gibbs::{GibbsVector, TOL_ORTHO_INPUT};
use crate::kernel::levi_civita;

/// Relative pivot size below which `U + I` counts as singular.
pub const TOL_SINGULAR: f64 = 1e-12;

/// Dense `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(RotationError::InvalidInput("matrix dimension must be at least 1".into()));
        }
        if data.len() != n * n {
            return Err(RotationError::InvalidInput(format!(
                "expected {} entries for a {n}×{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(RotationError::InvalidInput("non-finite matrix entry".into()));
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(RotationError::InvalidInput("matrix rows must all have length n".into()));
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &SquareMatrix) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &SquareMatrix, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    pub fn add(&self, other: &SquareMatrix) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SquareMatrix) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |a, x| a.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        self.sub(other).max_abs()
    }

    /// `max |(MᵀM - I)_ij|`
    pub fn orthogonality_residual(&self) -> f64 {
        self.transpose().matmul(self).max_abs_diff(&Self::identity(self.n))
    }

    pub fn determinant(&self) -> f64 {
        Lu::factor(self).determinant()
    }

    /// Solves `self · X = rhs`.
    pub fn solve(&self, rhs: &SquareMatrix) -> Result<SquareMatrix> {
        let lu = Lu::factor(self);
        if lu.is_singular(TOL_SINGULAR) {
            return Err(RotationError::SingularCayley {
                det: lu.determinant().abs(),
            });
        }
        Ok(lu.solve(rhs))
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(f64::to_string).collect();
            f.write_str(&cells.join(","))?;
        }
        Ok(())
    }
}

/// LU factorization with partial pivoting, `P·A = L·U` packed in place.
struct Lu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    sign: f64,
    scale: f64,
}

impl Lu {
    fn factor(a: &SquareMatrix) -> Self {
        let n = a.n;
        let mut lu = a.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&x, &y| lu[x * n + col].abs().total_cmp(&lu[y * n + col].abs()))
                .unwrap_or(col);
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
                perm.swap(col, pivot_row);
                sign = -sign;
            }
            let p = lu[col * n + col];
            if p == 0.0 {
                continue;
            }
            for row in col + 1..n {
                let f = lu[row * n + col] / p;
                lu[row * n + col] = f;
                for j in col + 1..n {
                    lu[row * n + j] -= f * lu[col * n + j];
                }
            }
        }
        Lu {
            n,
            lu,
            perm,
            sign,
            scale: a.max_abs(),
        }
    }

    fn is_singular(&self, tol: f64) -> bool {
        let n = self.n;
        (0..n).any(|i| self.lu[i * n + i].abs() <= tol * self.scale)
    }

    fn determinant(&self) -> f64 {
        let n = self.n;
        (0..n).fold(self.sign, |d, i| d * self.lu[i * n + i])
    }

    fn solve(&self, rhs: &SquareMatrix) -> SquareMatrix {
        let n = self.n;
        let mut x = SquareMatrix::zeros(n);
        for c in 0..n {
            let mut y: Vec<f64> = (0..n).map(|i| rhs.get(self.perm[i], c)).collect();
            for i in 0..n {
                for k in 0..i {
                    y[i] -= self.lu[i * n + k] * y[k];
                }
            }
            for i in (0..n).rev() {
                for k in i + 1..n {
                    y[i] -= self.lu[i * n + k] * y[k];
                }
                y[i] /= self.lu[i * n + i];
            }
            for (i, v) in y.into_iter().enumerate() {
                x.set(i, c, v);
            }
        }
        x
    }
}

/// Antisymmetric `n × n` matrix. Only the strictly-lower coefficients
/// `S_ij, i > j` are stored; the rest follow from `S_ji = -S_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix {
    n: usize,
    lower: Vec<f64>,
}

fn lower_index(i: usize, j: usize) -> usize {
    i * (i - 1) / 2 + j
}

impl SkewMatrix {
    pub fn zeros(n: usize) -> Self {
        SkewMatrix {
            n,
            lower: vec![0.0; n * n.saturating_sub(1) / 2],
        }
    }

    /// From the coefficients `S_10, S_20, S_21, S_30, ...` (row by row below
    /// the diagonal).
    pub fn from_lower(n: usize, lower: Vec<f64>) -> Result<Self> {
        if n == 0 || lower.len() != n * (n - 1) / 2 {
            return Err(RotationError::InvalidInput(format!(
                "a {n}×{n} antisymmetric matrix has {} free coefficients, got {}",
                n * n.saturating_sub(1) / 2,
                lower.len()
            )));
        }
        if lower.iter().any(|x| !x.is_finite()) {
            return Err(RotationError::InvalidInput("non-finite coefficient".into()));
        }
        Ok(SkewMatrix { n, lower })
    }

    /// Antisymmetric part `(M - Mᵀ)/2`.
    pub fn antisymmetric_part(m: &SquareMatrix) -> Self {
        let n = m.dim();
        let mut s = Self::zeros(n);
        for i in 1..n {
            for j in 0..i {
                s.lower[lower_index(i, j)] = 0.5 * (m.get(i, j) - m.get(j, i));
            }
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.lower
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => 0.0,
            Ordering::Greater => self.lower[lower_index(i, j)],
            Ordering::Less => -self.lower[lower_index(j, i)],
        }
    }

    pub fn to_square(&self) -> SquareMatrix {
        let n = self.n;
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &SkewMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.lower
            .iter()
            .zip(&other.lower)
            .fold(0.0f64, |a, (x, y)| a.max((x - y).abs()))
    }
}

fn check_rotation(u: &SquareMatrix) -> Result<()> {
    let orth = u.orthogonality_residual();
    let det_dev = (u.determinant() - 1.0).abs();
    if orth > TOL_ORTHO_INPUT || det_dev > TOL_ORTHO_INPUT {
        return Err(RotationError::NotARotation {
            orthogonality: orth,
            det_deviation: det_dev,
        });
    }
    Ok(())
}

/// `(U + I)⁻¹ (U - I)` before antisymmetrization. The two factors commute,
/// so this equals `(U - I)(U + I)⁻¹`.
pub fn cayley_forward_raw(u: &SquareMatrix) -> Result<SquareMatrix> {
    check_rotation(u)?;
    let id = SquareMatrix::identity(u.dim());
    u.add(&id).solve(&u.sub(&id))
}

/// `S = (U - I)(U + I)⁻¹`, stored exactly antisymmetric.
///
/// Fails with [`RotationError::SingularCayley`] when `U` has an eigenvalue
/// `-1` (a half turn in some plane), and with [`RotationError::NotARotation`]
/// for non-orthogonal or improper `U`.
pub fn cayley_forward(u: &SquareMatrix) -> Result<SkewMatrix> {
    Ok(SkewMatrix::antisymmetric_part(&cayley_forward_raw(u)?))
}

/// `U = (I + S)(I - S)⁻¹`. `I - S` is never singular for real
/// antisymmetric `S`.
pub fn cayley_inverse(s: &SkewMatrix) -> SquareMatrix {
    let id = SquareMatrix::identity(s.dim());
    let sm = s.to_square();
    let a = id.sub(&sm);
    // (I+S)(I-S)⁻¹ = (I-S)⁻¹(I+S); solve (I - S) X = I + S
    let lu = Lu::factor(&a);
    lu.solve(&id.add(&sm))
}

/// `S_ij = ε_ijk r_k`.
pub fn skew_from_vector(r: &GibbsVector) -> Result<SkewMatrix> {
    if r.is_pi_encoded() {
        return Err(RotationError::OutOfDomain(
            "a half turn has no finite antisymmetric matrix".into(),
        ));
    }
    let rv = r.components();
    let mut s = SkewMatrix::zeros(3);
    for i in 1..3 {
        for j in 0..i {
            s.lower[lower_index(i, j)] = (0..3).map(|k| f64::from(levi_civita(i, j, k)) * rv[k]).sum();
        }
    }
    Ok(s)
}

/// `r_i = ½ ε_ijk S_jk`.
pub fn vector_from_skew(s: &SkewMatrix) -> Result<GibbsVector> {
    if s.dim() != 3 {
        return Err(RotationError::OutOfDomain(format!(
            "vector form exists only in 3 dimensions, got n = {}",
            s.dim()
        )));
    }
    let r: [f64; 3] = std::array::from_fn(|i| {
        let mut acc = 0.0;
        for j in 0..3 {
            for k in 0..3 {
                acc += f64::from(levi_civita(i, j, k)) * s.get(j, k);
            }
        }
        0.5 * acc
    });
    GibbsVector::from_array(r)
}
