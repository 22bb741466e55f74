// SPDX-License-Identifier: Apache-2.0

//! Field-generic formulas behind the fast conversions.
//!
//! Everything here is written against [`Field`], which only offers the four
//! arithmetic operations. Instantiating these functions with an exact
//! rational type (as the shadow tests do) is a compile-time proof that the
//! finite-regime paths call no square root and no trigonometric routine.

use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A number type with exactly `+ - * /`.
pub trait Field:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// The unit antisymmetric tensor `ε_ijk`.
pub const fn levi_civita(i: usize, j: usize, k: usize) -> i8 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn two<T: Field>() -> T {
    T::one() + T::one()
}

fn dot<T: Field>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

/// `ε_ijk a_j b_k`.
pub fn cross<T: Field>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Rotation matrix for the Gibbs vector `r = v / k`, in homogeneous form:
///
/// `U_ij = ((k² - v·v) δ_ij + 2 v_i v_j + 2 k ε_ijk v_k) / (k² + v·v)`
///
/// With `k = 1` this is the textbook vector-to-matrix formula. Other `k`
/// keep the arithmetic in range for huge vectors, and `k = 0` gives the
/// half-turn limit `2 v vᵀ / |v|² - I`.
pub fn matrix_from_scaled<T: Field>(v: &[T; 3], k: &T) -> [[T; 3]; 3] {
    let [x, y, z] = v.clone();
    let (xx, yy, zz) = (x.clone() * x.clone(), y.clone() * y.clone(), z.clone() * z.clone());
    let (xy, xz, yz) = (x.clone() * y.clone(), x.clone() * z.clone(), y.clone() * z.clone());
    let (kx, ky, kz) = (k.clone() * x, k.clone() * y, k.clone() * z);
    let kk = k.clone() * k.clone();
    // one division, shared by all nine entries
    let s = T::one() / (kk.clone() + xx.clone() + yy.clone() + zz.clone());
    let t = two::<T>() * s.clone();
    [
        [
            (kk.clone() + xx.clone() - yy.clone() - zz.clone()) * s.clone(),
            (xy.clone() + kz.clone()) * t.clone(),
            (xz.clone() - ky.clone()) * t.clone(),
        ],
        [
            (xy - kz) * t.clone(),
            (kk.clone() - xx.clone() + yy.clone() - zz.clone()) * s.clone(),
            (yz.clone() + kx.clone()) * t.clone(),
        ],
        [
            (xz + ky) * t.clone(),
            (yz - kx) * t,
            (kk - xx - yy + zz) * s,
        ],
    ]
}

/// `U(r)` for a Gibbs vector `r`.
pub fn matrix_from_gibbs<T: Field>(r: &[T; 3]) -> [[T; 3]; 3] {
    matrix_from_scaled(r, &T::one())
}

/// Numerator `ε_ijk U_jk` and denominator `1 + U_kk` of the matrix-to-vector
/// formula. The caller decides whether the denominator is usable.
pub fn gibbs_parts_from_matrix<T: Field>(u: &[[T; 3]; 3]) -> ([T; 3], T) {
    // ε_ijk U_jk written out
    let num = [
        u[1][2].clone() - u[2][1].clone(),
        u[2][0].clone() - u[0][2].clone(),
        u[0][1].clone() - u[1][0].clone(),
    ];
    let den = T::one() + u[0][0].clone() + u[1][1].clone() + u[2][2].clone();
    (num, den)
}

/// `r_i = ε_ijk U_jk / (1 + U_kk)`.
pub fn gibbs_from_matrix<T: Field>(u: &[[T; 3]; 3]) -> [T; 3] {
    let (num, den) = gibbs_parts_from_matrix(u);
    num.map(|n| n / den.clone())
}

/// Homogeneous composition. Given `r = vr / kr` and `s = vs / ks`, returns
/// `(w, n)` with `r ⊗ s = n / w`:
///
/// `w = kr ks - vr·vs`, `n = ks vr + kr vs - vr × vs`
pub fn compose_scaled<T: Field>(kr: &T, vr: &[T; 3], ks: &T, vs: &[T; 3]) -> (T, [T; 3]) {
    let w = kr.clone() * ks.clone() - dot(vr, vs);
    let c = cross(vr, vs);
    let n = [0, 1, 2].map(|i| ks.clone() * vr[i].clone() + kr.clone() * vs[i].clone() - c[i].clone());
    (w, n)
}

/// `(r ⊗ s)_i = (r_i + s_i - ε_ijk r_j s_k) / (1 - r_k s_k)`
pub fn compose<T: Field>(r: &[T; 3], s: &[T; 3]) -> [T; 3] {
    let (w, n) = compose_scaled(&T::one(), r, &T::one(), s);
    n.map(|x| x / w.clone())
}

/// Pieces of the one-vector alignment family
/// `r(γ) = (p × q + γ (p + q)) / (p · (p + q))`: returns
/// `(p × q, p + q, p · (p + q))`.
pub fn alignment_parts<T: Field>(p: &[T; 3], q: &[T; 3]) -> ([T; 3], [T; 3], T) {
    let s = [0, 1, 2].map(|i| p[i].clone() + q[i].clone());
    let den = dot(p, &s);
    (cross(p, q), s, den)
}

/// 3×3 matrix product `a · b`.
pub fn mat_mul<T: Field>(a: &[[T; 3]; 3], b: &[[T; 3]; 3]) -> [[T; 3]; 3] {
    let mut out: [[T; 3]; 3] = zero_matrix();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..3).fold(T::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone());
        }
    }
    out
}

fn zero_matrix<T: Field>() -> [[T; 3]; 3] {
    std::array::from_fn(|_| std::array::from_fn(|_| T::zero()))
}
