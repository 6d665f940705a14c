//! Floating-point Wigner functions on U(2) in Euler coordinates.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use su21_core::wigner::{HalfInt, WignerIndex};

use crate::error::OracleError;
use crate::group::CMat;
use crate::jacobi::binomial;

/// Tolerance for recognising the block shape `diag(U, det U⁻¹)`.
pub const K_SHAPE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct EulerAngles {
    pub zeta: f64,
    pub phi: f64,
    pub theta: f64,
    pub psi: f64,
}

impl EulerAngles {
    pub fn new(zeta: f64, phi: f64, theta: f64, psi: f64) -> Self {
        Self { zeta, phi, theta, psi }
    }

    /// Moves `φ` into `(−π, π]` and `ψ` into `(−π, 3π]` without changing the group element.
    pub fn normalized(self) -> Self {
        let two_pi = 2.0 * PI;
        // (φ, ψ) ↦ (φ + 2π, ψ + 2π) and ψ ↦ ψ + 4π fix the matrix.
        let t = ((PI - self.phi) / two_pi).floor();
        let phi = self.phi + t * two_pi;
        let psi = self.psi + t * two_pi;
        let u = ((3.0 * PI - psi) / (2.0 * two_pi)).floor();
        Self { phi, psi: psi + u * 2.0 * two_pi, ..self }
    }
}

fn ln_factorial(n: i64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// `c^j_{m₁} c^j_{m₂} / ((j+m₂)!(j−m₂)!) · sin^α(θ/2) cos^β(θ/2) P^{(α,β)}_{j−m₁}(cos θ)`
/// with `α = m₁ − m₂`, `β = m₁ + m₂`.
///
/// The Jacobi sum is multiplied through by the prefactor term by term, so every power
/// of `sin` and `cos` that survives has a non-negative exponent and `θ ∈ {0, π}` needs
/// no special casing.
pub fn d_function(j: HalfInt, m1: HalfInt, m2: HalfInt, theta: f64) -> f64 {
    let jm1p = (j + m1).as_int().expect("j + m1 integral");
    let jm1m = (j - m1).as_int().expect("j - m1 integral");
    let jm2p = (j + m2).as_int().expect("j + m2 integral");
    let jm2m = (j - m2).as_int().expect("j - m2 integral");
    let alpha = (m1 - m2).as_int().expect("m1 - m2 integral");
    let beta = (m1 + m2).as_int().expect("m1 + m2 integral");
    let c = jm1m;
    let (s, co) = ((theta / 2.0).sin(), (theta / 2.0).cos());
    let mut total = 0.0;
    for k in 0..=c {
        let coeff = binomial(jm2m, c - k) * binomial(jm2p, k);
        if coeff == 0.0 {
            continue;
        }
        let es = alpha + 2 * k;
        let ec = beta + 2 * (c - k);
        debug_assert!(es >= 0 && ec >= 0);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * coeff * s.powi(es as i32) * co.powi(ec as i32);
    }
    let log_norm = 0.5 * (ln_factorial(jm1p) + ln_factorial(jm1m) - ln_factorial(jm2p) - ln_factorial(jm2m));
    total * log_norm.exp()
}

/// `W^{j,n}_{m₁,m₂}` at the given Euler angles.
pub fn eval_wigner(idx: &WignerIndex, e: &EulerAngles) -> Complex64 {
    let phase = idx.n.to_f64() * e.zeta + idx.m1.to_f64() * e.psi + idx.m2.to_f64() * e.phi;
    Complex64::from_polar(d_function(idx.j, idx.m1, idx.m2, e.theta), phase)
}

/// The matrix `[W^{j,n}_{m₁,m₂}]` with `m₁` indexing rows, both from `−j` to `j`.
pub fn wigner_matrix(j: HalfInt, n: HalfInt, e: &EulerAngles) -> DMatrix<Complex64> {
    let dim = (j.doubled + 1) as usize;
    let m = |i: usize| HalfInt::from_doubled(-j.doubled + 2 * i as i64);
    DMatrix::from_fn(dim, dim, |r, c| eval_wigner(&WignerIndex::new(j, n, m(r), m(c)), e))
}

/// The element `diag(U, det U⁻¹)` of K with the given Euler angles.
pub fn k_from_euler(e: &EulerAngles) -> CMat {
    let half = |a: f64| Complex64::from_polar(1.0, a / 2.0);
    let (c, s) = ((e.theta / 2.0).cos(), (e.theta / 2.0).sin());
    let (z, f, p) = (e.zeta, e.phi, e.psi);
    let u11 = half(-z - f - p) * c;
    let u12 = -half(-z + f - p) * s;
    let u21 = half(-z - f + p) * s;
    let u22 = half(-z + f + p) * c;
    let det = u11 * u22 - u12 * u21;
    let zero = Complex64::new(0.0, 0.0);
    CMat::new(u11, u12, zero, u21, u22, zero, zero, zero, det.inv())
}

/// Distance of `kappa` from the shape `diag(U, det U⁻¹)` with `U` unitary.
pub fn k_shape_residual(kappa: &CMat) -> f64 {
    let off = [kappa[(0, 2)], kappa[(1, 2)], kappa[(2, 0)], kappa[(2, 1)]];
    let mut res = off.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let u = kappa.fixed_view::<2, 2>(0, 0);
    let gram = u.adjoint() * u;
    for r in 0..2 {
        for c in 0..2 {
            let target = if r == c { 1.0 } else { 0.0 };
            res = res.max((gram[(r, c)] - target).norm());
        }
    }
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    res.max((det * kappa[(2, 2)] - 1.0).norm())
}

/// Euler angles of an element of K.
///
/// `θ = 2·atan2(|U₂₁|, |U₁₁|)`; at `θ ∈ {0, π}` the angle `φ` is set to zero and `ψ`
/// absorbs the remaining phase.
pub fn euler_from_k(kappa: &CMat) -> Result<EulerAngles, OracleError> {
    let residual = k_shape_residual(kappa);
    if residual > K_SHAPE_TOL {
        return Err(OracleError::NotInK(residual));
    }
    let (u11, u12, u21, u22) = (kappa[(0, 0)], kappa[(0, 1)], kappa[(1, 0)], kappa[(1, 1)]);
    let theta = 2.0 * u21.norm().atan2(u11.norm());
    let det = u11 * u22 - u12 * u21;
    let zeta = -det.arg();
    let rot = Complex64::from_polar(1.0, zeta / 2.0);
    let (v11, v21) = (u11 * rot, u21 * rot);
    const DEGENERATE: f64 = 1e-12;
    let (phi, psi) = if v21.norm() <= DEGENERATE {
        (0.0, -2.0 * v11.arg())
    } else if v11.norm() <= DEGENERATE {
        (0.0, 2.0 * v21.arg())
    } else {
        let sum = -2.0 * v11.arg();
        let diff = 2.0 * v21.arg();
        ((sum - diff) / 2.0, (sum + diff) / 2.0)
    };
    Ok(EulerAngles::new(zeta, phi, theta, psi).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::jacobi;

    fn hi(d: i64) -> HalfInt {
        HalfInt::from_doubled(d)
    }

    #[test]
    fn expanded_sum_agrees_with_jacobi_form() {
        for j2 in 0..=6i64 {
            for a in 0..=j2 {
                for b in 0..=j2 {
                    let (j, m1, m2) = (hi(j2), hi(-j2 + 2 * a), hi(-j2 + 2 * b));
                    let alpha = (m1 - m2).as_int().unwrap();
                    let beta = (m1 + m2).as_int().unwrap();
                    let c = (j - m1).as_int().unwrap() as u32;
                    for &theta in &[0.3, 1.1, 2.0, 2.9] {
                        let (s, co) = ((theta / 2.0f64).sin(), (theta / 2.0f64).cos());
                        let cn = |m: HalfInt| {
                            let f = |x: i64| (1..=x).map(|i| i as f64).product::<f64>();
                            (f((j + m).as_int().unwrap()) * f((j - m).as_int().unwrap())).sqrt()
                        };
                        let literal = cn(m1) * cn(m2) / (cn(m2) * cn(m2))
                            * s.powi(alpha as i32)
                            * co.powi(beta as i32)
                            * jacobi(alpha, beta, c, theta.cos());
                        let got = d_function(j, m1, m2, theta);
                        assert!((literal - got).abs() < 1e-12, "{j2} {a} {b} {theta}: {literal} {got}");
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_index_is_a_character() {
        let e = EulerAngles::new(0.7, -1.2, 0.4, 2.5);
        let w = eval_wigner(&WignerIndex::from_doubled(0, 6, 0, 0), &e);
        assert!((w - Complex64::from_polar(1.0, 3.0 * 0.7)).norm() < 1e-14);
    }

    #[test]
    fn spin_half_at_identity_angles() {
        let e = EulerAngles::new(0.9, 0.0, 0.0, 0.0);
        let w = eval_wigner(&WignerIndex::from_doubled(1, 1, 1, 1), &e);
        assert!((w - Complex64::from_polar(1.0, 0.45)).norm() < 1e-14);
        let off = eval_wigner(&WignerIndex::from_doubled(1, 1, 1, -1), &e);
        assert!(off.norm() < 1e-14);
    }

    #[test]
    fn identity_has_zero_angles() {
        let e = euler_from_k(&CMat::identity()).unwrap();
        assert_eq!((e.zeta, e.phi, e.theta), (0.0, 0.0, 0.0));
        assert!(e.psi.abs() < 1e-15);
    }

    #[test]
    fn normalization_keeps_matrix() {
        let e = EulerAngles::new(0.3, 5.0, 1.0, -7.0);
        let n = e.normalized();
        assert!(n.phi > -PI && n.phi <= PI);
        assert!(n.psi > -PI && n.psi <= 3.0 * PI);
        assert!((k_from_euler(&e) - k_from_euler(&n)).norm() < 1e-12);
    }

    #[test]
    fn not_k_shape_is_rejected() {
        let mut m = CMat::identity();
        m[(0, 2)] = Complex64::new(0.1, 0.0);
        assert!(matches!(euler_from_k(&m), Err(OracleError::NotInK(_))));
    }
}
