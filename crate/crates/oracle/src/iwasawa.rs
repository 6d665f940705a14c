//! `g = κ · (a(r) n(ν, s))^γ` by Gram–Schmidt in the parabolic basis.

use crate::error::OracleError;
use crate::group::{gamma, max_abs, CMat, GroupPoint};
use num_complex::Complex64;

/// Allowed deviation of the triangular diagonal from `(r, 1, 1/r)`.
pub const TRIANGULAR_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct IwasawaFactors {
    pub kappa: CMat,
    pub r: f64,
    pub nu: Complex64,
    pub s: f64,
}

impl IwasawaFactors {
    /// `ξ = −|ν|²/2 + is`.
    pub fn xi(&self) -> Complex64 {
        Complex64::new(-self.nu.norm_sqr() / 2.0, self.s)
    }

    pub fn reconstruct(&self) -> CMat {
        self.kappa * an_gamma(self.r, self.nu, self.s)
    }
}

/// `a(r)·n(ν, s)` in the parabolic basis, where the form is antidiagonal.
///
/// Membership forces the `(1,2)` entry of the unipotent factor to be `−ν̄`.
pub fn an_parabolic(r: f64, nu: Complex64, s: f64) -> CMat {
    let xi = Complex64::new(-nu.norm_sqr() / 2.0, s);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let a = CMat::from_diagonal(&nalgebra::Vector3::new(Complex64::new(r, 0.0), one, Complex64::new(1.0 / r, 0.0)));
    let n = CMat::new(one, -nu.conj(), xi, zero, one, nu, zero, zero, one);
    a * n
}

/// `(a(r)·n(ν, s))^γ`, the same element in the diagonal basis.
pub fn an_gamma(r: f64, nu: Complex64, s: f64) -> CMat {
    let g = gamma();
    g * an_parabolic(r, nu, s) * g
}

pub fn iwasawa(point: &GroupPoint) -> Result<IwasawaFactors, OracleError> {
    let gm = gamma();
    let gp = gm * point.matrix() * gm;
    let mut q = CMat::zeros();
    let mut tri = CMat::zeros();
    for col in 0..3 {
        let mut v = gp.column(col).into_owned();
        for i in 0..col {
            let qi = q.column(i).into_owned();
            let coeff = qi.dotc(&v);
            tri[(i, col)] = coeff;
            v -= qi * coeff;
        }
        let norm = v.norm();
        if norm < 1e-300 {
            return Err(OracleError::DecompositionFailure(format!("column {col} is dependent")));
        }
        tri[(col, col)] = Complex64::new(norm, 0.0);
        q.set_column(col, &(v / Complex64::new(norm, 0.0)));
    }
    let r = tri[(0, 0)].re;
    let scale = r.max(1.0 / r);
    let diag_err = (tri[(1, 1)].re - 1.0).abs().max((tri[(2, 2)].re * r - 1.0).abs());
    if diag_err > TRIANGULAR_TOL * scale {
        return Err(OracleError::DecompositionFailure(format!(
            "triangular diagonal ({:.6e}, {:.6e}, {:.6e}) is not of the form (r, 1, 1/r)",
            r,
            tri[(1, 1)].re,
            tri[(2, 2)].re
        )));
    }
    let nu = tri[(1, 2)];
    let xi = tri[(0, 2)] / r;
    let shape_err = (xi.re + nu.norm_sqr() / 2.0).abs().max((tri[(0, 1)] + nu.conj() * r).norm());
    if shape_err > TRIANGULAR_TOL * scale * (1.0 + nu.norm_sqr()) {
        return Err(OracleError::DecompositionFailure(format!(
            "unipotent part violates the form (residual {shape_err:.3e})"
        )));
    }
    Ok(IwasawaFactors { kappa: gm * q * gm, r, nu, s: xi.im })
}

/// `‖κ·(a n)^γ − g‖_max`.
pub fn reconstruction_error(point: &GroupPoint, f: &IwasawaFactors) -> f64 {
    max_abs(&(f.reconstruct() - point.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::MEMBERSHIP_TOL;

    #[test]
    fn identity_factors() {
        let f = iwasawa(&GroupPoint::identity()).unwrap();
        assert!((f.r - 1.0).abs() < 1e-15);
        assert!(f.nu.norm() < 1e-15 && f.s.abs() < 1e-15);
        assert!(max_abs(&(f.kappa - CMat::identity())) < 1e-15);
    }

    #[test]
    fn pure_torus_element() {
        let g = GroupPoint::new(an_gamma(2.0, Complex64::new(0.0, 0.0), 0.0), MEMBERSHIP_TOL).unwrap();
        let f = iwasawa(&g).unwrap();
        assert!((f.r - 2.0).abs() < 1e-14);
        assert!(max_abs(&(f.kappa - CMat::identity())) < 1e-14);
    }

    #[test]
    fn recovers_unipotent_coordinates() {
        let nu = Complex64::new(0.3, -0.8);
        let g = GroupPoint::new(an_gamma(0.6, nu, 1.7), 1e-12).unwrap();
        let f = iwasawa(&g).unwrap();
        assert!((f.r - 0.6).abs() < 1e-13);
        assert!((f.nu - nu).norm() < 1e-13);
        assert!((f.s - 1.7).abs() < 1e-13);
    }
}
