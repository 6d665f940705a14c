//! Numeric matrices in SU(2,1) with the diagonal Hermitian form.

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::OracleError;

pub type CMat = Matrix3<Complex64>;

/// Default tolerance for SU(2,1) membership.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// Converts an exact matrix to floating point.
pub fn to_numeric(m: &su21_core::lie::Matrix3) -> CMat {
    CMat::from_fn(|r, c| m.get(r, c).to_complex64())
}

pub fn j_diag() -> CMat {
    to_numeric(&su21_core::lie::j_diag())
}

pub fn gamma() -> CMat {
    to_numeric(&su21_core::lie::gamma())
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max(|det g − 1|, ‖ḡᵀ J g − J‖_max)`.
pub fn membership_residual(g: &CMat) -> f64 {
    let j = j_diag();
    let form = max_abs(&(g.adjoint() * j * g - j));
    form.max((g.determinant() - 1.0).norm())
}

/// Largest entry of `MᴴM − I`.
pub fn unitarity_residual(m: &DMatrix<Complex64>) -> f64 {
    let gram = m.adjoint() * m - DMatrix::identity(m.ncols(), m.ncols());
    gram.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn is_unitary_numeric(m: &DMatrix<Complex64>, tol: f64) -> bool {
    m.is_square() && unitarity_residual(m) <= tol
}

/// The conjugation of 𝔤_ℂ fixing 𝔤: `X ↦ −J Xᴴ J`.
pub fn real_structure(x: &CMat) -> CMat {
    let j = j_diag();
    -(j * x.adjoint() * j)
}

/// Splits `X = A + iB` with `A, B ∈ 𝔤`.
pub fn real_parts(x: &CMat) -> (CMat, CMat) {
    let conj = real_structure(x);
    let a = (x + conj) * Complex64::new(0.5, 0.0);
    let b = (x - conj) * Complex64::new(0.0, -0.5);
    (a, b)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupPoint {
    g: CMat,
}

impl GroupPoint {
    pub fn new(g: CMat, tol: f64) -> Result<Self, OracleError> {
        let residual = membership_residual(&g);
        if residual > tol {
            return Err(OracleError::NotInGroup(residual));
        }
        Ok(Self { g })
    }

    pub fn identity() -> Self {
        Self { g: CMat::identity() }
    }

    pub fn matrix(&self) -> &CMat {
        &self.g
    }
}

/// A random element of 𝔤 with Frobenius norm in `(0, 1]`.
pub fn random_algebra_element<R: Rng>(rng: &mut R) -> CMat {
    let z = CMat::from_fn(|_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let z = (z + real_structure(&z)) * Complex64::new(0.5, 0.0);
    let z = z - CMat::identity() * (z.trace() / 3.0);
    let norm = z.norm();
    if norm == 0.0 {
        return z;
    }
    let radius: f64 = rng.random_range(0.05..=1.0);
    z * Complex64::new(radius / norm, 0.0)
}

/// `exp(Z)` for a random `Z ∈ 𝔤`, fully determined by `seed`.
pub fn random_group_point(seed: u64) -> GroupPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = random_algebra_element(&mut rng);
    GroupPoint::new(z.exp(), MEMBERSHIP_TOL).expect("exponential of a Lie algebra element")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_recovers_matrix() {
        let x = to_numeric(&su21_core::lie::x(1));
        let (a, b) = real_parts(&x);
        assert!(max_abs(&(a + b * Complex64::i() - x)) < 1e-15);
        assert!(max_abs(&(real_structure(&a) - a)) < 1e-15);
        assert!(max_abs(&(real_structure(&b) - b)) < 1e-15);
    }

    #[test]
    fn seeded_points_repeat() {
        assert_eq!(random_group_point(17), random_group_point(17));
        assert_ne!(random_group_point(17), random_group_point(18));
    }

    #[test]
    fn non_member_rejected() {
        let g = CMat::identity() * Complex64::new(2.0, 0.0);
        assert!(matches!(GroupPoint::new(g, MEMBERSHIP_TOL), Err(OracleError::NotInGroup(_))));
    }
}
