//! Extension of Wigner functions to SU(2,1) through the Iwasawa decomposition.

use num_complex::Complex64;
use su21_core::wigner::{admissible, KVector, WignerIndex};

use crate::error::OracleError;
use crate::group::{CMat, GroupPoint, MEMBERSHIP_TOL};
use crate::iwasawa::iwasawa;
use crate::wigner::{euler_from_k, eval_wigner, EulerAngles};

/// The data of a group element that a section value depends on.
#[derive(Debug, Clone, Copy)]
pub struct SectionPoint {
    pub r: f64,
    pub angles: EulerAngles,
}

impl SectionPoint {
    pub fn new(point: &GroupPoint) -> Result<Self, OracleError> {
        let f = iwasawa(point)?;
        Ok(Self { r: f.r, angles: euler_from_k(&f.kappa)? })
    }

    pub fn from_matrix(g: &CMat) -> Result<Self, OracleError> {
        Self::new(&GroupPoint::new(*g, MEMBERSHIP_TOL)?)
    }

    /// `r⁻³ · W(κ)`.
    pub fn eval(&self, idx: &WignerIndex) -> Complex64 {
        eval_wigner(idx, &self.angles) * self.r.powi(-3)
    }

    pub fn eval_vector(&self, v: &KVector) -> Complex64 {
        v.iter().map(|(idx, c)| c.to_complex64() * self.eval(idx)).sum()
    }
}

/// Value at `g` of the extension of `W` satisfying `f(gb) = φ⁻¹(b) f(g)`.
pub fn eval_section(idx: &WignerIndex, k: i64, g: &GroupPoint) -> Result<Complex64, OracleError> {
    if !admissible(idx, k) {
        return Err(OracleError::NotAdmissible { idx: *idx, k });
    }
    Ok(SectionPoint::new(g)?.eval(idx))
}

/// All admissible indices with `2j ≤ j2_max`, ordered by `(j, m₂, m₁)`.
pub fn admissible_indices(k: i64, j2_max: i64) -> Vec<WignerIndex> {
    let mut out = Vec::new();
    for j2 in 0..=j2_max {
        for b in 0..=j2 {
            let m2_2 = -j2 + 2 * b;
            let n2 = 3 * m2_2 - 4 * k - 6;
            for a in 0..=j2 {
                let idx = WignerIndex::from_doubled(j2, n2, -j2 + 2 * a, m2_2);
                if admissible(&idx, k) {
                    out.push(idx);
                }
            }
        }
    }
    out
}
