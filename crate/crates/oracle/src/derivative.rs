//! Finite-difference left derivatives `d/dt f(e^{−tX} g)` at `t = 0`.

use num_complex::Complex64;

use crate::error::OracleError;
use crate::group::{real_parts, CMat};

/// Default step; one Richardson step uses `h` and `h/2`.
pub const FD_STEP: f64 = 1e-3;

/// Derivative of a vector-valued function along a complex generator.
///
/// `X = A + iB` is split into `A, B ∈ 𝔤`; each real direction gets a central
/// difference refined by one Richardson step.
pub fn fd_derivative_vec<F>(f: F, x: &CMat, g: &CMat, h: f64) -> Result<Vec<Complex64>, OracleError>
where
    F: Fn(&CMat) -> Result<Vec<Complex64>, OracleError>,
{
    let (a, b) = real_parts(x);
    let mut out: Option<Vec<Complex64>> = None;
    for (dir, weight) in [(a, Complex64::new(1.0, 0.0)), (b, Complex64::i())] {
        if dir.iter().all(|z| z.norm() == 0.0) {
            continue;
        }
        let central = |step: f64| -> Result<Vec<Complex64>, OracleError> {
            let minus = f(&((dir * Complex64::new(-step, 0.0)).exp() * g))?;
            let plus = f(&((dir * Complex64::new(step, 0.0)).exp() * g))?;
            Ok(minus.iter().zip(&plus).map(|(m, p)| (m - p) / (2.0 * step)).collect())
        };
        let coarse = central(h)?;
        let fine = central(h / 2.0)?;
        let rich: Vec<Complex64> = coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0 * weight).collect();
        out = Some(match out {
            None => rich,
            Some(prev) => prev.iter().zip(&rich).map(|(p, r)| p + r).collect(),
        });
    }
    match out {
        Some(v) => Ok(v),
        None => Ok(vec![Complex64::new(0.0, 0.0); f(g)?.len()]),
    }
}

pub fn fd_derivative<F>(f: F, x: &CMat, g: &CMat, h: f64) -> Result<Complex64, OracleError>
where
    F: Fn(&CMat) -> Result<Complex64, OracleError>,
{
    Ok(fd_derivative_vec(|m| Ok(vec![f(m)?]), x, g, h)?[0])
}
