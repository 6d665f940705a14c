//! Numeric cross-checks of the exact derivative formulas and of the oracle itself.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use su21_core::lie::LieBasisSymbol;
use su21_core::wigner::{act, HalfInt, KVector, WignerIndex, X3Variant};

use crate::derivative::{fd_derivative_vec, FD_STEP};
use crate::error::OracleError;
use crate::group::{random_group_point, to_numeric, unitarity_residual, GroupPoint};
use crate::iwasawa::{iwasawa, reconstruction_error};
use crate::quadrature::{nodes_for, quadrature_ip};
use crate::section::{admissible_indices, SectionPoint};
use crate::wigner::{euler_from_k, k_from_euler, wigner_matrix, EulerAngles};

#[derive(Debug, Clone, Serialize)]
pub struct NumericCheck {
    pub check: String,
    pub params: Value,
    pub max_rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl NumericCheck {
    pub fn new(check: impl Into<String>, params: Value, max_rel_err: f64, tol: f64) -> Self {
        // NaN never passes.
        let pass = max_rel_err <= tol;
        Self { check: check.into(), params, max_rel_err, tol, pass }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FdConfig {
    pub k: i64,
    /// Largest `2j`.
    pub j2_max: i64,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

impl FdConfig {
    pub fn new(k: i64) -> Self {
        Self { k, j2_max: 5, samples: 20, seed: 1, tol: 1e-6 }
    }
}

/// The `i`-th sample point of a seeded run.
pub fn sample_point(seed: u64, i: usize) -> GroupPoint {
    random_group_point(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64))
}

/// `|fd − exact| / max(1, |exact|)`, maximised over sample points, for each generator and index.
fn fd_errors(
    cfg: &FdConfig,
    gens: &[LieBasisSymbol],
    variant: X3Variant,
) -> Result<(Vec<WignerIndex>, Vec<Vec<f64>>), OracleError> {
    let indices = admissible_indices(cfg.k, cfg.j2_max);
    let predictions: Vec<Vec<KVector>> = gens
        .iter()
        .map(|&gen| indices.iter().map(|idx| act(gen, &KVector::basis(*idx), variant)).collect())
        .collect::<Result<_, _>>()?;
    let eval_all = |m: &nalgebra::Matrix3<Complex64>| -> Result<Vec<Complex64>, OracleError> {
        let sp = SectionPoint::from_matrix(m)?;
        Ok(indices.iter().map(|idx| sp.eval(idx)).collect())
    };
    let per_point: Vec<Vec<Vec<f64>>> = (0..cfg.samples)
        .into_par_iter()
        .map(|s| {
            let g = *sample_point(cfg.seed, s).matrix();
            let here = SectionPoint::from_matrix(&g)?;
            gens.iter()
                .zip(&predictions)
                .map(|(&gen, preds)| {
                    let fd = fd_derivative_vec(eval_all, &to_numeric(&gen.matrix()), &g, FD_STEP)?;
                    Ok(fd
                        .iter()
                        .zip(preds)
                        .map(|(d, p)| {
                            let exact = here.eval_vector(p);
                            (d - exact).norm() / exact.norm().max(1.0)
                        })
                        .collect())
                })
                .collect()
        })
        .collect::<Result<_, OracleError>>()?;
    let mut worst = vec![vec![0.0f64; indices.len()]; gens.len()];
    for point in &per_point {
        for (w, errs) in worst.iter_mut().zip(point) {
            for (a, &e) in w.iter_mut().zip(errs) {
                // NaN propagates into the maximum.
                *a = if e.is_nan() || a.is_nan() { f64::NAN } else { a.max(e) };
            }
        }
    }
    Ok((indices, worst))
}

fn fd_records(
    name: &str,
    cfg: &FdConfig,
    gens: &[LieBasisSymbol],
    variant: X3Variant,
) -> Result<Vec<NumericCheck>, OracleError> {
    let (indices, worst) = fd_errors(cfg, gens, variant)?;
    let mut out = Vec::new();
    for (gen, errs) in gens.iter().zip(&worst) {
        for (idx, &err) in indices.iter().zip(errs) {
            let mut params = json!({ "k": cfg.k, "index": idx, "generator": gen.label(), "samples": cfg.samples });
            if !gen.is_compact() {
                params["variant"] = json!(variant.label());
            }
            out.push(NumericCheck::new(name, params, err, cfg.tol));
        }
    }
    Ok(out)
}

/// Compact generators against their exact action, one record per (generator, index).
pub fn check_compact_derivatives(cfg: &FdConfig) -> Result<Vec<NumericCheck>, OracleError> {
    fd_records("compact_derivatives", cfg, &LieBasisSymbol::L_GENERATORS, X3Variant::Plus1)
}

/// Noncompact generators against their exact action, one record per (generator, index).
pub fn check_noncompact_derivatives(cfg: &FdConfig, variant: X3Variant) -> Result<Vec<NumericCheck>, OracleError> {
    fd_records("noncompact_derivatives", cfg, &LieBasisSymbol::P_GENERATORS, variant)
}

#[derive(Debug, Clone, Serialize)]
pub struct VariantOutcome {
    pub variant: X3Variant,
    pub max_rel_err: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct X3Adjudication {
    pub outcomes: Vec<VariantOutcome>,
    /// Set when exactly one variant passes.
    pub selected: Option<X3Variant>,
}

/// Runs the `X₃` derivative under both coefficient variants for every `k ≤ k_max`.
pub fn adjudicate_x3(
    k_max: i64,
    j2_max: i64,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<X3Adjudication, OracleError> {
    let mut outcomes = Vec::new();
    for variant in X3Variant::BOTH {
        let mut worst = 0.0f64;
        for k in 0..=k_max {
            let cfg = FdConfig { k, j2_max, samples, seed, tol };
            let (_, errs) = fd_errors(&cfg, &[LieBasisSymbol::X3], variant)?;
            worst = errs[0].iter().fold(worst, |a, &e| if e.is_nan() { f64::NAN } else { a.max(e) });
        }
        outcomes.push(VariantOutcome { variant, max_rel_err: worst, pass: worst <= tol });
    }
    let passing: Vec<_> = outcomes.iter().filter(|o| o.pass).collect();
    let selected = if passing.len() == 1 { Some(passing[0].variant) } else { None };
    Ok(X3Adjudication { outcomes, selected })
}

pub fn random_euler<R: Rng>(rng: &mut R) -> EulerAngles {
    EulerAngles::new(
        rng.random_range(0.0..4.0 * PI),
        rng.random_range(-PI..PI),
        rng.random_range(0.0..=PI),
        rng.random_range(-PI..3.0 * PI),
    )
}

fn n_values(j2: i64) -> [i64; 3] {
    [j2 - 4, j2, j2 + 6]
}

/// `D(k₁k₂) = D(k₁)D(k₂)` and unitarity of `D(k)` for `2j ≤ j2_max` at random pairs.
pub fn check_homomorphism(j2_max: i64, trials: usize, seed: u64, tol: f64) -> Result<Vec<NumericCheck>, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hom = 0.0f64;
    let mut unit = 0.0f64;
    for _ in 0..trials {
        let (e1, e2) = (random_euler(&mut rng), random_euler(&mut rng));
        let prod = euler_from_k(&(k_from_euler(&e1) * k_from_euler(&e2)))?;
        for j2 in 0..=j2_max {
            for n2 in n_values(j2) {
                let (j, n) = (HalfInt::from_doubled(j2), HalfInt::from_doubled(n2));
                let (d1, d2) = (wigner_matrix(j, n, &e1), wigner_matrix(j, n, &e2));
                let d12 = wigner_matrix(j, n, &prod);
                let diff = &d12 - &d1 * &d2;
                hom = hom.max(diff.iter().map(|z| z.norm()).fold(0.0, f64::max));
                unit = unit.max(unitarity_residual(&d1));
            }
        }
    }
    let params = json!({ "j2_max": j2_max, "trials": trials, "seed": seed });
    Ok(vec![
        NumericCheck::new("wigner_homomorphism", params.clone(), hom, tol),
        NumericCheck::new("wigner_unitarity", params, unit, tol),
    ])
}

/// Iwasawa reconstruction and the angle round trip at `count` seeded points.
pub fn check_iwasawa(count: usize, seed: u64, tol: f64) -> Result<Vec<NumericCheck>, OracleError> {
    let errs: Vec<(f64, f64)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let g = sample_point(seed, i);
            let f = iwasawa(&g)?;
            let e = euler_from_k(&f.kappa)?;
            let round_trip = crate::group::max_abs(&(k_from_euler(&e) - f.kappa));
            Ok((reconstruction_error(&g, &f), round_trip))
        })
        .collect::<Result<_, OracleError>>()?;
    let params = json!({ "points": count, "seed": seed });
    let recon = errs.iter().map(|e| e.0).fold(0.0, f64::max);
    let trip = errs.iter().map(|e| e.1).fold(0.0, f64::max);
    Ok(vec![
        NumericCheck::new("iwasawa_reconstruction", params.clone(), recon, tol),
        NumericCheck::new("euler_round_trip", params, trip, tol),
    ])
}

/// Pairwise inner products of all admissible indices (`k ≤ k_max`, `2j ≤ j2_max`).
///
/// Off-diagonal pairs must vanish; the diagonal must equal `1/(2j+1)`.
pub fn check_orthogonality(k_max: i64, j2_max: i64, tol: f64) -> NumericCheck {
    let mut indices: Vec<WignerIndex> = (0..=k_max).flat_map(|k| admissible_indices(k, j2_max)).collect();
    indices.sort();
    indices.dedup();
    let worst = indices
        .par_iter()
        .enumerate()
        .map(|(a, i1)| {
            indices[a..]
                .iter()
                .map(|i2| {
                    let ip = quadrature_ip(i1, i2, nodes_for(i1, i2));
                    let expected = if i1 == i2 { 1.0 / (i1.j.to_f64() * 2.0 + 1.0) } else { 0.0 };
                    (ip - expected).norm()
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    let pairs = indices.len() * (indices.len() + 1) / 2;
    NumericCheck::new(
        "peter_weyl_orthogonality",
        json!({ "k_max": k_max, "j2_max": j2_max, "indices": indices.len(), "pairs": pairs }),
        worst,
        tol,
    )
}

/// Worst record per check name, in first-seen order.
pub fn summarize(records: &[NumericCheck]) -> Vec<NumericCheck> {
    let mut out: Vec<NumericCheck> = Vec::new();
    for r in records {
        match out.iter_mut().find(|o| o.check == r.check) {
            Some(o) => {
                if r.max_rel_err > o.max_rel_err || r.max_rel_err.is_nan() {
                    o.max_rel_err = r.max_rel_err;
                    o.params = r.params.clone();
                }
                o.pass &= r.pass;
            }
            None => out.push(r.clone()),
        }
    }
    out
}
