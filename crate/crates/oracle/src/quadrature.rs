//! Inner products of Wigner functions over U(2) by product quadrature.

use std::f64::consts::PI;

use num_complex::Complex64;
use su21_core::wigner::{HalfInt, WignerIndex};

use crate::wigner::{d_function, eval_wigner, EulerAngles};

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 0 { 0.0 } else { p0 };
            deriv = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / deriv;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Trapezoid sum of `e^{iωx}` over `[start, start + length)`.
fn trapezoid_phase(freq: f64, start: f64, length: f64, nodes: usize) -> Complex64 {
    let step = length / nodes as f64;
    (0..nodes).map(|t| Complex64::from_polar(step, freq * (start + t as f64 * step))).sum()
}

/// The periods used for `ζ`, `φ`, `ψ`.
const ZETA: (f64, f64) = (0.0, 4.0 * PI);
const PHI: (f64, f64) = (-PI, 2.0 * PI);
const PSI: (f64, f64) = (-PI, 4.0 * PI);

fn theta_integral(a: (HalfInt, HalfInt, HalfInt), b: (HalfInt, HalfInt, HalfInt), xs: &[f64], ws: &[f64]) -> f64 {
    xs.iter()
        .zip(ws)
        .map(|(&x, &w)| {
            let theta = x.clamp(-1.0, 1.0).acos();
            w * d_function(a.0, a.1, a.2, theta) * d_function(b.0, b.1, b.2, theta)
        })
        .sum()
}

/// `∫ W₁ · conj(W₂) dμ` with `∫ 1 dμ = 1`.
///
/// Every Wigner function factors into one-variable pieces, so the product rule
/// (trapezoid in `ζ, φ, ψ`, Gauss–Legendre in `cos θ`) is evaluated one axis at a time.
pub fn quadrature_ip(idx1: &WignerIndex, idx2: &WignerIndex, nodes: usize) -> Complex64 {
    let (xs, ws) = gauss_legendre(nodes);
    let zeta = trapezoid_phase((idx1.n - idx2.n).to_f64(), ZETA.0, ZETA.1, nodes);
    let phi = trapezoid_phase((idx1.m2 - idx2.m2).to_f64(), PHI.0, PHI.1, nodes);
    let psi = trapezoid_phase((idx1.m1 - idx2.m1).to_f64(), PSI.0, PSI.1, nodes);
    let theta = theta_integral((idx1.j, idx1.m1, idx1.m2), (idx2.j, idx2.m1, idx2.m2), &xs, &ws);
    let volume = ZETA.1 * PHI.1 * PSI.1 * ws.iter().sum::<f64>();
    zeta * phi * psi * theta / volume
}

/// The same rule as [`quadrature_ip`] summed over the full four-dimensional grid.
pub fn quadrature_ip_grid(idx1: &WignerIndex, idx2: &WignerIndex, nodes: usize) -> Complex64 {
    let (xs, ws) = gauss_legendre(nodes);
    let axis = |(start, length): (f64, f64)| -> Vec<f64> {
        (0..nodes).map(|t| start + t as f64 * length / nodes as f64).collect()
    };
    let (zs, fs, ps) = (axis(ZETA), axis(PHI), axis(PSI));
    let mut total = Complex64::new(0.0, 0.0);
    let mut volume = 0.0;
    for (&x, &w) in xs.iter().zip(&ws) {
        let theta = x.clamp(-1.0, 1.0).acos();
        for &z in &zs {
            for &f in &fs {
                for &p in &ps {
                    let e = EulerAngles::new(z, f, theta, p);
                    total += w * eval_wigner(idx1, &e) * eval_wigner(idx2, &e).conj();
                    volume += w;
                }
            }
        }
    }
    total / volume
}

/// Trapezoid nodes needed to resolve the phases of two indices.
pub fn nodes_for(idx1: &WignerIndex, idx2: &WignerIndex) -> usize {
    let need = |i: &WignerIndex| (2.0 * (2.0 * i.j.to_f64() + i.n.to_f64().abs())) as usize + 4;
    need(idx1).max(need(idx2))
}
