//! The coefficient module `V_k` of homogeneous degree-`k` polynomials in
//! `x, y, z`, with `𝔤_ℂ` acting by derivations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lie::{LieBasisSymbol, Matrix3};
use crate::lincomb::LinComb;
use crate::scalar::ComplexRadical;

/// `x^a y^b z^c`, serialized as `[a, b, c]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Self([a, b, c])
    }

    /// `x^{k−l} y^l`.
    pub fn xy(k: u32, l: u32) -> Self {
        assert!(l <= k, "exponent {l} exceeds degree {k}");
        Self([k - l, l, 0])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All monomials of degree `k`, in increasing order.
    pub fn all(k: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
        for a in 0..=k {
            for b in 0..=k - a {
                out.push(Monomial([a, b, k - a - b]));
            }
        }
        out.sort();
        out
    }

    pub fn eval(&self, v: [num_complex::Complex64; 3]) -> num_complex::Complex64 {
        (0..3).map(|i| v[i].powu(self.0[i])).product()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        let parts: Vec<String> = (0..3)
            .filter(|i| self.0[*i] > 0)
            .map(|i| if self.0[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], self.0[i]) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type PolyVector = LinComb<Monomial>;

/// Dimension `(k+1)(k+2)/2` of `V_k`.
pub fn dim(k: u32) -> usize {
    ((k + 1) * (k + 2) / 2) as usize
}

/// Derivation `X·p = Σ_i (Σ_j X_{ji} x_j) ∂p/∂x_i` on one monomial.
pub fn act_monomial(m: &Matrix3, mono: &Monomial) -> PolyVector {
    let mut out = PolyVector::zero();
    for i in 0..3 {
        let e = mono.0[i];
        if e == 0 {
            continue;
        }
        for j in 0..3 {
            let entry = m.get(j, i);
            if entry.is_zero() {
                continue;
            }
            let mut exps = mono.0;
            exps[i] -= 1;
            exps[j] += 1;
            out.add_term(Monomial(exps), entry * &ComplexRadical::from_int(e.into()));
        }
    }
    out
}

/// Action of an arbitrary matrix of `𝔤𝔩₃(ℂ)` on `V_k`, differentiating
/// `p ↦ p(Mᵀ(x, y, z)ᵀ)`.
pub fn act_poly(m: &Matrix3, p: &PolyVector) -> PolyVector {
    p.map_linear(|mono| act_monomial(m, mono))
}

/// Action of a named generator on `V_k`.
pub fn act_poly_l(gen: LieBasisSymbol, p: &PolyVector) -> PolyVector {
    act_poly(&gen.matrix(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{bracket, LieBasisSymbol::*};
    use crate::scalar::RadicalScalar;

    fn ci(n: i64, d: i64) -> ComplexRadical {
        ComplexRadical::imag(RadicalScalar::from_frac(n, d))
    }

    #[test]
    fn examples_on_xy_monomials() {
        for k in 0..7u32 {
            for l in 0..=k {
                let p = PolyVector::basis(Monomial::xy(k, l));
                let x3 = act_poly_l(X3, &p);
                if l == k {
                    assert!(x3.is_zero());
                } else {
                    let expected =
                        PolyVector::single(Monomial::new(k - l - 1, l, 1), ComplexRadical::from_int((k - l).into()));
                    assert_eq!(x3, expected);
                }
                assert!(act_poly_l(X1, &p).is_zero());
                assert!(act_poly_l(X2, &p).is_zero());
                assert_eq!(act_poly_l(U0, &p), p.scaled(&ci(k.into(), 2)));
                assert_eq!(act_poly_l(U3, &p), p.scaled(&ci(i64::from(k) - 2 * i64::from(l), 2)));
                if l >= 1 {
                    let expected = PolyVector::single(Monomial::xy(k, l - 1), ci(l.into(), 1));
                    assert_eq!(act_poly_l(U1pU2, &p), expected);
                }
            }
            assert!(act_poly_l(U1mU2, &PolyVector::basis(Monomial::xy(k, k))).is_zero());
        }
    }

    #[test]
    fn x1_is_x_d_dz() {
        let p = PolyVector::basis(Monomial::new(1, 2, 3));
        assert_eq!(act_poly_l(X1, &p), PolyVector::single(Monomial::new(2, 2, 2), ComplexRadical::from_int(3)));
    }

    #[test]
    fn dimension_and_degree() {
        for k in 0..9 {
            let all = Monomial::all(k);
            assert_eq!(all.len(), dim(k));
            for m in &all {
                for g in LieBasisSymbol::ALL {
                    for (img, _) in &act_poly_l(g, &PolyVector::basis(*m)) {
                        assert_eq!(img.degree(), k);
                    }
                }
            }
        }
    }

    #[test]
    fn representation_property() {
        for k in 0..=8 {
            for mono in Monomial::all(k) {
                let p = PolyVector::basis(mono);
                for a in LieBasisSymbol::ALL {
                    for b in LieBasisSymbol::ALL {
                        let (ma, mb) = (a.matrix(), b.matrix());
                        let lhs = act_poly(&bracket(&ma, &mb), &p);
                        let rhs = act_poly(&ma, &act_poly(&mb, &p)).minus(&act_poly(&mb, &act_poly(&ma, &p)));
                        assert_eq!(lhs, rhs, "{a} {b} {mono}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_stays_zero() {
        assert!(act_poly_l(U0, &PolyVector::zero()).is_zero());
    }

    #[test]
    fn monomial_serialization() {
        assert_eq!(serde_json::to_string(&Monomial::new(2, 0, 1)).unwrap(), "[2,0,1]");
    }
}
