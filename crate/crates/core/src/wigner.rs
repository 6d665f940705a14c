//! Symbolic `K`-finite vectors of the principal series as sparse combinations
//! of Wigner functions `W^{j,n}_{m₁,m₂}`, with the action of `𝔤_ℂ` by left
//! differentiation.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::lie::LieBasisSymbol;
use crate::lincomb::LinComb;
use crate::scalar::{ComplexRadical, RadicalScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WignerError {
    #[error("{generator} sends {source_index} to invalid index {target} with nonzero coefficient {coeff}")]
    InadmissibleResult { generator: LieBasisSymbol, source_index: WignerIndex, target: WignerIndex, coeff: String },
    #[error("{family} index l = {l} out of range for k = {k}")]
    OutOfRange { family: &'static str, k: i64, l: i64 },
    #[error("{0} is not a generator of the expected kind")]
    WrongGenerator(LieBasisSymbol),
}

/// An exact half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    pub doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    pub const fn from_doubled(doubled: i64) -> Self {
        Self { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { doubled: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn abs(self) -> Self {
        Self { doubled: self.doubled.abs() }
    }

    pub fn to_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Label of the Wigner function `W^{j,n}_{m₁,m₂}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WignerIndex {
    pub j: HalfInt,
    pub n: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
}

impl WignerIndex {
    pub fn new(j: HalfInt, n: HalfInt, m1: HalfInt, m2: HalfInt) -> Self {
        Self { j, n, m1, m2 }
    }

    /// Builds an index from doubled values `(2j, 2n, 2m₁, 2m₂)`.
    pub fn from_doubled(j2: i64, n2: i64, m1_2: i64, m2_2: i64) -> Self {
        Self::new(
            HalfInt::from_doubled(j2),
            HalfInt::from_doubled(n2),
            HalfInt::from_doubled(m1_2),
            HalfInt::from_doubled(m2_2),
        )
    }

    pub fn doubled(&self) -> (i64, i64, i64, i64) {
        (self.j.doubled, self.n.doubled, self.m1.doubled, self.m2.doubled)
    }

    /// `j ≥ 0`, `|m₁|, |m₂| ≤ j`, and `j + m₁`, `j + m₂`, `j + n` integral.
    pub fn is_valid(&self) -> bool {
        self.j.doubled >= 0
            && self.m1.abs() <= self.j
            && self.m2.abs() <= self.j
            && (self.j + self.m1).is_integer()
            && (self.j + self.m2).is_integer()
            && (self.j + self.n).is_integer()
    }

    fn shifted(&self, dj: i64, dn: i64, dm1: i64, dm2: i64) -> Self {
        Self::from_doubled(self.j.doubled + dj, self.n.doubled + dn, self.m1.doubled + dm1, self.m2.doubled + dm2)
    }
}

impl fmt::Display for WignerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W(j={}, n={}, m1={}, m2={})", self.j, self.n, self.m1, self.m2)
    }
}

impl fmt::Debug for WignerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for WignerIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WignerIndex", 4)?;
        st.serialize_field("j2", &self.j.doubled)?;
        st.serialize_field("n2", &self.n.doubled)?;
        st.serialize_field("m1_2", &self.m1.doubled)?;
        st.serialize_field("m2_2", &self.m2.doubled)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for WignerIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            j2: i64,
            n2: i64,
            m1_2: i64,
            m2_2: i64,
        }
        let w = Wire::deserialize(d)?;
        Ok(WignerIndex::from_doubled(w.j2, w.n2, w.m1_2, w.m2_2))
    }
}

/// The character parameter `k ≥ 0` of the inducing character `r³(e^{it})^{2k+3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterParams {
    pub k: i64,
}

impl CharacterParams {
    pub fn admits(&self, idx: &WignerIndex) -> bool {
        admissible(idx, self.k)
    }
}

/// A finite combination of Wigner functions.
pub type KVector = LinComb<WignerIndex>;

/// Whether `W^{j,n}_{m₁,m₂}` lies in the `K`-finite part of the principal series
/// attached to `k`: `−3j − 2k − 3 ≤ n ≤ 3j − 2k − 3` and `3m₂ − 2k − 3 = n`.
pub fn admissible(idx: &WignerIndex, k: i64) -> bool {
    let (j2, n2, _, m2_2) = idx.doubled();
    let shift = 2 * (2 * k + 3);
    let bounds = -3 * j2 - shift <= n2 && n2 <= 3 * j2 - shift;
    bounds && 3 * m2_2 - shift == n2
}

/// Which radicand to use in the second term of the `X₃` formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum X3Variant {
    /// `√((j − m₁ + 1)(j − m₂ + 1))`, mirroring the `X₄` formula.
    #[default]
    Plus1,
    /// `√((j − m₁ + 2)(j − m₂ + 1))`.
    Plus2,
}

impl X3Variant {
    pub const BOTH: [X3Variant; 2] = [X3Variant::Plus1, X3Variant::Plus2];

    pub fn label(self) -> &'static str {
        match self {
            X3Variant::Plus1 => "plus1",
            X3Variant::Plus2 => "plus2",
        }
    }
}

fn exact_half(doubled: i64) -> i64 {
    debug_assert!(doubled % 2 == 0, "expected an integer, got {doubled}/2");
    doubled / 2
}

/// `√(a·b) · num / den` for integers `a, b ≥ 0`.
fn root_times(a: i64, b: i64, num: i64, den: i64) -> ComplexRadical {
    let prod = a * b;
    if prod <= 0 || num == 0 {
        return ComplexRadical::zero();
    }
    let root = RadicalScalar::sqrt_int(prod as u64);
    ComplexRadical::real(root.scale(&crate::scalar::rat(num, den)))
}

/// Left-differentiation action of `U₀, U₁ ± iU₂, U₃` on a single Wigner function.
pub fn act_l_index(gen: LieBasisSymbol, idx: &WignerIndex) -> Result<KVector, WignerError> {
    let (j2, n2, m1_2, _) = idx.doubled();
    let i = ComplexRadical::i();
    let out = match gen {
        LieBasisSymbol::U0 => KVector::single(*idx, i.scale_real(&RadicalScalar::from_frac(n2, 2))),
        LieBasisSymbol::U3 => KVector::single(*idx, i.scale_real(&RadicalScalar::from_frac(m1_2, 2))),
        LieBasisSymbol::U1pU2 | LieBasisSymbol::U1mU2 => {
            let raise = gen == LieBasisSymbol::U1pU2;
            let (a, b, shift) = if raise {
                (exact_half(j2 - m1_2), exact_half(j2 + m1_2 + 2), 2)
            } else {
                (exact_half(j2 + m1_2), exact_half(j2 - m1_2 + 2), -2)
            };
            let coeff = &root_times(a, b, 1, 1) * &(-i);
            KVector::single(idx.shifted(0, 0, shift, 0), coeff)
        }
        other => return Err(WignerError::WrongGenerator(other)),
    };
    Ok(out)
}

/// Left-differentiation action of `X₁…X₄` on a single Wigner function.
///
/// Each generator moves `j` by `±½`, `n` by `±3/2` and both `m`'s by `±½`.
/// A nonzero coefficient landing on an invalid index is reported as an error.
pub fn act_p_index(gen: LieBasisSymbol, idx: &WignerIndex, variant: X3Variant) -> Result<KVector, WignerError> {
    let (j2, n2, m1_2, m2_2) = idx.doubled();
    let den = 2 * (j2 + 1);
    // Integral quantities that occur in the formulas.
    let jm1m = exact_half(j2 - m1_2);
    let jm1p = exact_half(j2 + m1_2);
    let jm2m = exact_half(j2 - m2_2);
    let jm2p = exact_half(j2 + m2_2);
    // 2j + m₂ − n and 2j − m₂ + n
    let a = exact_half(2 * j2 + m2_2 - n2);
    let b = exact_half(2 * j2 - m2_2 + n2);

    let terms: [(ComplexRadical, WignerIndex); 2] = match gen {
        LieBasisSymbol::X1 => [
            (root_times(jm1m, jm2m, -(a - 1), den), idx.shifted(-1, 3, 1, 1)),
            (root_times(jm1p + 1, jm2p + 1, b + 3, den), idx.shifted(1, 3, 1, 1)),
        ],
        LieBasisSymbol::X2 => [
            (root_times(jm1p, jm2m, -(a - 1), den), idx.shifted(-1, 3, -1, 1)),
            (root_times(jm1m + 1, jm2p + 1, -(b + 3), den), idx.shifted(1, 3, -1, 1)),
        ],
        LieBasisSymbol::X3 => {
            let extra = match variant {
                X3Variant::Plus1 => 1,
                X3Variant::Plus2 => 2,
            };
            [
                (root_times(jm1p, jm2p, -(b - 1), den), idx.shifted(-1, -3, -1, -1)),
                (root_times(jm1m + extra, jm2m + 1, a + 3, den), idx.shifted(1, -3, -1, -1)),
            ]
        }
        LieBasisSymbol::X4 => [
            (root_times(jm1m, jm2p, b - 1, den), idx.shifted(-1, -3, 1, -1)),
            (root_times(jm1p + 1, jm2m + 1, a + 3, den), idx.shifted(1, -3, 1, -1)),
        ],
        other => return Err(WignerError::WrongGenerator(other)),
    };

    let mut out = KVector::zero();
    for (coeff, target) in terms {
        if coeff.is_zero() {
            continue;
        }
        if !target.is_valid() {
            return Err(WignerError::InadmissibleResult {
                generator: gen,
                source_index: *idx,
                target,
                coeff: coeff.to_string(),
            });
        }
        out.add_term(target, coeff);
    }
    Ok(out)
}

/// Action of `U₀, U₁ ± iU₂, U₃` on a combination of Wigner functions.
pub fn act_l(gen: LieBasisSymbol, v: &KVector) -> Result<KVector, WignerError> {
    v.try_map_linear(|idx| act_l_index(gen, idx))
}

/// Action of `X₁…X₄` on a combination of Wigner functions.
pub fn act_p(gen: LieBasisSymbol, v: &KVector, variant: X3Variant) -> Result<KVector, WignerError> {
    v.try_map_linear(|idx| act_p_index(gen, idx, variant))
}

/// Action of any of the eight named generators.
pub fn act(gen: LieBasisSymbol, v: &KVector, variant: X3Variant) -> Result<KVector, WignerError> {
    if gen.is_compact() {
        act_l(gen, v)
    } else {
        act_p(gen, v, variant)
    }
}

fn sqrt_frac(num: i64, den: i64) -> RadicalScalar {
    RadicalScalar::sqrt_rational(&crate::scalar::rat(num, den)).expect("nonnegative")
}

/// Compares `X₁, X₃, X₄` acting on each `W_{χ,l}ᵏ` with the closed forms
/// `X₁·W_{χ,l} = √((l+1)/(k+2)) W_l`,
/// `X₃·W_{χ,l} = (√l √(k+1)/(k+2)) W_{0,l−1} + ((k+3)/(k+2)) √(k+2−l) W̃_{0,l−1}` and
/// `X₄·W_{χ,l} = −(√(k+1−l) √(k+1)/(k+2)) W_{0,l} + ((k+3)/(k+2)) √(l+1) W̃_{0,l}`.
pub fn verify_chi_family_actions(k: i64, variant: X3Variant) -> Result<Vec<crate::report::CheckResult>, WignerError> {
    use crate::report::CheckResult;
    let params =
        |gen: &str, l: i64| serde_json::json!({ "k": k, "l": l, "generator": gen, "x3_variant": variant.label() });
    let real = ComplexRadical::real;
    let q = |n: i64, d: i64| crate::scalar::rat(n, d);
    let mut out = Vec::new();
    let mut compare = |gen: LieBasisSymbol, l: i64, expected: KVector| -> Result<(), WignerError> {
        let got = act_p(gen, &KVector::basis(family_w_chi(k, l)?), variant)?;
        let pass = got == expected;
        let mut r = CheckResult::new("chi_family_action", params(gen.label(), l), pass);
        if !pass {
            r = r.with_detail(format!("expected {expected:?}, got {got:?}"));
        }
        out.push(r);
        Ok(())
    };
    for l in 0..=k {
        compare(LieBasisSymbol::X1, l, KVector::single(family_w(k, l)?, real(sqrt_frac(l + 1, k + 2))))?;
    }
    for l in 1..=k + 1 {
        let a = sqrt_frac(l * (k + 1), 1).scale(&q(1, k + 2));
        let b = sqrt_frac(k + 2 - l, 1).scale(&q(k + 3, k + 2));
        let mut e = KVector::single(family_w0(k, l - 1)?, real(a));
        e.add_term(family_w0_tilde(k, l - 1)?, real(b));
        compare(LieBasisSymbol::X3, l, e)?;
    }
    for l in 0..=k {
        let a = sqrt_frac((k + 1 - l) * (k + 1), 1).scale(&q(-1, k + 2));
        let b = sqrt_frac(l + 1, 1).scale(&q(k + 3, k + 2));
        let mut e = KVector::single(family_w0(k, l)?, real(a));
        e.add_term(family_w0_tilde(k, l)?, real(b));
        compare(LieBasisSymbol::X4, l, e)?;
    }
    Ok(out)
}

/// Valid, admissible indices whose image under `gen` (one of `X₁…X₄`) has a
/// nonzero component along `target`.
pub fn p_preimages(
    gen: LieBasisSymbol,
    target: &WignerIndex,
    k: i64,
    variant: X3Variant,
) -> Result<Vec<WignerIndex>, WignerError> {
    let (dn, dm1, dm2) = match gen {
        LieBasisSymbol::X1 => (3, 1, 1),
        LieBasisSymbol::X2 => (3, -1, 1),
        LieBasisSymbol::X3 => (-3, -1, -1),
        LieBasisSymbol::X4 => (-3, 1, -1),
        other => return Err(WignerError::WrongGenerator(other)),
    };
    let mut out = Vec::new();
    for dj in [-1, 1] {
        let src = target.shifted(-dj, -dn, -dm1, -dm2);
        if !src.is_valid() || !admissible(&src, k) {
            continue;
        }
        if !act_p_index(gen, &src, variant)?.coeff(target).is_none() {
            out.push(src);
        }
    }
    Ok(out)
}

fn check_range(family: &'static str, k: i64, l: i64, lo: i64, hi: i64) -> Result<(), WignerError> {
    if k < 0 || l < lo || l > hi {
        Err(WignerError::OutOfRange { family, k, l })
    } else {
        Ok(())
    }
}

/// `W_lᵏ = W^{k/2+1, −k/2}_{−k/2+l, k/2+1}` for `l ∈ {−1, …, k+1}`.
pub fn family_w(k: i64, l: i64) -> Result<WignerIndex, WignerError> {
    check_range("W", k, l, -1, k + 1)?;
    Ok(WignerIndex::from_doubled(k + 2, -k, -k + 2 * l, k + 2))
}

/// `W_{0,l}ᵏ = W^{k/2, −k/2−3}_{−k/2+l, k/2}` for `l ∈ {0, …, k}`.
pub fn family_w0(k: i64, l: i64) -> Result<WignerIndex, WignerError> {
    check_range("W0", k, l, 0, k)?;
    Ok(WignerIndex::from_doubled(k, -k - 6, -k + 2 * l, k))
}

/// `W̃_{0,l}ᵏ = W^{k/2+1, −k/2−3}_{−k/2+l, k/2}` for `l ∈ {0, …, k+1}`.
pub fn family_w0_tilde(k: i64, l: i64) -> Result<WignerIndex, WignerError> {
    check_range("W0~", k, l, 0, k + 1)?;
    Ok(WignerIndex::from_doubled(k + 2, -k - 6, -k + 2 * l, k))
}

/// `W_{χ,l}ᵏ = W^{(k+1)/2, −(k+3)/2}_{−(k+1)/2+l, (k+1)/2}` for `l ∈ {0, …, k+1}`.
pub fn family_w_chi(k: i64, l: i64) -> Result<WignerIndex, WignerError> {
    check_range("Wchi", k, l, 0, k + 1)?;
    Ok(WignerIndex::from_doubled(k + 1, -k - 3, -k - 1 + 2 * l, k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{adjoint_on_p, LieBasisSymbol::*};
    use proptest::prelude::*;

    fn ci(n: i64, d: i64) -> ComplexRadical {
        ComplexRadical::imag(RadicalScalar::from_frac(n, d))
    }

    fn sqrt(n: i64) -> ComplexRadical {
        ComplexRadical::real(RadicalScalar::sqrt_int(n as u64))
    }

    #[test]
    fn halfint_basics() {
        let h = HalfInt::from_doubled(3);
        assert!(!h.is_integer());
        assert_eq!(h.to_string(), "3/2");
        assert_eq!((h + HalfInt::HALF).as_int(), Some(2));
        assert_eq!(-h, HalfInt::from_doubled(-3));
    }

    #[test]
    fn admissibility_examples() {
        for k in 0..12 {
            assert!(admissible(&WignerIndex::from_doubled(k + 2, -k, -k, k + 2), k));
            assert!(admissible(&WignerIndex::from_doubled(0, -4 * k - 6, 0, 0), k));
        }
        assert!(!admissible(&WignerIndex::from_doubled(0, 0, 0, 0), 0));
    }

    #[test]
    fn families() {
        assert_eq!(family_w_chi(0, 0).unwrap(), WignerIndex::from_doubled(1, -3, -1, 1));
        for k in 0..10 {
            for l in -1..=k + 1 {
                let w = family_w(k, l).unwrap();
                assert!(w.is_valid() && admissible(&w, k));
            }
            for l in 0..=k {
                let w = family_w0(k, l).unwrap();
                assert!(w.is_valid() && admissible(&w, k));
            }
            for l in 0..=k + 1 {
                for w in [family_w0_tilde(k, l).unwrap(), family_w_chi(k, l).unwrap()] {
                    assert!(w.is_valid() && admissible(&w, k));
                }
            }
        }
        assert_eq!(family_w(3, -1).unwrap().m1, HalfInt::from_doubled(-5));
        assert!(matches!(family_w(3, -2), Err(WignerError::OutOfRange { .. })));
        assert!(family_w0(3, 4).is_err());
        assert!(family_w_chi(3, 5).is_err());
    }

    #[test]
    fn compact_action_examples() {
        let idx = WignerIndex::from_doubled(3, -5, 1, 3);
        let v = KVector::basis(idx);
        assert_eq!(act_l(U0, &v).unwrap(), KVector::single(idx, ci(-5, 2)));
        assert_eq!(act_l(U3, &v).unwrap(), KVector::single(idx, ci(1, 2)));
        let bottom = KVector::basis(WignerIndex::from_doubled(3, -5, -3, 3));
        assert!(act_l(U1mU2, &bottom).unwrap().is_zero());
        for k in 0..6 {
            for l in 0..=k {
                let v = KVector::basis(family_w_chi(k, l).unwrap());
                let expected = KVector::single(
                    family_w_chi(k, l + 1).unwrap(),
                    &(&sqrt(k + 1 - l) * &sqrt(l + 1)) * &(-ComplexRadical::i()),
                );
                assert_eq!(act_l(U1pU2, &v).unwrap(), expected);
            }
        }
    }

    #[test]
    fn noncompact_action_examples() {
        let v = KVector::basis(WignerIndex::from_doubled(0, -6, 0, 0));
        assert!(act_p(X1, &v, X3Variant::Plus1).unwrap().is_zero());
        for k in 0..8 {
            for l in 0..=k + 1 {
                let v = KVector::basis(family_w_chi(k, l).unwrap());
                let x1 = act_p(X1, &v, X3Variant::Plus1).unwrap();
                let c = ComplexRadical::real(RadicalScalar::sqrt_rational(&crate::scalar::rat(l + 1, k + 2)).unwrap());
                assert_eq!(x1, KVector::single(family_w(k, l).unwrap(), c));
            }
        }
    }

    #[test]
    fn chi_family_formulas() {
        for k in 0..6 {
            assert!(verify_chi_family_actions(k, X3Variant::Plus1).unwrap().iter().all(|r| r.pass));
            assert!(!verify_chi_family_actions(k, X3Variant::Plus2).unwrap().iter().all(|r| r.pass));
        }
    }

    #[test]
    fn wrong_generator() {
        let v = KVector::basis(WignerIndex::from_doubled(1, -3, -1, 1));
        assert!(matches!(act_l(X1, &v), Err(WignerError::WrongGenerator(X1))));
        assert!(matches!(act_p(U0, &v, X3Variant::Plus1), Err(WignerError::WrongGenerator(U0))));
    }

    #[test]
    fn tripwire_fires_on_invalid_target() {
        // An index violating |m₂| ≤ j makes the formulas produce invalid targets.
        let bogus = WignerIndex::from_doubled(0, -6, 0, 2);
        let err = act_p_index(X2, &bogus, X3Variant::Plus1);
        assert!(matches!(err, Err(WignerError::InadmissibleResult { .. })), "{err:?}");
    }

    #[test]
    fn preimages_of_w0() {
        for k in 0..6 {
            let mut found = std::collections::BTreeSet::new();
            for l in 0..=k {
                let t = family_w0(k, l).unwrap();
                for g in [X3, X4] {
                    found.extend(p_preimages(g, &t, k, X3Variant::Plus1).unwrap());
                }
            }
            let expected: std::collections::BTreeSet<_> = (0..=k + 1).map(|l| family_w_chi(k, l).unwrap()).collect();
            assert_eq!(found, expected);
        }
    }

    fn admissible_index(k: i64) -> impl Strategy<Value = WignerIndex> {
        // Choose m₂ freely, derive n from the second condition, then j and m₁.
        (0i64..=12, -12i64..=12, 0i64..=24).prop_filter_map("valid", move |(j2, m2_2, t)| {
            let n2 = 3 * m2_2 - 2 * (2 * k + 3);
            let m1_2 = -j2 + 2 * (t % (j2 + 1));
            let idx = WignerIndex::from_doubled(j2, n2, m1_2, m2_2);
            (idx.is_valid() && admissible(&idx, k)).then_some(idx)
        })
    }

    fn bracket_action(u: LieBasisSymbol, xg: u8, v: &KVector, variant: X3Variant) -> KVector {
        let coeffs = adjoint_on_p(&u.matrix(), xg).unwrap();
        let mut out = KVector::zero();
        for t in 1..=4u8 {
            if !coeffs.coeff(t).is_zero() {
                let g = LieBasisSymbol::from_x_index(t).unwrap();
                out = out.plus(&act_p(g, v, variant).unwrap().scaled(coeffs.coeff(t)));
            }
        }
        out
    }

    proptest! {
        #[test]
        fn closure_and_relations((k, idx) in (0i64..5).prop_flat_map(|k| (Just(k), admissible_index(k)))) {
            let v = KVector::basis(idx);
            for g in LieBasisSymbol::ALL {
                let img = act(g, &v, X3Variant::Plus1).unwrap();
                for (w, _) in &img {
                    prop_assert!(w.is_valid() && admissible(w, k));
                }
            }
            // [U₁+iU₂, U₁−iU₂] = 2i·U₃
            let pm = act_l(U1pU2, &act_l(U1mU2, &v).unwrap()).unwrap();
            let mp = act_l(U1mU2, &act_l(U1pU2, &v).unwrap()).unwrap();
            let u3 = act_l(U3, &v).unwrap().scaled(&ci(2, 1));
            prop_assert_eq!(pm.minus(&mp), u3);
            // commutativity inside 𝔭⁺ and 𝔭⁻
            for (a, b) in [(X1, X2), (X3, X4)] {
                let ab = act_p(a, &act_p(b, &v, X3Variant::Plus1).unwrap(), X3Variant::Plus1).unwrap();
                let ba = act_p(b, &act_p(a, &v, X3Variant::Plus1).unwrap(), X3Variant::Plus1).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }

        #[test]
        fn brackets_match_matrices(idx in (0i64..5).prop_flat_map(admissible_index)) {
            let v = KVector::basis(idx);
            let var = X3Variant::Plus1;
            for u in LieBasisSymbol::L_GENERATORS {
                for xg in 1..=4u8 {
                    let xs = LieBasisSymbol::from_x_index(xg).unwrap();
                    let lhs = act_l(u, &act_p(xs, &v, var).unwrap()).unwrap()
                        .minus(&act_p(xs, &act_l(u, &v).unwrap(), var).unwrap());
                    prop_assert_eq!(lhs, bracket_action(u, xg, &v, var), "{} {}", u, xs);
                }
            }
        }
    }

    #[test]
    fn plus2_breaks_bracket_consistency() {
        let mut broken = false;
        for k in 0..3 {
            for l in 0..=k + 1 {
                let v = KVector::basis(family_w_chi(k, l).unwrap());
                for u in LieBasisSymbol::L_GENERATORS {
                    let var = X3Variant::Plus2;
                    let lhs = act_l(u, &act_p(X3, &v, var).unwrap())
                        .unwrap()
                        .minus(&act_p(X3, &act_l(u, &v).unwrap(), var).unwrap());
                    if lhs != bracket_action(u, 3, &v, var) {
                        broken = true;
                    }
                }
            }
        }
        assert!(broken);
    }

    #[test]
    fn serialization_uses_doubled_fields() {
        let idx = WignerIndex::from_doubled(1, -3, -1, 1);
        let s = serde_json::to_string(&idx).unwrap();
        assert_eq!(s, r#"{"j2":1,"n2":-3,"m1_2":-1,"m2_2":1}"#);
        assert_eq!(serde_json::from_str::<WignerIndex>(&s).unwrap(), idx);
    }
}
