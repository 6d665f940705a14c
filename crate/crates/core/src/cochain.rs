//! The relative Chevalley–Eilenberg complex
//! `Hom_𝔩(Λ^q 𝔭_ℂ, I ⊗ V_k)` with its differential, the explicit cochains
//! `χᵏ`, `ψᵏ`, `ψ₀ᵏ`, and exact verifiers for the identities relating them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::lie::{self, LieBasisSymbol, LieError, Wedge};
use crate::linalg;
use crate::lincomb::LinComb;
use crate::poly::{act_monomial, Monomial};
use crate::report::CheckResult;
use crate::scalar::{ComplexRadical, RadicalScalar, Rational};
use crate::wigner::{self, family_w, family_w0, family_w_chi, WignerError, WignerIndex, X3Variant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error(transparent)]
    Wigner(#[from] WignerError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("[X{0}, X{1}] has a nonzero component in the complement of the compact part")]
    BracketNotInL(u8, u8),
    #[error("cochain degree {0} is outside 0..=4")]
    DegreeOutOfRange(usize),
    #[error("wedge {wedge} does not have degree {degree}")]
    WedgeDegree { wedge: Wedge, degree: usize },
    #[error("cochains for different k ({0} and {1})")]
    KMismatch(i64, i64),
}

pub type TensorKey = (WignerIndex, Monomial);

/// An element of `I ⊗ V_k`.
pub type TensorElement = LinComb<TensorKey>;

/// Leibniz action `X·(f ⊗ p) = (X·f) ⊗ p + f ⊗ (X·p)` of a named generator.
pub fn act_tensor(gen: LieBasisSymbol, t: &TensorElement, variant: X3Variant) -> Result<TensorElement, CochainError> {
    let matrix = gen.matrix();
    let mut out = TensorElement::zero();
    for ((w, m), c) in t {
        let wimg = wigner::act(gen, &LinComb::basis(*w), variant)?;
        for (w2, c2) in &wimg {
            out.add_term((*w2, *m), c * c2);
        }
        for (m2, c2) in &act_monomial(&matrix, m) {
            out.add_term((*w, *m2), c * c2);
        }
    }
    Ok(out)
}

/// A `q`-cochain: a value in `I ⊗ V_k` for every basis wedge of degree `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    k: i64,
    degree: usize,
    values: BTreeMap<Wedge, TensorElement>,
}

impl Cochain {
    pub fn zero(k: i64, degree: usize) -> Result<Self, CochainError> {
        if degree > 4 {
            return Err(CochainError::DegreeOutOfRange(degree));
        }
        let values = Wedge::all(degree).into_iter().map(|w| (w, TensorElement::zero())).collect();
        Ok(Self { k, degree, values })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, w: &Wedge) -> &TensorElement {
        &self.values[w]
    }

    pub fn set(&mut self, w: Wedge, value: TensorElement) -> Result<(), CochainError> {
        if w.degree() != self.degree {
            return Err(CochainError::WedgeDegree { wedge: w, degree: self.degree });
        }
        self.values.insert(w, value);
        Ok(())
    }

    /// All `(wedge, value)` pairs, wedges in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Wedge, &TensorElement)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(TensorElement::is_zero)
    }

    /// Wedges with a nonzero value.
    pub fn support(&self) -> Vec<Wedge> {
        self.values.iter().filter(|(_, v)| !v.is_zero()).map(|(w, _)| w.clone()).collect()
    }

    fn combine(
        &self,
        other: &Self,
        f: impl Fn(&TensorElement, &TensorElement) -> TensorElement,
    ) -> Result<Self, CochainError> {
        if self.k != other.k {
            return Err(CochainError::KMismatch(self.k, other.k));
        }
        if self.degree != other.degree {
            return Err(CochainError::DegreeOutOfRange(other.degree));
        }
        let values = self.values.iter().map(|(w, v)| (w.clone(), f(v, &other.values[w]))).collect();
        Ok(Self { k: self.k, degree: self.degree, values })
    }

    pub fn plus(&self, other: &Self) -> Result<Self, CochainError> {
        self.combine(other, |a, b| a.plus(b))
    }

    pub fn minus(&self, other: &Self) -> Result<Self, CochainError> {
        self.combine(other, |a, b| a.minus(b))
    }

    pub fn scaled(&self, c: &ComplexRadical) -> Self {
        let values = self.values.iter().map(|(w, v)| (w.clone(), v.scaled(c))).collect();
        Self { k: self.k, degree: self.degree, values }
    }

    /// Number of nonzero `(wedge, key)` coefficients.
    pub fn num_terms(&self) -> usize {
        self.values.values().map(TensorElement::len).sum()
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Cochain(k={}, degree={}) {{", self.k, self.degree)?;
        for (w, v) in &self.values {
            if !v.is_zero() {
                writeln!(f, "  {w} ↦ {v:?}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Checks that every `[X_i, X_j]` has no `𝔭_ℂ`-component, so the second sum of
/// the differential vanishes.
fn assert_p_brackets_vanish() -> Result<(), CochainError> {
    for ((i, j), proj) in lie::p_brackets_mod_l() {
        if !proj?.is_zero() {
            return Err(CochainError::BracketNotInL(i, j));
        }
    }
    Ok(())
}

/// `(dψ)(X_{i₀} ∧ … ∧ X_{i_q}) = Σ_s (−1)^s X_{i_s}·ψ(… X̂_{i_s} …)`.
///
/// The bracket terms of the general formula drop out because `𝔭_ℂ` brackets
/// into `𝔩_ℂ`; this is re-checked on every call.
pub fn differential(psi: &Cochain, variant: X3Variant) -> Result<Cochain, CochainError> {
    let q = psi.degree + 1;
    if q > 4 {
        return Err(CochainError::DegreeOutOfRange(q));
    }
    if q >= 2 {
        assert_p_brackets_vanish()?;
    }
    let mut out = Cochain::zero(psi.k, q)?;
    for w in Wedge::all(q) {
        let mut value = TensorElement::zero();
        for (s, &i) in w.indices().iter().enumerate() {
            let gen = LieBasisSymbol::from_x_index(i).expect("wedge index in 1..=4");
            let term = act_tensor(gen, psi.get(&w.omit(s)), variant)?;
            let sign = if s % 2 == 0 { 1 } else { -1 };
            value.add_scaled(&term, &ComplexRadical::from_int(sign));
        }
        out.values.insert(w, value);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceEntry {
    pub generator: LieBasisSymbol,
    pub wedge: Wedge,
    pub pass: bool,
}

/// Compares `U·ψ(w)` with `ψ(U·w)` for every compact generator `U` and basis wedge `w`.
pub fn check_equivariance(psi: &Cochain, variant: X3Variant) -> Result<Vec<EquivarianceEntry>, CochainError> {
    let mut out = Vec::new();
    for gen in LieBasisSymbol::L_GENERATORS {
        let matrix = gen.matrix();
        for w in Wedge::all(psi.degree) {
            let lhs = act_tensor(gen, psi.get(&w), variant)?;
            let mut rhs = TensorElement::zero();
            for (w2, c) in &lie::act_on_wedge(&matrix, &w)? {
                rhs.add_scaled(psi.get(w2), c);
            }
            out.push(EquivarianceEntry { generator: gen, wedge: w, pass: lhs == rhs });
        }
    }
    Ok(out)
}

pub fn is_equivariant(psi: &Cochain, variant: X3Variant) -> Result<bool, CochainError> {
    Ok(check_equivariance(psi, variant)?.iter().all(|e| e.pass))
}

/// Bidegree of a cochain's support under `Λ^q 𝔭_ℂ = ⊕ Λ^p 𝔭⁺ ∧ Λ^{q−p} 𝔭⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HodgeType {
    Zero,
    Pure { p: usize, q: usize },
    Mixed,
}

impl fmt::Display for HodgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HodgeType::Zero => write!(f, "zero"),
            HodgeType::Pure { p, q } => write!(f, "({p},{q})"),
            HodgeType::Mixed => write!(f, "mixed"),
        }
    }
}

impl Serialize for HodgeType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn hodge_type(psi: &Cochain) -> HodgeType {
    let types: BTreeSet<(usize, usize)> = psi.support().iter().map(Wedge::bidegree).collect();
    match types.len() {
        0 => HodgeType::Zero,
        1 => {
            let (p, q) = *types.iter().next().expect("one element");
            HodgeType::Pure { p, q }
        }
        _ => HodgeType::Mixed,
    }
}

fn binomial(n: i64, r: i64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(r))
}

fn sqrt_of(q: Rational) -> RadicalScalar {
    RadicalScalar::sqrt_rational(&q).expect("nonnegative")
}

/// The scalar sequences entering `ψᵏ`, `ψ₀ᵏ` and `χᵏ`, indexed by `l ∈ {0, …, k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCoefficients {
    pub k: i64,
    /// `((k−l+1)/(k+1)) √(l+1) √C(k+1, l)`
    pub alpha: Vec<RadicalScalar>,
    /// `√C(k, l)`
    pub beta: Vec<RadicalScalar>,
    /// `√((k+1−l)/(k+1)) √C(k, l)`
    pub gamma: Vec<RadicalScalar>,
}

impl GeneratorCoefficients {
    pub fn new(k: i64) -> Self {
        assert!(k >= 0, "k must be nonnegative");
        let kp1 = BigInt::from(k + 1);
        let alpha = (0..=k)
            .map(|l| {
                let radicand = Rational::from_integer(BigInt::from(l + 1) * binomial(k + 1, l));
                sqrt_of(radicand).scale(&Rational::new(BigInt::from(k - l + 1), kp1.clone()))
            })
            .collect();
        let beta = (0..=k).map(|l| sqrt_of(Rational::from_integer(binomial(k, l)))).collect();
        let gamma =
            (0..=k).map(|l| sqrt_of(Rational::new(BigInt::from(k + 1 - l) * binomial(k, l), kp1.clone()))).collect();
        Self { k, alpha, beta, gamma }
    }
}

fn xy_sum(k: i64, coeffs: &[RadicalScalar], family: impl Fn(i64) -> WignerIndex) -> TensorElement {
    coeffs
        .iter()
        .enumerate()
        .map(|(l, c)| {
            let l = l as i64;
            ((family(l), Monomial::xy(k as u32, l as u32)), ComplexRadical::real(c.clone()))
        })
        .collect()
}

fn wedge(indices: &[u8]) -> Wedge {
    Wedge::new(indices).expect("valid wedge literal")
}

/// `χ₃ᵏ = Σ_l γ_l W_{χ,l}ᵏ ⊗ x^{k−l} y^l`.
pub fn chi3(coeffs: &GeneratorCoefficients) -> TensorElement {
    let k = coeffs.k;
    xy_sum(k, &coeffs.gamma, |l| family_w_chi(k, l).expect("l in range"))
}

/// `w₁₃ᵏ = Σ_l α_l W_lᵏ ⊗ x^{k−l} y^l`.
pub fn w13(coeffs: &GeneratorCoefficients) -> TensorElement {
    let k = coeffs.k;
    xy_sum(k, &coeffs.alpha, |l| family_w(k, l).expect("l in range"))
}

/// `Σ_l β_l W_{0,l}ᵏ ⊗ x^{k−l} y^l`.
pub fn w34(coeffs: &GeneratorCoefficients) -> TensorElement {
    let k = coeffs.k;
    xy_sum(k, &coeffs.beta, |l| family_w0(k, l).expect("l in range"))
}

/// The 1-cochain `X₁, X₂ ↦ 0`, `X₃ ↦ χ₃ᵏ`, `X₄ ↦ i(U₁+iU₂)·χ₃ᵏ`.
pub fn build_chi_with(coeffs: &GeneratorCoefficients) -> Result<Cochain, CochainError> {
    let x3 = chi3(coeffs);
    let x4 = act_tensor(LieBasisSymbol::U1pU2, &x3, X3Variant::default())?.scaled(&ComplexRadical::i());
    let mut c = Cochain::zero(coeffs.k, 1)?;
    c.set(wedge(&[3]), x3)?;
    c.set(wedge(&[4]), x4)?;
    Ok(c)
}

/// The (1,1) 2-cochain determined by `X₁₃ ↦ w₁₃ᵏ`.
pub fn build_psi_with(coeffs: &GeneratorCoefficients) -> Result<Cochain, CochainError> {
    let w = w13(coeffs);
    let i = ComplexRadical::i();
    let var = X3Variant::default();
    let mut c = Cochain::zero(coeffs.k, 2)?;
    c.set(wedge(&[2, 3]), act_tensor(LieBasisSymbol::U1mU2, &w, var)?.scaled(&-i.clone()))?;
    c.set(wedge(&[1, 4]), act_tensor(LieBasisSymbol::U1pU2, &w, var)?.scaled(&i))?;
    c.set(wedge(&[2, 4]), w.neg())?;
    c.set(wedge(&[1, 3]), w)?;
    Ok(c)
}

/// The (0,2) 2-cochain supported on `X₃₄`.
pub fn build_psi0_with(coeffs: &GeneratorCoefficients) -> Result<Cochain, CochainError> {
    let mut c = Cochain::zero(coeffs.k, 2)?;
    c.set(wedge(&[3, 4]), w34(coeffs))?;
    Ok(c)
}

pub fn build_chi(k: i64) -> Result<Cochain, CochainError> {
    build_chi_with(&GeneratorCoefficients::new(k))
}

pub fn build_psi(k: i64) -> Result<Cochain, CochainError> {
    build_psi_with(&GeneratorCoefficients::new(k))
}

pub fn build_psi0(k: i64) -> Result<Cochain, CochainError> {
    build_psi0_with(&GeneratorCoefficients::new(k))
}

/// `1/√(k+2)`.
pub fn psi_weight(k: i64) -> ComplexRadical {
    ComplexRadical::real(sqrt_of(Rational::new(BigInt::from(1), BigInt::from(k + 2))))
}

fn summarize(c: &Cochain) -> String {
    if c.is_zero() {
        "zero".into()
    } else {
        format!("{} nonzero terms on {:?}", c.num_terms(), c.support())
    }
}

/// Exact checks of `dχᵏ = ψᵏ/√(k+2) + ψ₀ᵏ`, `dψᵏ = dψ₀ᵏ = 0`, the Hodge types
/// of `ψᵏ` and `ψ₀ᵏ`, and equivariance of all three cochains.
pub fn verify_generators_with(
    coeffs: &GeneratorCoefficients,
    variant: X3Variant,
) -> Result<Vec<CheckResult>, CochainError> {
    let k = coeffs.k;
    let params = json!({ "k": k, "x3_variant": variant.label() });
    let chi = build_chi_with(coeffs)?;
    let psi = build_psi_with(coeffs)?;
    let psi0 = build_psi0_with(coeffs)?;

    let d_chi = differential(&chi, variant)?;
    let residual = d_chi.minus(&psi.scaled(&psi_weight(k)).plus(&psi0)?)?;
    let d_psi = differential(&psi, variant)?;
    let d_psi0 = differential(&psi0, variant)?;
    let mut out = vec![
        CheckResult::new("d_chi_equals_combination", params.clone(), residual.is_zero())
            .with_detail(format!("residual {}", summarize(&residual))),
        CheckResult::new("d_psi_zero", params.clone(), d_psi.is_zero()).with_detail(summarize(&d_psi)),
        CheckResult::new("d_psi0_zero", params.clone(), d_psi0.is_zero()).with_detail(summarize(&d_psi0)),
    ];
    let ht_psi = hodge_type(&psi);
    let ht_psi0 = hodge_type(&psi0);
    out.push(
        CheckResult::new("hodge_type_psi", params.clone(), ht_psi == HodgeType::Pure { p: 1, q: 1 })
            .with_detail(ht_psi.to_string()),
    );
    out.push(
        CheckResult::new("hodge_type_psi0", params.clone(), ht_psi0 == HodgeType::Pure { p: 0, q: 2 })
            .with_detail(ht_psi0.to_string()),
    );
    for (name, c) in [("equivariance_chi", &chi), ("equivariance_psi", &psi), ("equivariance_psi0", &psi0)] {
        let entries = check_equivariance(c, variant)?;
        let failed: Vec<String> =
            entries.iter().filter(|e| !e.pass).map(|e| format!("{}·{}", e.generator, e.wedge)).collect();
        out.push(CheckResult::new(name, params.clone(), failed.is_empty()).with_detail(failed.join(", ")));
    }
    Ok(out)
}

pub fn verify_generators(k: i64, variant: X3Variant) -> Result<Vec<CheckResult>, CochainError> {
    verify_generators_with(&GeneratorCoefficients::new(k), variant)
}

/// The compact-generator relations that make `χᵏ` equivariant:
/// `(U₁−iU₂)·χ₃ = 0`, `(U₁+iU₂)²·χ₃ = 0` and `(U₁−iU₂)·χ₄ = −iχ₃` with
/// `χ₄ = i(U₁+iU₂)·χ₃`, i.e. `(U₁−iU₂)(U₁+iU₂)·χ₃ = −χ₃`.
///
/// The entry `lowering_raising_is_minus_i` records whether the product
/// equals `−iχ₃` instead; it is expected to fail.
pub fn verify_chi3_relations(k: i64) -> Result<Vec<CheckResult>, CochainError> {
    let params = json!({ "k": k });
    let var = X3Variant::default();
    let c3 = chi3(&GeneratorCoefficients::new(k));
    let lowered = act_tensor(LieBasisSymbol::U1mU2, &c3, var)?;
    let raised = act_tensor(LieBasisSymbol::U1pU2, &c3, var)?;
    let raised_twice = act_tensor(LieBasisSymbol::U1pU2, &raised, var)?;
    let round_trip = act_tensor(LieBasisSymbol::U1mU2, &raised, var)?;
    let chi4 = raised.scaled(&ComplexRadical::i());
    let lowered_chi4 = act_tensor(LieBasisSymbol::U1mU2, &chi4, var)?;
    let minus_i = -ComplexRadical::i();
    Ok(vec![
        CheckResult::new("lowering_kills_chi3", params.clone(), lowered.is_zero()),
        CheckResult::new("raising_twice_kills_chi3", params.clone(), raised_twice.is_zero()),
        CheckResult::new("lowering_chi4_is_minus_i_chi3", params.clone(), lowered_chi4 == c3.scaled(&minus_i)),
        CheckResult::new(
            "lowering_raising_is_minus_one",
            params.clone(),
            round_trip == c3.scaled(&ComplexRadical::from_int(-1)),
        ),
        CheckResult::new("lowering_raising_is_minus_i", params, round_trip == c3.scaled(&minus_i)),
    ])
}

/// Dense coordinates of several tensor elements over the union of their keys.
fn coordinates(elements: &[TensorElement]) -> (Vec<TensorKey>, Vec<Vec<ComplexRadical>>) {
    let keys: Vec<TensorKey> =
        elements.iter().flat_map(|e| e.keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    let rows =
        keys.iter().map(|key| elements.iter().map(|e| e.coeff(key).cloned().unwrap_or_default()).collect()).collect();
    (keys, rows)
}

/// Flattens cochains of one degree into columns over `(wedge, key)` pairs.
fn cochain_rows(cols: &[&Cochain]) -> Vec<Vec<ComplexRadical>> {
    let mut keys = BTreeSet::new();
    for c in cols {
        for (w, v) in c.entries() {
            for key in v.keys() {
                keys.insert((w.clone(), *key));
            }
        }
    }
    keys.iter()
        .map(|(w, key)| cols.iter().map(|c| c.get(w).coeff(key).cloned().unwrap_or_default()).collect())
        .collect()
}

/// Coefficients `c` with `Σ_i c_i·sources_i = target`, if any.
pub fn solve_combination(sources: &[Cochain], target: &Cochain) -> Option<Vec<ComplexRadical>> {
    let mut cols: Vec<&Cochain> = sources.iter().collect();
    cols.push(target);
    let mut rows = cochain_rows(&cols);
    let n = sources.len();
    let pivots = linalg::row_reduce(&mut rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut sol = vec![ComplexRadical::zero(); n];
    for (row, &p) in rows.iter().zip(&pivots) {
        sol[p] = row[n].clone();
    }
    Some(sol)
}

/// A preimage of `target` under `d` among the equivariant cochains of one degree
/// lower, if one exists. `basis` must span those equivariant cochains.
pub fn preimage_under_d(
    target: &Cochain,
    basis: &[Cochain],
    variant: X3Variant,
) -> Result<Option<Cochain>, CochainError> {
    let images = basis.iter().map(|b| differential(b, variant)).collect::<Result<Vec<_>, _>>()?;
    let Some(sol) = solve_combination(&images, target) else {
        return Ok(None);
    };
    let mut pre = Cochain::zero(target.k, target.degree - 1)?;
    for (b, c) in basis.iter().zip(&sol) {
        pre = pre.plus(&b.scaled(c))?;
    }
    Ok(Some(pre))
}

/// Mirrors the non-exactness argument for `ψ₀ᵏ` and `ψᵏ` as finite exact computations.
pub fn verify_nonexactness(k: i64, variant: X3Variant) -> Result<Vec<CheckResult>, CochainError> {
    let params = json!({ "k": k, "x3_variant": variant.label() });
    let coeffs = GeneratorCoefficients::new(k);
    let mut out = Vec::new();

    // Sources of the W_{0,l} under X₃ and X₄.
    let mut found = BTreeSet::new();
    for l in 0..=k {
        let target = family_w0(k, l)?;
        for g in [LieBasisSymbol::X3, LieBasisSymbol::X4] {
            found.extend(wigner::p_preimages(g, &target, k, variant)?);
        }
    }
    let expected: BTreeSet<WignerIndex> = (0..=k + 1).map(|l| family_w_chi(k, l)).collect::<Result<_, _>>()?;
    out.push(
        CheckResult::new("preimage_set", params.clone(), found == expected)
            .with_detail(format!("{} candidate indices", found.len())),
    );

    // Lowering kernel inside span{W_{χ,l} ⊗ x^{k−l}y^l}.
    let span: Vec<TensorElement> = (0..=k)
        .map(|l| TensorElement::basis((family_w_chi(k, l).expect("in range"), Monomial::xy(k as u32, l as u32))))
        .collect();
    let images = span.iter().map(|b| act_tensor(LieBasisSymbol::U1mU2, b, variant)).collect::<Result<Vec<_>, _>>()?;
    let (_, rows) = coordinates(&images);
    let kernel = linalg::kernel(&rows, span.len());
    let chi3 = chi3(&coeffs);
    let chi3_coords: Vec<ComplexRadical> = (0..=k)
        .map(|l| {
            chi3.coeff(&(family_w_chi(k, l).expect("in range"), Monomial::xy(k as u32, l as u32)))
                .cloned()
                .unwrap_or_default()
        })
        .collect();
    let spanned = kernel.len() == 1 && linalg::rank(&[kernel[0].clone(), chi3_coords], span.len()) == 1;
    out.push(
        CheckResult::new("lowering_kernel_spanned_by_chi3", params.clone(), spanned)
            .with_detail(format!("kernel dimension {}", kernel.len())),
    );

    let x1_image = act_tensor(LieBasisSymbol::X1, &chi3, variant)?;
    out.push(
        CheckResult::new("x1_image_nonzero", params.clone(), !x1_image.is_zero())
            .with_detail(format!("{} terms", x1_image.len())),
    );

    // With every equivariant 1-cochain a multiple of χ, ψ₀ and ψ are not
    // coboundaries while dχ is.
    let basis = crate::sampling::equivariant_cochain_basis(k, 1, variant)?;
    let chi = build_chi_with(&coeffs)?;
    let one_dim = basis.len() == 1 && solve_combination(&basis, &chi).is_some();
    out.push(
        CheckResult::new("equivariant_1_cochains_are_multiples_of_chi", params.clone(), one_dim)
            .with_detail(format!("dimension {}", basis.len())),
    );
    let psi0 = build_psi0_with(&coeffs)?;
    let psi = build_psi_with(&coeffs)?;
    let d_chi = differential(&chi, variant)?;
    out.push(CheckResult::new(
        "psi0_not_in_image",
        params.clone(),
        preimage_under_d(&psi0, &basis, variant)?.is_none(),
    ));
    out.push(CheckResult::new("psi_not_in_image", params.clone(), preimage_under_d(&psi, &basis, variant)?.is_none()));
    out.push(CheckResult::new("d_chi_in_image", params, preimage_under_d(&d_chi, &basis, variant)?.is_some()));
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct TermExport {
    pub index: WignerIndex,
    pub monomial: Monomial,
    pub coeff: ComplexRadical,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryExport {
    pub wedge: Vec<u8>,
    pub terms: Vec<TermExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CochainExport {
    pub k: i64,
    pub degree: usize,
    pub entries: Vec<EntryExport>,
    pub hodge_type: HodgeType,
}

/// Serializable view of a cochain: all wedges in lexicographic order, terms
/// ordered by `(2j, 2m₁, monomial)`.
pub fn export_cochain(c: &Cochain) -> CochainExport {
    let entries = c
        .entries()
        .map(|(w, v)| {
            let mut terms: Vec<TermExport> = v
                .iter()
                .map(|((idx, m), coeff)| TermExport { index: *idx, monomial: *m, coeff: coeff.clone() })
                .collect();
            terms.sort_by_key(|t| (t.index.j, t.index.m1, t.monomial, t.index.n, t.index.m2));
            EntryExport { wedge: w.indices().to_vec(), terms }
        })
        .collect();
    CochainExport { k: c.k, degree: c.degree, entries, hodge_type: hodge_type(c) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieBasisSymbol::*;

    const V: X3Variant = X3Variant::Plus1;

    #[test]
    fn coefficient_examples() {
        for k in 1..8 {
            let c = GeneratorCoefficients::new(k);
            assert!(c.gamma[0].is_one());
            let g1 = RadicalScalar::sqrt_int((k + 1) as u64).scale(&crate::scalar::rat(k, k + 1));
            assert_eq!(c.gamma[1], g1);
            let gk = sqrt_of(crate::scalar::rat(1, k + 1));
            assert_eq!(c.gamma[k as usize], gk);
            for l in 0..k {
                let lu = l as usize;
                let ratio = sqrt_of(crate::scalar::rat(1, (l + 1) * (k - l + 1))).scale(&crate::scalar::rat(k - l, 1));
                assert_eq!(c.gamma[lu + 1], &ratio * &c.gamma[lu]);
            }
        }
        let c = GeneratorCoefficients::new(2);
        assert_eq!(c.beta, vec![RadicalScalar::one(), RadicalScalar::sqrt_int(2), RadicalScalar::one()]);
    }

    #[test]
    fn u0_on_tensor() {
        let k = 3;
        for l in 0..=k {
            let idx = family_w(k, l).unwrap();
            let t = TensorElement::basis((idx, Monomial::xy(k as u32, l as u32)));
            let expected = t.scaled(&ComplexRadical::imag(RadicalScalar::from_frac(idx.n.doubled + k, 2)));
            assert_eq!(act_tensor(U0, &t, V).unwrap(), expected);
        }
        assert!(act_tensor(X2, &TensorElement::zero(), V).unwrap().is_zero());
    }

    #[test]
    fn chi3_relations() {
        for k in 0..=6 {
            for r in verify_chi3_relations(k).unwrap() {
                assert_eq!(r.pass, r.check != "lowering_raising_is_minus_i", "{r:?}");
            }
        }
    }

    #[test]
    fn generators_small_k() {
        for k in 0..=4 {
            for r in verify_generators(k, V).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn d_chi_zero_degree() {
        let d = differential(&build_chi(0).unwrap(), V).unwrap();
        assert!(d.get(&wedge(&[1, 2])).is_zero());
        let expected = TensorElement::single(
            (family_w(0, 0).unwrap(), Monomial::new(0, 0, 0)),
            ComplexRadical::real(sqrt_of(crate::scalar::rat(1, 2))),
        );
        assert_eq!(d.get(&wedge(&[1, 3])), &expected);
        let z = Cochain::zero(2, 1).unwrap();
        assert!(differential(&z, V).unwrap().is_zero());
    }

    #[test]
    fn perturbed_alpha_breaks_identity() {
        let mut c = GeneratorCoefficients::new(3);
        c.alpha[0] = &c.alpha[0] + &RadicalScalar::one();
        let results = verify_generators_with(&c, V).unwrap();
        assert!(!results.iter().find(|r| r.check == "d_chi_equals_combination").unwrap().pass);
    }

    #[test]
    fn plus2_breaks_identity() {
        let results = verify_generators(2, X3Variant::Plus2).unwrap();
        assert!(!results.iter().all(|r| r.pass));
    }

    #[test]
    fn hodge_types() {
        let psi = build_psi(2).unwrap();
        let psi0 = build_psi0(2).unwrap();
        assert_eq!(hodge_type(&psi), HodgeType::Pure { p: 1, q: 1 });
        assert_eq!(hodge_type(&psi0), HodgeType::Pure { p: 0, q: 2 });
        assert_eq!(hodge_type(&psi.plus(&psi0).unwrap()), HodgeType::Mixed);
        assert_eq!(hodge_type(&Cochain::zero(0, 2).unwrap()), HodgeType::Zero);
    }

    #[test]
    fn partial_w13_not_equivariant() {
        for k in 1..4 {
            let mut c = Cochain::zero(k, 2).unwrap();
            let t = TensorElement::basis((family_w(k, 0).unwrap(), Monomial::xy(k as u32, 0)));
            c.set(wedge(&[1, 3]), t).unwrap();
            assert!(!is_equivariant(&c, V).unwrap());
        }
    }

    #[test]
    fn psi_determined_by_w13() {
        for k in 0..5 {
            let psi = build_psi(k).unwrap();
            let w = psi.get(&wedge(&[1, 3]));
            // U₁+iU₂ sends X₂₃ to i(X₁₃ − X₂₄), so ψ(X₂₄) = ψ(X₁₃) + i(U₁+iU₂)·ψ(X₂₃).
            let p23 = act_tensor(U1pU2, psi.get(&wedge(&[2, 3])), V).unwrap();
            let rederived = w.plus(&p23.scaled(&ComplexRadical::i()));
            assert_eq!(&rederived, psi.get(&wedge(&[2, 4])));
            assert_eq!(rederived, w.neg());
        }
    }

    #[test]
    fn nonexactness_small_k() {
        for k in 0..=2 {
            for r in verify_nonexactness(k, V).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn degree_limits() {
        assert!(matches!(Cochain::zero(0, 5), Err(CochainError::DegreeOutOfRange(5))));
        let top = Cochain::zero(0, 4).unwrap();
        assert!(matches!(differential(&top, V), Err(CochainError::DegreeOutOfRange(5))));
        let mut c = Cochain::zero(0, 2).unwrap();
        assert!(c.set(wedge(&[1]), TensorElement::zero()).is_err());
    }

    #[test]
    fn export_layout() {
        let e = export_cochain(&build_psi0(1).unwrap());
        assert_eq!(e.entries.len(), 6);
        let text = serde_json::to_string(&e).unwrap();
        assert!(text.contains(r#""hodge_type":"(0,2)""#));
        assert!(text.starts_with(r#"{"k":1,"degree":2,"entries":[{"wedge":[1,2],"terms":[]}"#));
    }
}
