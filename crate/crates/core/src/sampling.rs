//! Spaces of equivariant cochains computed by exact linear algebra, and random
//! elements drawn from them and from the scalar field.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::cochain::{act_tensor, Cochain, CochainError, TensorElement, TensorKey};
use crate::lie::{self, LieBasisSymbol, Wedge};
use crate::linalg;
use crate::poly::Monomial;
use crate::scalar::{rat, ComplexRadical, RadicalScalar};
use crate::wigner::{admissible, WignerIndex, X3Variant};

/// Doubled `(U₀, U₃)` eigenvalues divided by `i` for `X₁…X₄`.
fn x_weight(i: u8) -> (i64, i64) {
    match i {
        1 => (3, 1),
        2 => (3, -1),
        3 => (-3, -1),
        4 => (-3, 1),
        _ => unreachable!("X index in 1..=4"),
    }
}

fn wedge_weight(w: &Wedge) -> (i64, i64) {
    w.indices().iter().map(|i| x_weight(*i)).fold((0, 0), |(a, b), (c, d)| (a + c, b + d))
}

/// Tensor keys `W ⊗ x^a y^b z^c` with the given doubled `(U₀, U₃)` weights,
/// admissible for `k`, with `2j ≤ j2_max`.
fn keys_of_weight(k: i64, weight: (i64, i64), j2_max: i64) -> Vec<TensorKey> {
    let mut out = Vec::new();
    for mono in Monomial::all(k as u32) {
        let [a, b, c] = mono.0.map(i64::from);
        // U₀ acts on x, y by i/2 and on z by −i; U₃ by ±i/2 on x, y.
        let n2 = weight.0 - (a + b) + 2 * c;
        let m1_2 = weight.1 - (a - b);
        let num = n2 + 2 * (2 * k + 3);
        if num % 3 != 0 {
            continue;
        }
        let m2_2 = num / 3;
        for j2 in 0..=j2_max {
            let idx = WignerIndex::from_doubled(j2, n2, m1_2, m2_2);
            if idx.is_valid() && admissible(&idx, k) {
                out.push((idx, mono));
            }
        }
    }
    out
}

/// Largest `2j` searched. The compact action preserves `j`, and a `U(2)`-type
/// of spin `j` can only pair with `Λ^q 𝔭_ℂ ⊗ V_k` when `j ≤ (k + q)/2`.
pub fn default_j2_max(k: i64, degree: usize) -> i64 {
    k + degree as i64 + 2
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// A basis of the `𝔩_ℂ`-equivariant `degree`-cochains with values in `I ⊗ V_k`.
pub fn equivariant_cochain_basis(k: i64, degree: usize, variant: X3Variant) -> Result<Vec<Cochain>, CochainError> {
    equivariant_cochain_basis_upto(k, degree, default_j2_max(k, degree), variant)
}

pub fn equivariant_cochain_basis_upto(
    k: i64,
    degree: usize,
    j2_max: i64,
    variant: X3Variant,
) -> Result<Vec<Cochain>, CochainError> {
    let wedges = Wedge::all(degree);
    let unknowns: Vec<(Wedge, TensorKey)> = wedges
        .iter()
        .flat_map(|w| keys_of_weight(k, wedge_weight(w), j2_max).into_iter().map(move |key| (w.clone(), key)))
        .collect();

    // Equation (U, w′): U·ψ(w′) − Σ_w [U·w′]_w ψ(w) = 0, one row per resulting key.
    let mut wedge_images = BTreeMap::new();
    for gen in LieBasisSymbol::L_GENERATORS {
        let m = gen.matrix();
        for w in &wedges {
            wedge_images.insert((gen, w.clone()), lie::act_on_wedge(&m, w)?);
        }
    }
    type RowKey = (LieBasisSymbol, Wedge, TensorKey);
    let mut columns: Vec<BTreeMap<RowKey, ComplexRadical>> = Vec::with_capacity(unknowns.len());
    for (w, key) in &unknowns {
        let mut col: BTreeMap<RowKey, ComplexRadical> = BTreeMap::new();
        let basis = TensorElement::basis(*key);
        for gen in LieBasisSymbol::L_GENERATORS {
            for (key2, c) in &act_tensor(gen, &basis, variant)? {
                let slot = col.entry((gen, w.clone(), *key2)).or_default();
                *slot = &*slot + c;
            }
            for w2 in &wedges {
                if let Some(c) = wedge_images[&(gen, w2.clone())].coeff(w) {
                    let slot = col.entry((gen, w2.clone(), *key)).or_default();
                    *slot = &*slot - c;
                }
            }
        }
        col.retain(|_, v| !v.is_zero());
        columns.push(col);
    }

    // Split into independent blocks that share no equations.
    let mut parent: Vec<usize> = (0..unknowns.len()).collect();
    let mut owner: BTreeMap<&RowKey, usize> = BTreeMap::new();
    for (ci, col) in columns.iter().enumerate() {
        for row in col.keys() {
            match owner.get(row) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, ci));
                    parent[a] = b;
                }
                None => {
                    owner.insert(row, ci);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ci in 0..unknowns.len() {
        let r = find(&mut parent, ci);
        blocks.entry(r).or_default().push(ci);
    }

    let mut basis = Vec::new();
    for cols in blocks.values() {
        let rows: BTreeSet<&RowKey> = cols.iter().flat_map(|c| columns[*c].keys()).collect();
        let matrix: Vec<Vec<ComplexRadical>> = rows
            .iter()
            .map(|r| cols.iter().map(|c| columns[*c].get(*r).cloned().unwrap_or_default()).collect())
            .collect();
        for v in linalg::kernel(&matrix, cols.len()) {
            let mut cochain = Cochain::zero(k, degree)?;
            let mut values: BTreeMap<Wedge, TensorElement> = BTreeMap::new();
            for (c, coeff) in cols.iter().zip(v) {
                let (w, key) = &unknowns[*c];
                values.entry(w.clone()).or_default().add_term(*key, coeff);
            }
            for (w, val) in values {
                cochain.set(w, val)?;
            }
            basis.push(cochain);
        }
    }
    Ok(basis)
}

/// A random element `Σ_t q_t √d_t` with up to `max_terms` terms, squarefree
/// parts drawn from radicands `1..=max_radicand` and rationals with numerator
/// and denominator bounded by `max_abs`.
pub fn random_radical<R: Rng + ?Sized>(
    rng: &mut R,
    max_terms: usize,
    max_radicand: u64,
    max_abs: i64,
) -> RadicalScalar {
    let terms = rng.random_range(1..=max_terms);
    let mut out = RadicalScalar::zero();
    for _ in 0..terms {
        let d = rng.random_range(1..=max_radicand);
        let q = rat(rng.random_range(-max_abs..=max_abs), rng.random_range(1..=max_abs));
        out += &RadicalScalar::sqrt_int(d).scale(&q);
    }
    out
}

pub fn random_complex_radical<R: Rng + ?Sized>(
    rng: &mut R,
    max_terms: usize,
    max_radicand: u64,
    max_abs: i64,
) -> ComplexRadical {
    ComplexRadical::new(
        random_radical(rng, max_terms, max_radicand, max_abs),
        random_radical(rng, max_terms, max_radicand, max_abs),
    )
}

/// Draws random field elements and checks the field axioms on them exactly,
/// plus agreement of the float image with float arithmetic.
///
/// Radicands are at most `max_radicand`, numerators and denominators at most
/// `max_abs` in absolute value.
pub fn field_law_trial<R: Rng + ?Sized>(rng: &mut R, max_radicand: u64, max_abs: i64) -> Result<(), String> {
    let a = random_complex_radical(rng, 2, max_radicand, max_abs);
    let b = random_complex_radical(rng, 2, max_radicand, max_abs);
    let c = random_complex_radical(rng, 2, max_radicand, max_abs);
    let fail = |law: &str| Err(format!("{law} fails for a={a}, b={b}, c={c}"));
    if &a + &b != &b + &a {
        return fail("additive commutativity");
    }
    if &(&a + &b) + &c != &a + &(&b + &c) {
        return fail("additive associativity");
    }
    if &a * &b != &b * &a {
        return fail("multiplicative commutativity");
    }
    if &(&a * &b) * &c != &a * &(&b * &c) {
        return fail("multiplicative associativity");
    }
    if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
        return fail("distributivity");
    }
    if !(&a + &(-&a)).is_zero() || &a + &ComplexRadical::zero() != a || &a * &ComplexRadical::one() != a {
        return fail("identities");
    }
    if (&a * &b).conj() != &a.conj() * &b.conj() {
        return fail("conjugation");
    }
    // Inverses on a smaller element keep the conjugate products short.
    let r = random_radical(rng, 2, max_radicand, max_abs);
    if !r.is_zero() {
        let inv = r.invert().map_err(|e| e.to_string())?;
        if !(&r * &inv).is_one() {
            return Err(format!("inverse fails for {r}"));
        }
    }
    let z = ComplexRadical::new(
        random_radical(rng, 1, max_radicand, max_abs),
        random_radical(rng, 1, max_radicand, max_abs),
    );
    if !z.is_zero() && !(&z * &z.invert().map_err(|e| e.to_string())?).is_one() {
        return Err(format!("complex inverse fails for {z}"));
    }
    let (fa, fb) = (a.to_complex64(), b.to_complex64());
    let fprod = (&a * &b).to_complex64();
    let scale = 1.0 + (fa * fb).norm();
    if (fprod - fa * fb).norm() > 1e-9 * scale {
        return fail("float image of product");
    }
    Ok(())
}

/// Random linear combinations of `basis` with nonzero random coefficients.
pub fn random_combinations<R: Rng + ?Sized>(
    rng: &mut R,
    basis: &[Cochain],
    count: usize,
) -> Result<Vec<Cochain>, CochainError> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    (0..count)
        .map(|_| {
            let mut acc = Cochain::zero(first.k(), first.degree())?;
            for b in basis {
                let c = loop {
                    let c = random_complex_radical(rng, 2, 12, 20);
                    if !c.is_zero() {
                        break c;
                    }
                };
                acc = acc.plus(&b.scaled(&c))?;
            }
            Ok(acc)
        })
        .collect()
}
