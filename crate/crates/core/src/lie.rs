//! Exact 3×3 matrix model of su(2,1), its maximal compact subalgebra and the
//! complexified Cartan complement, in a diagonal basis of the Hermitian form.
//!
//! All structure constants used elsewhere in the crate are recomputed here
//! from matrix commutators. The printed action tables are kept only as
//! fixtures ([`printed_table1`], [`printed_table3`]) to compare against.

use std::fmt;

use serde::Serialize;

use crate::lincomb::LinComb;
use crate::scalar::{ComplexRadical, RadicalScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("matrix is not in the complexified Lie algebra: {0}")]
    NotInLieAlgebra(String),
    #[error("invalid wedge indices {0:?}")]
    InvalidWedge(Vec<u8>),
}

/// A 3×3 matrix with exact complex-radical entries.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Matrix3 {
    pub entries: [[ComplexRadical; 3]; 3],
}

impl Matrix3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { ComplexRadical::one() } else { ComplexRadical::zero() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> ComplexRadical>(mut f: F) -> Self {
        let mut m = Self::zero();
        for r in 0..3 {
            for c in 0..3 {
                m.entries[r][c] = f(r, c);
            }
        }
        m
    }

    /// Matrix with a single entry `value` at (`row`, `col`), zero-based.
    pub fn unit(row: usize, col: usize, value: ComplexRadical) -> Self {
        let mut m = Self::zero();
        m.entries[row][col] = value;
        m
    }

    pub fn diag(d: [ComplexRadical; 3]) -> Self {
        let [a, b, c] = d;
        let mut m = Self::zero();
        m.entries[0][0] = a;
        m.entries[1][1] = b;
        m.entries[2][2] = c;
        m
    }

    pub fn get(&self, row: usize, col: usize) -> &ComplexRadical {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ComplexRadical::is_zero)
    }

    pub fn trace(&self) -> ComplexRadical {
        &(&self.entries[0][0] + &self.entries[1][1]) + &self.entries[2][2]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].clone())
    }

    /// Conjugate transpose `X̄ᵀ`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn scale(&self, s: &ComplexRadical) -> Self {
        Self::from_fn(|r, c| &self.entries[r][c] * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| &self.entries[r][c] + &other.entries[r][c])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| &self.entries[r][c] - &other.entries[r][c])
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| {
            let mut acc = ComplexRadical::zero();
            for t in 0..3 {
                acc += &(&self.entries[r][t] * &other.entries[t][c]);
            }
            acc
        })
    }
}

impl fmt::Debug for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            writeln!(f, "  [{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// Commutator `AB − BA`.
pub fn bracket(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    a.mul(b).sub(&b.mul(a))
}

fn c(n: i64, d: i64) -> ComplexRadical {
    ComplexRadical::from_frac(n, d)
}

fn ci(n: i64, d: i64) -> ComplexRadical {
    ComplexRadical::imag(RadicalScalar::from_frac(n, d))
}

/// The Hermitian form in a diagonal basis, `diag(1, 1, −1)`.
pub fn j_diag() -> Matrix3 {
    Matrix3::diag([c(1, 1), c(1, 1), c(-1, 1)])
}

/// The Hermitian form in a parabolic basis (antidiagonal ones).
pub fn j_par() -> Matrix3 {
    Matrix3::from_fn(|r, col| if r + col == 2 { c(1, 1) } else { ComplexRadical::zero() })
}

/// The real symmetric involution relating the diagonal and parabolic bases.
pub fn gamma() -> Matrix3 {
    let h = ComplexRadical::real(RadicalScalar::sqrt_rational(&crate::scalar::rat(1, 2)).expect("positive"));
    let mut m = Matrix3::zero();
    m.entries[0][0] = h.clone();
    m.entries[0][2] = h.clone();
    m.entries[1][1] = c(1, 1);
    m.entries[2][0] = h.clone();
    m.entries[2][2] = -h;
    m
}

pub fn u0() -> Matrix3 {
    Matrix3::diag([ci(1, 2), ci(1, 2), ci(-1, 1)])
}

pub fn u1() -> Matrix3 {
    let mut m = Matrix3::zero();
    m.entries[0][1] = ci(1, 2);
    m.entries[1][0] = ci(1, 2);
    m
}

pub fn u2() -> Matrix3 {
    let mut m = Matrix3::zero();
    m.entries[0][1] = c(1, 2);
    m.entries[1][0] = c(-1, 2);
    m
}

pub fn u3() -> Matrix3 {
    Matrix3::diag([ci(1, 2), ci(-1, 2), ComplexRadical::zero()])
}

/// The real basis `Y₁…Y₄` of the Cartan complement.
pub fn y(index: usize) -> Matrix3 {
    let (a, b) = match index {
        1 | 2 => (0, 2),
        3 | 4 => (1, 2),
        _ => panic!("Y index {index} out of range 1..=4"),
    };
    let mut m = Matrix3::zero();
    if index % 2 == 1 {
        m.entries[a][b] = c(1, 1);
        m.entries[b][a] = c(1, 1);
    } else {
        m.entries[a][b] = ci(1, 1);
        m.entries[b][a] = ci(-1, 1);
    }
    m
}

/// The complex basis `X₁…X₄` of the complexified Cartan complement.
pub fn x(index: usize) -> Matrix3 {
    let (r, col) = match index {
        1 => (0, 2),
        2 => (1, 2),
        3 => (2, 0),
        4 => (2, 1),
        _ => panic!("X index {index} out of range 1..=4"),
    };
    Matrix3::unit(r, col, c(1, 1))
}

/// Named generators of the complexified compact subalgebra and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LieBasisSymbol {
    U0,
    /// `U₁ + iU₂`
    U1pU2,
    /// `U₁ − iU₂`
    U1mU2,
    U3,
    X1,
    X2,
    X3,
    X4,
}

impl LieBasisSymbol {
    pub const L_GENERATORS: [LieBasisSymbol; 4] = [Self::U0, Self::U1pU2, Self::U1mU2, Self::U3];
    pub const P_GENERATORS: [LieBasisSymbol; 4] = [Self::X1, Self::X2, Self::X3, Self::X4];
    pub const ALL: [LieBasisSymbol; 8] =
        [Self::U0, Self::U1pU2, Self::U1mU2, Self::U3, Self::X1, Self::X2, Self::X3, Self::X4];

    pub fn matrix(self) -> Matrix3 {
        let i = ComplexRadical::i();
        match self {
            Self::U0 => u0(),
            Self::U1pU2 => u1().add(&u2().scale(&i)),
            Self::U1mU2 => u1().sub(&u2().scale(&i)),
            Self::U3 => u3(),
            Self::X1 => x(1),
            Self::X2 => x(2),
            Self::X3 => x(3),
            Self::X4 => x(4),
        }
    }

    pub fn from_x_index(index: u8) -> Option<Self> {
        match index {
            1 => Some(Self::X1),
            2 => Some(Self::X2),
            3 => Some(Self::X3),
            4 => Some(Self::X4),
            _ => None,
        }
    }

    pub fn x_index(self) -> Option<u8> {
        match self {
            Self::X1 => Some(1),
            Self::X2 => Some(2),
            Self::X3 => Some(3),
            Self::X4 => Some(4),
            _ => None,
        }
    }

    pub fn is_compact(self) -> bool {
        self.x_index().is_none()
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::U0 => "U0",
            Self::U1pU2 => "U1+iU2",
            Self::U1mU2 => "U1-iU2",
            Self::U3 => "U3",
            Self::X1 => "X1",
            Self::X2 => "X2",
            Self::X3 => "X3",
            Self::X4 => "X4",
        }
    }
}

impl fmt::Display for LieBasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Every named matrix: the eight generators plus the form in both bases and γ.
pub struct BuiltinMatrices {
    pub generators: Vec<(LieBasisSymbol, Matrix3)>,
    pub j_diag: Matrix3,
    pub j_par: Matrix3,
    pub gamma: Matrix3,
}

pub fn builtin_matrices() -> BuiltinMatrices {
    BuiltinMatrices {
        generators: LieBasisSymbol::ALL.iter().map(|s| (*s, s.matrix())).collect(),
        j_diag: j_diag(),
        j_par: j_par(),
        gamma: gamma(),
    }
}

/// Coefficients of an element of the complexified complement over `X₁…X₄`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PBasisVector(pub [ComplexRadical; 4]);

impl PBasisVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(ComplexRadical::is_zero)
    }

    /// Coefficient of `X_i`, `i` in 1..=4.
    pub fn coeff(&self, i: u8) -> &ComplexRadical {
        &self.0[usize::from(i) - 1]
    }

    /// `c · X_i`.
    pub fn single(i: u8, coeff: ComplexRadical) -> Self {
        let mut v = Self::zero();
        v.0[usize::from(i) - 1] = coeff;
        v
    }

    pub fn to_matrix(&self) -> Matrix3 {
        (1..=4u8).fold(Matrix3::zero(), |acc, i| acc.add(&x(i.into()).scale(self.coeff(i))))
    }
}

impl fmt::Debug for PBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            (1..=4u8).filter(|i| !self.coeff(*i).is_zero()).map(|i| format!("[{}]X{}", self.coeff(i), i)).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Components of `A ∈ 𝔤_ℂ` along `U₀, U₁+iU₂, U₁−iU₂, U₃` and `X₁…X₄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSplit {
    pub l_part: [ComplexRadical; 4],
    pub p_part: PBasisVector,
}

/// Splits a traceless matrix along the complexified Cartan decomposition.
pub fn decompose(a: &Matrix3) -> Result<CartanSplit, LieError> {
    if !a.trace().is_zero() {
        return Err(LieError::NotInLieAlgebra(format!("trace {} ≠ 0", a.trace())));
    }
    let e = &a.entries;
    let p_part = PBasisVector([e[0][2].clone(), e[1][2].clone(), e[2][0].clone(), e[2][1].clone()]);
    // Residual is block diagonal: U₁+iU₂ = i·E₁₂, U₁−iU₂ = i·E₂₁ and
    // a·U₀ + b·U₃ = diag(i(a+b)/2, i(a−b)/2, −ia).
    let minus_i = -ComplexRadical::i();
    let c_plus = &e[0][1] * &minus_i;
    let c_minus = &e[1][0] * &minus_i;
    let c_u0 = &e[2][2] * &ComplexRadical::i();
    // d₁ − d₂ = i·b  ⇒  b = −i(d₁ − d₂)
    let c_u3 = &(&e[0][0] - &e[1][1]) * &minus_i;
    let l_part = [c_u0, c_plus, c_minus, c_u3];
    let rebuilt = LieBasisSymbol::L_GENERATORS
        .iter()
        .zip(&l_part)
        .fold(p_part.to_matrix(), |acc, (s, coeff)| acc.add(&s.matrix().scale(coeff)));
    if rebuilt != *a {
        return Err(LieError::NotInLieAlgebra(format!("residual {:?} not in the compact span", a.sub(&rebuilt))));
    }
    Ok(CartanSplit { l_part, p_part })
}

/// The `𝔭_ℂ`-component of `A` over `X₁…X₄`.
pub fn project_to_p(a: &Matrix3) -> Result<PBasisVector, LieError> {
    decompose(a).map(|s| s.p_part)
}

/// Whether `A` lies in the real form `{X ∈ 𝔰𝔩₃ | X̄ᵀJ + JX = 0}`.
pub fn is_in_g(a: &Matrix3, j: &Matrix3) -> bool {
    a.trace().is_zero() && a.adjoint().mul(j).add(&j.mul(a)).is_zero()
}

/// Whether `A` lies in the Lie algebra of the fixed maximal compact subgroup.
pub fn is_in_k(a: &Matrix3) -> bool {
    let e = &a.entries;
    is_in_g(a, &j_diag())
        && [e[0][2].clone(), e[1][2].clone(), e[2][0].clone(), e[2][1].clone()].iter().all(ComplexRadical::is_zero)
}

/// The complex conjugation of `𝔰𝔩₃(ℂ)` fixing the real form: `X ↦ −J X̄ᵀ J`.
pub fn real_structure(a: &Matrix3) -> Matrix3 {
    let j = j_diag();
    j.mul(&a.adjoint()).mul(&j).scale(&ComplexRadical::from_int(-1))
}

/// A basis element `X_{i₁} ∧ … ∧ X_{i_q}` of `Λ^q(𝔭_ℂ)`, indices strictly
/// increasing in 1..=4.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Wedge(Vec<u8>);

impl Wedge {
    pub fn new(indices: &[u8]) -> Result<Self, LieError> {
        let ok = indices.iter().all(|i| (1..=4).contains(i)) && indices.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(Self(indices.to_vec()))
        } else {
            Err(LieError::InvalidWedge(indices.to_vec()))
        }
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    /// All basis wedges of the given degree, in lexicographic order.
    pub fn all(degree: usize) -> Vec<Wedge> {
        (0u8..16)
            .filter(|mask| mask.count_ones() as usize == degree)
            .map(|mask| Wedge((1..=4u8).filter(|i| mask & (1 << (i - 1)) != 0).collect()))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// The wedge with the `pos`-th factor removed.
    pub fn omit(&self, pos: usize) -> Wedge {
        let mut v = self.0.clone();
        v.remove(pos);
        Wedge(v)
    }

    /// Sorts an arbitrary index sequence into a basis wedge with its sign;
    /// `None` if an index repeats.
    pub fn from_sequence(seq: &[u8]) -> Option<(Wedge, i64)> {
        let mut v = seq.to_vec();
        let mut sign = 1;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some((Wedge(v), sign))
        }
    }

    /// Bidegree `(p, q)`: number of factors in `𝔭⁺ = ⟨X₁, X₂⟩` and in
    /// `𝔭⁻ = ⟨X₃, X₄⟩`.
    pub fn bidegree(&self) -> (usize, usize) {
        let p = self.0.iter().filter(|i| **i <= 2).count();
        (p, self.0.len() - p)
    }
}

impl fmt::Debug for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X")?;
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `ad(U)` on `𝔭_ℂ`: `[U, X_i]` projected onto `X₁…X₄`.
pub fn adjoint_on_p(u: &Matrix3, i: u8) -> Result<PBasisVector, LieError> {
    project_to_p(&bracket(u, &x(i.into())))
}

/// Induced action `U·(X_{i₁} ∧ … ∧ X_{i_q}) = Σ_s X_{i₁} ∧ … ∧ [U, X_{i_s}] ∧ … ∧ X_{i_q}`.
pub fn act_on_wedge(u: &Matrix3, w: &Wedge) -> Result<LinComb<Wedge>, LieError> {
    let mut out = LinComb::zero();
    for (pos, &i) in w.indices().iter().enumerate() {
        let image = adjoint_on_p(u, i)?;
        for t in 1..=4u8 {
            let coeff = image.coeff(t);
            if coeff.is_zero() {
                continue;
            }
            let mut seq = w.indices().to_vec();
            seq[pos] = t;
            if let Some((sorted, sign)) = Wedge::from_sequence(&seq) {
                out.add_term(sorted, coeff * &ComplexRadical::from_int(sign));
            }
        }
    }
    Ok(out)
}

/// One cell of the action table of `𝔩_ℂ` on `𝔭_ℂ`.
#[derive(Debug, Clone)]
pub struct Table1Cell {
    pub row: u8,
    pub generator: LieBasisSymbol,
    pub value: PBasisVector,
}

/// One cell of the action table of `𝔩_ℂ` on `Λ²(𝔭_ℂ)`.
#[derive(Debug, Clone)]
pub struct Table3Cell {
    pub row: Wedge,
    pub generator: LieBasisSymbol,
    pub value: LinComb<Wedge>,
}

/// The action of `𝔩_ℂ` on `𝔭_ℂ` as printed, row by row.
pub fn printed_table1() -> Vec<Table1Cell> {
    use LieBasisSymbol::*;
    let z = PBasisVector::zero;
    let s = PBasisVector::single;
    let rows: [(u8, [PBasisVector; 4]); 4] = [
        (1, [s(1, ci(3, 2)), z(), s(2, ci(1, 1)), s(1, ci(1, 2))]),
        (2, [s(2, ci(3, 2)), s(1, ci(1, 1)), z(), s(2, ci(-1, 2))]),
        (3, [s(3, ci(-3, 2)), s(4, ci(-1, 1)), z(), s(3, ci(-1, 2))]),
        (4, [s(4, ci(-3, 2)), z(), s(3, ci(-1, 1)), s(4, ci(1, 2))]),
    ];
    rows.into_iter()
        .flat_map(|(row, vals)| {
            [U0, U1pU2, U1mU2, U3].into_iter().zip(vals).map(move |(generator, value)| Table1Cell {
                row,
                generator,
                value,
            })
        })
        .collect()
}

fn wedge_comb(terms: &[(&[u8], ComplexRadical)]) -> LinComb<Wedge> {
    terms.iter().map(|(idx, coeff)| (Wedge::new(idx).expect("valid fixture wedge"), coeff.clone())).collect()
}

/// The action of `𝔩_ℂ` on `Λ²(𝔭_ℂ)` as printed, row by row.
pub fn printed_table3() -> Vec<Table3Cell> {
    use LieBasisSymbol::*;
    let z = LinComb::<Wedge>::zero;
    let rows: Vec<(&[u8], [LinComb<Wedge>; 4])> = vec![
        (&[1, 2], [wedge_comb(&[(&[1, 2], ci(3, 1))]), z(), z(), z()]),
        (
            &[2, 3],
            [z(), wedge_comb(&[(&[1, 3], ci(1, 1)), (&[2, 4], ci(-1, 1))]), z(), wedge_comb(&[(&[2, 3], ci(-1, 1))])],
        ),
        (&[3, 4], [wedge_comb(&[(&[3, 4], ci(-3, 1))]), z(), z(), z()]),
        (&[1, 3], [z(), wedge_comb(&[(&[1, 4], ci(-1, 1))]), wedge_comb(&[(&[2, 3], ci(1, 1))]), z()]),
        (
            &[1, 4],
            [z(), z(), wedge_comb(&[(&[1, 3], ci(-1, 1)), (&[2, 4], ci(1, 1))]), wedge_comb(&[(&[1, 4], ci(1, 1))])],
        ),
        (&[2, 4], [z(), wedge_comb(&[(&[1, 4], ci(1, 1))]), wedge_comb(&[(&[2, 3], ci(-1, 1))]), z()]),
    ];
    rows.into_iter()
        .flat_map(|(row, vals)| {
            let row = Wedge::new(row).expect("valid fixture wedge");
            [U0, U1pU2, U1mU2, U3].into_iter().zip(vals).map(move |(generator, value)| Table3Cell {
                row: row.clone(),
                generator,
                value,
            })
        })
        .collect()
}

/// Outcome of comparing one table cell against the matrix computation.
#[derive(Debug, Clone, Serialize)]
pub struct CellCheck {
    pub table: &'static str,
    pub row: String,
    pub generator: LieBasisSymbol,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

pub fn verify_table1_against(cells: &[Table1Cell]) -> Vec<CellCheck> {
    cells
        .iter()
        .map(|cell| {
            let computed = adjoint_on_p(&cell.generator.matrix(), cell.row);
            let (computed_str, pass) = match computed {
                Ok(v) => (format!("{v:?}"), v == cell.value),
                Err(e) => (e.to_string(), false),
            };
            CellCheck {
                table: "table1",
                row: format!("X{}", cell.row),
                generator: cell.generator,
                expected: format!("{:?}", cell.value),
                computed: computed_str,
                pass,
            }
        })
        .collect()
}

pub fn verify_table3_against(cells: &[Table3Cell]) -> Vec<CellCheck> {
    cells
        .iter()
        .map(|cell| {
            let computed = act_on_wedge(&cell.generator.matrix(), &cell.row);
            let (computed_str, pass) = match computed {
                Ok(v) => (format!("{v:?}"), v == cell.value),
                Err(e) => (e.to_string(), false),
            };
            CellCheck {
                table: "table3",
                row: cell.row.to_string(),
                generator: cell.generator,
                expected: format!("{:?}", cell.value),
                computed: computed_str,
                pass,
            }
        })
        .collect()
}

/// Recomputes every cell of the printed `𝔩_ℂ`-on-`𝔭_ℂ` table from brackets.
pub fn verify_table1() -> Vec<CellCheck> {
    verify_table1_against(&printed_table1())
}

/// Recomputes every cell of the printed `𝔩_ℂ`-on-`Λ²𝔭_ℂ` table from brackets.
pub fn verify_table3() -> Vec<CellCheck> {
    verify_table3_against(&printed_table3())
}

/// `[X_i, X_j]` projected to `𝔭_ℂ` for all pairs `i < j`; every entry should be zero.
pub fn p_brackets_mod_l() -> Vec<((u8, u8), Result<PBasisVector, LieError>)> {
    let mut out = Vec::new();
    for i in 1..=4u8 {
        for j in (i + 1)..=4u8 {
            out.push(((i, j), project_to_p(&bracket(&x(i.into()), &x(j.into())))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_values() {
        assert_eq!(u0(), Matrix3::diag([ci(1, 2), ci(1, 2), ci(-1, 1)]));
        let mut x3 = Matrix3::zero();
        x3.entries[2][0] = c(1, 1);
        assert_eq!(LieBasisSymbol::X3.matrix(), x3);
        assert_eq!(gamma().mul(&gamma()), Matrix3::identity());
    }

    #[test]
    fn gamma_congruence_conventions_coincide() {
        let g = gamma();
        assert_eq!(g.adjoint().mul(&j_diag()).mul(&g), j_par());
        assert_eq!(g.transpose().mul(&j_diag()).mul(&g), j_par());
        assert_eq!(g.adjoint(), g);
    }

    #[test]
    fn bracket_examples() {
        assert!(bracket(&u0(), &u3()).is_zero());
        assert!(bracket(&x(2), &x(2)).is_zero());
        assert!(bracket(&x(1), &x(2)).is_zero());
        let pm = bracket(&LieBasisSymbol::U1pU2.matrix(), &LieBasisSymbol::U1mU2.matrix());
        assert_eq!(pm, u3().scale(&ci(2, 1)));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_to_p(&x(1)).unwrap(), PBasisVector::single(1, c(1, 1)));
        assert!(project_to_p(&u0()).unwrap().is_zero());
        let y1 = project_to_p(&y(1)).unwrap();
        assert_eq!(y1, PBasisVector([c(1, 1), c(0, 1), c(1, 1), c(0, 1)]));
        let bad = Matrix3::diag([c(1, 1), c(0, 1), c(0, 1)]);
        assert!(matches!(project_to_p(&bad), Err(LieError::NotInLieAlgebra(_))));
    }

    #[test]
    fn x_from_y() {
        let half = c(1, 2);
        let i = ComplexRadical::i();
        assert_eq!(x(1), y(1).sub(&y(2).scale(&i)).scale(&half));
        assert_eq!(x(2), y(3).sub(&y(4).scale(&i)).scale(&half));
        assert_eq!(x(3), y(1).add(&y(2).scale(&i)).scale(&half));
        assert_eq!(x(4), y(3).add(&y(4).scale(&i)).scale(&half));
    }

    #[test]
    fn membership() {
        assert!(is_in_g(&y(1), &j_diag()));
        assert!(!is_in_g(&x(1), &j_diag()));
        assert!(is_in_g(&u0(), &j_diag()) && is_in_k(&u0()));
        for n in 1..=4 {
            assert!(is_in_g(&y(n), &j_diag()));
            assert!(!is_in_k(&y(n)));
        }
        assert!(is_in_k(&u1()) && is_in_k(&u2()) && is_in_k(&u3()));
    }

    #[test]
    fn tables_reproduced() {
        for cell in verify_table1().into_iter().chain(verify_table3()) {
            assert!(cell.pass, "{cell:?}");
        }
    }

    #[test]
    fn selected_cells() {
        let v = adjoint_on_p(&LieBasisSymbol::U1pU2.matrix(), 2).unwrap();
        assert_eq!(v, PBasisVector::single(1, ci(1, 1)));
        let w = act_on_wedge(&u3(), &Wedge::new(&[2, 3]).unwrap()).unwrap();
        assert_eq!(w, wedge_comb(&[(&[2, 3], ci(-1, 1))]));
        let w = act_on_wedge(&LieBasisSymbol::U1mU2.matrix(), &Wedge::new(&[1, 2]).unwrap()).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn wrong_fixture_detected() {
        let mut cells = printed_table1();
        cells[0].value = PBasisVector::single(1, ci(1, 1));
        assert!(!verify_table1_against(&cells)[0].pass);
    }

    #[test]
    fn cartan_structure() {
        // [𝔩, 𝔭] ⊆ 𝔭
        for u in LieBasisSymbol::L_GENERATORS {
            for i in 1..=4 {
                let split = decompose(&bracket(&u.matrix(), &x(i))).unwrap();
                assert!(split.l_part.iter().all(ComplexRadical::is_zero));
            }
        }
        // [X_i, X_j] ≡ 0 mod 𝔩
        for (_, r) in p_brackets_mod_l() {
            assert!(r.unwrap().is_zero());
        }
        // 𝔭⁺ and 𝔭⁻ are abelian as matrices
        assert!(bracket(&x(1), &x(2)).is_zero());
        assert!(bracket(&x(3), &x(4)).is_zero());
    }

    #[test]
    fn conjugation_swaps_p_plus_minus() {
        assert_eq!(real_structure(&x(1)), x(3));
        assert_eq!(real_structure(&x(2)), x(4));
        assert_eq!(real_structure(&x(3)), x(1));
        assert_eq!(real_structure(&x(4)), x(2));
        assert_eq!(real_structure(&y(1)), y(1));
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(Wedge::all(2).len(), 6);
        assert_eq!(
            Wedge::all(2).iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            ["X12", "X13", "X14", "X23", "X24", "X34"]
        );
        assert_eq!(Wedge::from_sequence(&[3, 1]), Some((Wedge::new(&[1, 3]).unwrap(), -1)));
        assert_eq!(Wedge::from_sequence(&[2, 2]), None);
        assert!(Wedge::new(&[3, 1]).is_err());
        assert_eq!(Wedge::new(&[1, 4]).unwrap().bidegree(), (1, 1));
    }

    #[test]
    fn bigrading_preserved() {
        for u in LieBasisSymbol::L_GENERATORS {
            for w in Wedge::all(2) {
                let img = act_on_wedge(&u.matrix(), &w).unwrap();
                for (v, _) in &img {
                    assert_eq!(v.bidegree(), w.bidegree());
                }
            }
        }
    }
}
