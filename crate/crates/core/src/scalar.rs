//! Exact arithmetic in the real field generated over ℚ by square roots of
//! squarefree integers, and its complexification.
//!
//! A [`RadicalScalar`] is kept in canonical form at all times: a sparse map
//! from squarefree radicands to non-zero rational coefficients. Because the
//! square roots of distinct squarefree integers are linearly independent over
//! ℚ, structural equality coincides with numerical equality and the empty map
//! is the only representation of zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("square root of negative rational {0}")]
    NegativeRadicand(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar: {0}")]
    Malformed(String),
}

/// Convenience constructor for a rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Splits `n = s² · d` with `d` squarefree, by trial division.
fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() {
        free *= rest;
    }
    (square, free)
}

/// Prime divisors of a squarefree integer.
fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        if (&rest % &p).is_zero() {
            out.push(p.clone());
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() {
        out.push(rest);
    }
    out
}

/// An element `Σ c_d·√d` of ℚ(√2, √3, √5, …) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<BigUint, Rational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// Builds a scalar from arbitrary `(radicand, coefficient)` pairs,
    /// extracting square factors, merging like radicands and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, Rational)>,
    {
        let mut out = Self::zero();
        for (d, c) in terms {
            if d.is_zero() || c.is_zero() {
                continue;
            }
            let (s, free) = squarefree_split(&d);
            out.add_term(free, c * Rational::from_integer(BigInt::from(s)));
        }
        out
    }

    /// `√q` for a non-negative rational, as a single canonical term.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, ScalarError> {
        if q.is_negative() {
            return Err(ScalarError::NegativeRadicand(q.clone()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // √(a/b) = √(ab)/b
        let a = q.numer().magnitude();
        let b = q.denom().magnitude();
        let (s, free) = squarefree_split(&(a * b));
        let coeff = Rational::new(BigInt::from(s), BigInt::from(b.clone()));
        let mut out = Self::zero();
        out.add_term(free, coeff);
        Ok(out)
    }

    /// `√n` for a non-negative integer.
    pub fn sqrt_int(n: u64) -> Self {
        Self::sqrt_rational(&Rational::from_integer(n.into())).expect("non-negative")
    }

    fn add_term(&mut self, radicand: BigUint, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational value, if this scalar has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(d, c)| (d.clone(), c * q)).collect() }
    }

    /// Galois conjugate flipping the sign of every `√d` with `p | d`.
    pub fn conjugate_at(&self, p: &BigUint) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| if (d % p).is_zero() { (d.clone(), -c) } else { (d.clone(), c.clone()) })
                .collect(),
        }
    }

    /// Primes dividing at least one radicand.
    pub fn primes(&self) -> BTreeSet<BigUint> {
        self.terms.keys().flat_map(prime_factors).collect()
    }

    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (d, c) = self.terms.iter().next().expect("one term");
            // 1/(c√d) = √d/(cd)
            let inv = (c * Rational::from_integer(BigInt::from(d.clone()))).recip();
            let mut out = Self::zero();
            out.add_term(d.clone(), inv);
            return Ok(out);
        }
        // Multiplying by σ_p(a) for each prime in turn produces the product
        // of all 2^m conjugates; the final value is rational.
        let mut norm = self.clone();
        let mut cofactor = Self::one();
        for p in self.primes() {
            let conj = norm.conjugate_at(&p);
            cofactor = &cofactor * &conj;
            norm = &norm * &conj;
        }
        let q = norm.as_rational().expect("norm over all conjugates is rational");
        Ok(cofactor.scale(&q.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                if d.is_one() {
                    cf
                } else {
                    cf * d.to_f64().unwrap_or(f64::NAN).sqrt()
                }
            })
            .sum()
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if d.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "√{d}")?;
            } else {
                write!(f, "{c}·√{d}")?;
            }
        }
        Ok(())
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for (d, c) in &rhs.terms {
            self.add_term(d.clone(), c.clone());
        }
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        for (d, c) in &rhs.terms {
            self.add_term(d.clone(), -c);
        }
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar { terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect() }
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                // √a·√b = g·√(ab/g²), g = gcd(a, b), for squarefree a, b
                let g = d1.gcd(d2);
                let d = (d1 / &g) * (d2 / &g);
                let c = c1 * c2 * Rational::from_integer(BigInt::from(g));
                out.add_term(d, c);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(RadicalScalar, Add add, Sub sub, Mul mul);

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

/// `re + i·im` with both parts in the radical field.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexRadical {
    pub re: RadicalScalar,
    pub im: RadicalScalar,
}

impl ComplexRadical {
    pub fn new(re: RadicalScalar, im: RadicalScalar) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(RadicalScalar::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(RadicalScalar::zero(), RadicalScalar::one())
    }

    pub fn real(re: RadicalScalar) -> Self {
        Self::new(re, RadicalScalar::zero())
    }

    pub fn imag(im: RadicalScalar) -> Self {
        Self::new(RadicalScalar::zero(), im)
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(RadicalScalar::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::real(RadicalScalar::from_frac(num, den))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::real(RadicalScalar::from_rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.re.scale(q), self.im.scale(q))
    }

    /// Multiplication by a real radical scalar.
    pub fn scale_real(&self, s: &RadicalScalar) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    /// `|z|²`, a non-negative element of the real radical field.
    pub fn norm_sqr(&self) -> RadicalScalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let inv = self.norm_sqr().invert()?;
        Ok(self.conj().scale_real(&inv))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for ComplexRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ComplexRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i·({})", self.im),
            (false, false) => write!(f, "({}) + i·({})", self.re, self.im),
        }
    }
}

impl Add for &ComplexRadical {
    type Output = ComplexRadical;
    fn add(self, rhs: &ComplexRadical) -> ComplexRadical {
        ComplexRadical::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&ComplexRadical> for ComplexRadical {
    fn add_assign(&mut self, rhs: &ComplexRadical) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ComplexRadical> for ComplexRadical {
    fn sub_assign(&mut self, rhs: &ComplexRadical) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Sub for &ComplexRadical {
    type Output = ComplexRadical;
    fn sub(self, rhs: &ComplexRadical) -> ComplexRadical {
        ComplexRadical::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for &ComplexRadical {
    type Output = ComplexRadical;
    fn neg(self) -> ComplexRadical {
        ComplexRadical::new(-&self.re, -&self.im)
    }
}

impl Neg for ComplexRadical {
    type Output = ComplexRadical;
    fn neg(self) -> ComplexRadical {
        -&self
    }
}

impl Mul for &ComplexRadical {
    type Output = ComplexRadical;
    fn mul(self, rhs: &ComplexRadical) -> ComplexRadical {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        ComplexRadical::new(re, im)
    }
}

forward_owned!(ComplexRadical, Add add, Sub sub, Mul mul);

impl From<RadicalScalar> for ComplexRadical {
    fn from(re: RadicalScalar) -> Self {
        Self::real(re)
    }
}

impl From<i64> for ComplexRadical {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

// Serialization: {re: [[radicand, num, den], …], im: […]}, radicands
// increasing. Integers that fit in 64 bits are JSON numbers, larger ones
// decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

impl WireInt {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => WireInt::Signed(v),
            None => WireInt::Text(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, ScalarError> {
        match self {
            WireInt::Signed(v) => Ok(BigInt::from(*v)),
            WireInt::Unsigned(v) => Ok(BigInt::from(*v)),
            WireInt::Text(s) => s.parse().map_err(|_| ScalarError::Malformed(format!("bad integer {s:?}"))),
        }
    }
}

type WireTerm = (WireInt, WireInt, WireInt);

fn radical_to_wire(r: &RadicalScalar) -> Vec<WireTerm> {
    r.terms()
        .map(|(d, c)| {
            (WireInt::from_big(&BigInt::from(d.clone())), WireInt::from_big(c.numer()), WireInt::from_big(c.denom()))
        })
        .collect()
}

fn radical_from_wire(terms: &[WireTerm]) -> Result<RadicalScalar, ScalarError> {
    let mut pairs = Vec::with_capacity(terms.len());
    for (d, n, q) in terms {
        let d = d.to_big()?;
        let q = q.to_big()?;
        if d.is_negative() || q.is_zero() {
            return Err(ScalarError::Malformed("negative radicand or zero denominator".into()));
        }
        pairs.push((d.magnitude().clone(), Rational::new(n.to_big()?, q)));
    }
    Ok(RadicalScalar::from_terms(pairs))
}

impl Serialize for ComplexRadical {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ComplexRadical", 2)?;
        st.serialize_field("re", &radical_to_wire(&self.re))?;
        st.serialize_field("im", &radical_to_wire(&self.im))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ComplexRadical {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            re: Vec<WireTerm>,
            im: Vec<WireTerm>,
        }
        let w = Wire::deserialize(deserializer)?;
        let re = radical_from_wire(&w.re).map_err(de::Error::custom)?;
        let im = radical_from_wire(&w.im).map_err(de::Error::custom)?;
        Ok(ComplexRadical::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms_of(r: &RadicalScalar) -> Vec<(u64, Rational)> {
        r.terms().map(|(d, c)| (d.to_u64().unwrap(), c.clone())).collect()
    }

    fn sq(n: u64) -> RadicalScalar {
        RadicalScalar::sqrt_int(n)
    }

    #[test]
    fn add_merges_and_cancels() {
        assert_eq!(terms_of(&(&sq(2) + &sq(2))), vec![(2, rat(2, 1))]);
        assert!((&sq(2) + &(-&sq(2))).is_zero());
        let r = &RadicalScalar::one() + &sq(3);
        assert_eq!(terms_of(&r), vec![(1, rat(1, 1)), (3, rat(1, 1))]);
    }

    #[test]
    fn mul_reduces_radicands() {
        assert_eq!(terms_of(&(&sq(2) * &sq(6))), vec![(3, rat(2, 1))]);
        assert_eq!(&sq(3) * &sq(3), RadicalScalar::from_int(3));
        let a = &RadicalScalar::one() + &sq(2);
        let b = &RadicalScalar::one() - &sq(2);
        assert_eq!(&a * &b, RadicalScalar::from_int(-1));
    }

    #[test]
    fn sqrt_rational_cases() {
        let r = RadicalScalar::sqrt_rational(&rat(4, 9)).unwrap();
        assert_eq!(r, RadicalScalar::from_frac(2, 3));
        let r = RadicalScalar::sqrt_rational(&rat(8, 1)).unwrap();
        assert_eq!(terms_of(&r), vec![(2, rat(2, 1))]);
        let r = RadicalScalar::sqrt_rational(&rat(3, 2)).unwrap();
        assert_eq!(terms_of(&r), vec![(6, rat(1, 2))]);
        assert_eq!(RadicalScalar::sqrt_rational(&rat(-1, 2)), Err(ScalarError::NegativeRadicand(rat(-1, 2))));
        assert!(RadicalScalar::sqrt_rational(&rat(0, 1)).unwrap().is_zero());
    }

    #[test]
    fn invert_cases() {
        let two_sqrt2 = sq(2).scale(&rat(2, 1));
        assert_eq!(terms_of(&two_sqrt2.invert().unwrap()), vec![(2, rat(1, 4))]);
        let a = &RadicalScalar::one() + &sq(2);
        assert_eq!(a.invert().unwrap(), &sq(2) - &RadicalScalar::one());
        let b = &sq(2) + &sq(3);
        assert_eq!(b.invert().unwrap(), &sq(3) - &sq(2));
        assert_eq!(RadicalScalar::zero().invert(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn invert_three_primes() {
        let a = &(&(&RadicalScalar::one() + &sq(2)) + &sq(3)) + &sq(5).scale(&rat(7, 3));
        let inv = a.invert().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn complex_ops() {
        let i = ComplexRadical::i();
        assert_eq!(&i * &i, ComplexRadical::from_int(-1));
        let z = ComplexRadical::new(RadicalScalar::one(), sq(3));
        assert_eq!(z.conj(), ComplexRadical::new(RadicalScalar::one(), -&sq(3)));
        assert_eq!(i.invert().unwrap(), -&i);
        assert!(ComplexRadical::zero().invert().is_err());
        let w = z.invert().unwrap();
        assert!((&z * &w).is_one());
    }

    #[test]
    fn to_float_values() {
        assert!((sq(2).to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(RadicalScalar::zero().to_f64(), 0.0);
        let r = RadicalScalar::sqrt_rational(&rat(3, 2)).unwrap();
        // high-precision value of √(3/2)
        assert!((r.to_f64() - 1.224_744_871_391_589_1).abs() < 1e-15);
    }

    #[test]
    fn big_binomial_sqrt() {
        // C(80, 40) squared does not fit in 64 bits
        let mut c = BigInt::one();
        for i in 0..40u32 {
            c = c * BigInt::from(80 - i) / BigInt::from(i + 1);
        }
        let r = RadicalScalar::sqrt_rational(&Rational::from_integer(c.clone())).unwrap();
        assert_eq!(&r * &r, RadicalScalar::from_rational(Rational::from_integer(c)));
    }

    #[test]
    fn serialization_schema() {
        let z = ComplexRadical::new(&RadicalScalar::from_frac(1, 2) + &sq(6).scale(&rat(-3, 4)), sq(2));
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"re":[[1,1,2],[6,-3,4]],"im":[[2,1,1]]}"#);
        let back: ComplexRadical = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
    }
}
