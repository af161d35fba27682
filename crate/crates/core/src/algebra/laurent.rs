use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::{fmt_terms, forward_binop, Poly};
use crate::{Error, Result};

/// An element of `Z[q, q^-1]` stored as a sparse map from exponent to
/// non-zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds `Σ coeffs[i] q^(min_exp + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let c = c.into();
                (!c.is_zero()).then(|| (min_exp + i as i64, c))
            })
            .collect();
        Self { terms }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn trailing_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// `(min_exp, coeffs)` with every exponent between the extremes present.
    /// The zero polynomial gives `(0, [])`.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.degree()) else {
            return (0, Vec::new());
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (lo, coeffs)
    }

    /// Dense ascending coefficients of a polynomial with no negative exponents,
    /// starting at `q^0`.
    pub fn to_poly(&self) -> Option<Poly> {
        match self.min_degree() {
            None => Some(Poly::zero()),
            Some(lo) if lo < 0 => None,
            Some(_) => {
                let hi = self.degree().unwrap_or(0);
                let mut coeffs = vec![BigInt::zero(); hi as usize + 1];
                for (e, c) in &self.terms {
                    coeffs[*e as usize] = c.clone();
                }
                Some(Poly::from_coeffs(coeffs))
            }
        }
    }

    /// Multiplication by `q^by`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// `q^s · p(q^-1)`: the term of exponent `e` moves to `s - e`.
    pub fn reciprocal(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (s - e, c.clone())).collect(),
        }
    }

    /// Substitutes `q ↦ q^w`.
    pub fn substitute_power(&self, w: i64) -> Self {
        if w == 0 {
            return Self::constant(self.terms.values().sum::<BigInt>());
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * w, c.clone())).collect(),
        }
    }

    /// Drops every term of exponent `>= precision` (reduction modulo `q^precision`).
    pub fn truncate_above(&self, precision: i64) -> Self {
        Self {
            terms: self.terms.range(..precision).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Exact value at `q = x`.
    ///
    /// Negative exponents are refused unless `allow_negative_exponents` is set,
    /// and then need `x != 0`.
    pub fn eval(&self, x: &BigRational, allow_negative_exponents: bool) -> Result<BigRational> {
        if self.min_degree().is_some_and(|e| e < 0) {
            if !allow_negative_exponents {
                return Err(Error::NegativeExponent);
            }
            if x.is_zero() {
                return Err(Error::EvaluationAtZero);
            }
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * Pow::pow(x, *e as i32);
        }
        Ok(acc)
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether `p` equals `q^(deg p) · p(q^-1)`.
    ///
    /// Intended for polynomials starting at `q^0`; a non-zero minimum exponent
    /// is compared against the symmetric span `[min, max]`.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_degree(), self.degree()) {
            (Some(lo), Some(hi)) => self.reciprocal(lo + hi) == *self,
            _ => true,
        }
    }

    /// Whether every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// If this is `±q^k`, its inverse `±q^-k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() || (-c).is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl From<BigInt> for LaurentPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<&Poly> for LaurentPolynomial {
    fn from(p: &Poly) -> Self {
        Self::from_coeffs(0, p.coeffs().iter().cloned())
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) =
            (self.min_degree(), self.degree(), rhs.min_degree(), rhs.degree())
        else {
            return LaurentPolynomial::zero();
        };
        let width = (a_hi - a_lo + b_hi - b_lo) as usize + 1;
        let mut acc = vec![BigInt::zero(); width];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea - a_lo + eb - b_lo) as usize] += ca * cb;
            }
        }
        LaurentPolynomial::from_coeffs(a_lo + b_lo, acc)
    }
}

forward_binop!(Add, add, LaurentPolynomial);
forward_binop!(Sub, sub, LaurentPolynomial);
forward_binop!(Mul, mul, LaurentPolynomial);

impl<'a> AddAssign<&'a LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &'a LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &'a LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: LaurentPolynomial) {
        *self -= &rhs;
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -self.clone()
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        LaurentPolynomial::one()
    }
}

impl core::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl core::iter::Product for LaurentPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}
