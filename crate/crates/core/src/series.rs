//! Truncated power series in `t` over `Z[q, q^-1]` or `Q(q)`.
//!
//! A [`TwistedSeries`] with twist `w` lives in the ring where
//! `t^e * t^f = q^(w·e·f) t^(e+f)`; twist 0 is the ordinary power series ring.
//! Every series carries its truncation order `N` (coefficients of `t^0..=t^N`);
//! binary operations truncate to the smaller order.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, Neg, SubAssign};

use num_traits::{One, Zero};

use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::{Error, Result};

/// A commutative coefficient ring containing the powers of `q`.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `q^exp`.
    fn q_pow(exp: i64) -> Self;
    fn try_inverse(&self) -> Option<Self>;

    fn scale_q(&self, exp: i64) -> Self {
        if exp == 0 {
            self.clone()
        } else {
            self.mul_ref(&Self::q_pow(exp))
        }
    }
}

impl Coefficient for LaurentPolynomial {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn q_pow(exp: i64) -> Self {
        LaurentPolynomial::q_pow(exp)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn scale_q(&self, exp: i64) -> Self {
        self.shift(exp)
    }
}

impl Coefficient for RationalFunction {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn q_pow(exp: i64) -> Self {
        RationalFunction::q_pow(exp)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct TwistedSeries<C> {
    twist: u32,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TwistedSeries<C> {
    /// A series of order `coeffs.len() - 1`. Panics on an empty coefficient list.
    pub fn new(twist: u32, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the t^0 coefficient");
        Self { twist, coeffs }
    }

    pub fn from_fn(twist: u32, order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self::new(twist, (0..=order).map(f).collect())
    }

    pub fn zero(twist: u32, order: usize) -> Self {
        Self::from_fn(twist, order, |_| C::zero())
    }

    pub fn one(twist: u32, order: usize) -> Self {
        Self::from_fn(twist, order, |d| if d == 0 { C::one() } else { C::zero() })
    }

    /// The series `t` (zero if `order == 0`).
    pub fn t(twist: u32, order: usize) -> Self {
        Self::from_fn(twist, order, |d| if d == 1 { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].try_inverse().is_some()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.twist, self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Same coefficients reinterpreted with another twist.
    pub fn with_twist(mut self, twist: u32) -> Self {
        self.twist = twist;
        self
    }

    fn check_twist(&self, other: &Self) -> Result<()> {
        if self.twist != other.twist {
            return Err(Error::TwistMismatch {
                left: self.twist,
                right: other.twist,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_twist(other)?;
        let n = self.order().min(other.order());
        Ok(Self::from_fn(self.twist, n, |d| {
            let mut c = self.coeffs[d].clone();
            c += &other.coeffs[d];
            c
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_twist(other)?;
        let n = self.order().min(other.order());
        Ok(Self::from_fn(self.twist, n, |d| {
            let mut c = self.coeffs[d].clone();
            c -= &other.coeffs[d];
            c
        }))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.twist, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    fn product_with(&self, other: &Self, twist: u32) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(twist, n, |d| {
            let mut acc = C::zero();
            for e in 0..=d {
                let (a, b) = (&self.coeffs[e], &other.coeffs[d - e]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let term = a.mul_ref(b).scale_q(twist as i64 * (e * (d - e)) as i64);
                acc += &term;
            }
            acc
        })
    }

    /// `Σ_{e+f=d} q^(w·e·f) a_e b_f`.
    pub fn twisted_mul(&self, other: &Self) -> Result<Self> {
        self.check_twist(other)?;
        Ok(self.product_with(other, self.twist))
    }

    /// The Cauchy product in `R[[t]]`, ignoring twists; the result has twist 0.
    pub fn ordinary_mul(&self, other: &Self) -> Self {
        self.product_with(other, 0)
    }

    /// `t^d ↦ q^(-w·d(d-1)/2) t^d`, turning the twisted product into the
    /// ordinary one. The result has twist 0.
    pub fn twist_transform(&self) -> Self {
        let w = self.twist as i64;
        Self::new(
            0,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| c.scale_q(-w * tri(d)))
                .collect(),
        )
    }

    /// Inverse of [`twist_transform`](Self::twist_transform): reinterprets an
    /// untwisted series in the twist-`w` ring.
    pub fn untwist_transform(&self, w: u32) -> Self {
        Self::new(
            w,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| c.scale_q(w as i64 * tri(d)))
                .collect(),
        )
    }

    /// `A(t) ↦ A(q^e t)`.
    pub fn substitute_scale(&self, e: i64) -> Self {
        Self::new(
            self.twist,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| c.scale_q(e * d as i64))
                .collect(),
        )
    }

    /// `self / divisor` in `R[[t]]`. Both series must be untwisted and the
    /// divisor's constant coefficient must be a unit.
    pub fn series_div(&self, divisor: &Self) -> Result<Self> {
        for s in [self, divisor] {
            if s.twist != 0 {
                return Err(Error::Twisted(s.twist));
            }
        }
        let inv0 = divisor.coeffs[0].try_inverse().ok_or(Error::NonUnit)?;
        let n = self.order().min(divisor.order());
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for d in 0..=n {
            let mut acc = self.coeffs[d].clone();
            for (j, x) in out.iter().enumerate() {
                let b = &divisor.coeffs[d - j];
                if !b.is_zero() && !x.is_zero() {
                    acc -= &x.mul_ref(b);
                }
            }
            out.push(acc.mul_ref(&inv0));
        }
        Ok(Self::new(0, out))
    }

    /// The inverse in the twisted ring: the unique `X` with `self * X = 1`.
    pub fn twisted_inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonUnit)?;
        let w = self.twist as i64;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        for d in 0..=self.order() {
            let mut acc = if d == 0 { C::one() } else { C::zero() };
            for (j, x) in out.iter().enumerate() {
                let a = &self.coeffs[d - j];
                if !a.is_zero() && !x.is_zero() {
                    acc -= &a.mul_ref(x).scale_q(w * ((d - j) * j) as i64);
                }
            }
            out.push(acc.mul_ref(&inv0));
        }
        Ok(Self::new(self.twist, out))
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> TwistedSeries<D> {
        TwistedSeries::new(self.twist, self.coeffs.iter().map(f).collect())
    }
}

impl<C: fmt::Debug> fmt::Debug for TwistedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedSeries")
            .field("twist", &self.twist)
            .field("order", &(self.coeffs.len() - 1))
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<C: fmt::Display> fmt::Display for TwistedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) t^{d}")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

pub(crate) fn tri(d: usize) -> i64 {
    (d * d.saturating_sub(1) / 2) as i64
}

/// Shifts `k - 1`, `k = 1..=m`: the equation of the full Hilbert scheme series.
pub fn full_shifts(m: u32) -> Vec<i64> {
    (1..=m as i64).map(|k| k - 1).collect()
}

/// Shifts `1 - k`, `k = 1..=m`: the equation of the punctual series.
pub fn punctual_shifts(m: u32) -> Vec<i64> {
    (1..=m as i64).map(|k| 1 - k).collect()
}

/// The unique `G ∈ 1 + t·Z[q^±][[t]]` with `G(t) = 1 + t · Π_k G(q^(s_k) t)`,
/// truncated at `t^order`. One factor per entry of `shifts`.
///
/// The `t^d` coefficient of the right side only involves coefficients of
/// degree `< d`, so the coefficients are filled in one pass.
pub fn solve_functional_equation(order: usize, shifts: &[i64]) -> TwistedSeries<LaurentPolynomial> {
    let mut g: Vec<LaurentPolynomial> = Vec::with_capacity(order + 1);
    g.push(LaurentPolynomial::one());
    for d in 1..=order {
        // coefficient of t^(d-1) in Π_k G(q^{s_k} t), using g_0..g_{d-1}
        let known = TwistedSeries::new(0, g.clone());
        let mut prod = TwistedSeries::one(0, d - 1);
        for &s in shifts {
            prod = prod.ordinary_mul(&known.truncate(d - 1).substitute_scale(s));
        }
        g.push(prod.coeff(d - 1).clone());
    }
    TwistedSeries::new(0, g)
}

/// `1 + t · Π_k G(q^(s_k) t) - G`, truncated at the order of `g`.
pub fn functional_equation_residual<C: Coefficient>(
    g: &TwistedSeries<C>,
    shifts: &[i64],
) -> TwistedSeries<C> {
    let n = g.order();
    let mut prod = TwistedSeries::one(0, n);
    for &s in shifts {
        prod = prod.ordinary_mul(&g.substitute_scale(s));
    }
    // multiply by t
    let rhs = TwistedSeries::from_fn(0, n, |d| match d {
        0 => C::one(),
        _ => prod.coeff(d - 1).clone(),
    });
    rhs.sub(&g.clone().with_twist(0)).expect("both untwisted")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    type L = LaurentPolynomial;

    fn lp(min_exp: i64, c: &[i64]) -> L {
        L::from_coeffs(min_exp, c.iter().copied())
    }

    fn series(twist: u32, c: Vec<L>) -> TwistedSeries<L> {
        TwistedSeries::new(twist, c)
    }

    #[test]
    fn twisted_t_squared() {
        let t = TwistedSeries::<L>::t(1, 3);
        let tt = t.twisted_mul(&t).unwrap();
        assert_eq!(tt, series(1, vec![L::zero(), L::zero(), L::q(), L::zero()]));
        let one = TwistedSeries::<L>::one(1, 3);
        assert_eq!(tt.twisted_mul(&one).unwrap(), tt);
    }

    #[test]
    fn twist_mismatch_is_an_error() {
        let a = TwistedSeries::<L>::t(1, 2);
        let b = TwistedSeries::<L>::t(2, 2);
        assert_eq!(
            a.twisted_mul(&b),
            Err(Error::TwistMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn ordinary_products() {
        let a = series(0, vec![L::one(), L::one(), L::zero()]);
        let b = series(0, vec![L::one(), -L::one(), L::zero()]);
        assert_eq!(a.ordinary_mul(&b), series(0, vec![L::one(), L::zero(), -L::one()]));
        let geo = TwistedSeries::<L>::from_fn(0, 5, |_| L::one());
        let one_minus_t = series(0, vec![L::one(), -L::one(), L::zero(), L::zero(), L::zero(), L::zero()]);
        assert_eq!(geo.ordinary_mul(&one_minus_t), TwistedSeries::one(0, 5));
    }

    #[test]
    fn transform_examples() {
        let t2 = series(1, vec![L::zero(), L::zero(), L::one()]);
        assert_eq!(t2.twist_transform(), series(0, vec![L::zero(), L::zero(), lp(-1, &[1])]));
        assert_eq!(TwistedSeries::<L>::one(1, 2).twist_transform(), TwistedSeries::one(0, 2));
        let t = TwistedSeries::<L>::t(1, 2);
        let lhs = t.twisted_mul(&t).unwrap().twist_transform();
        let rhs = t.twist_transform().ordinary_mul(&t.twist_transform());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.coeff(2), &L::one());
    }

    #[test]
    fn scale_substitution() {
        let a = series(0, vec![L::one(), L::one()]);
        assert_eq!(a.substitute_scale(1), series(0, vec![L::one(), L::q()]));
        assert_eq!(a.substitute_scale(0), a);
        assert_eq!(a.substitute_scale(1).substitute_scale(-1), a);
    }

    #[test]
    fn division() {
        let a = series(0, vec![L::one(), lp(0, &[2, 1]), lp(-1, &[1])]);
        assert_eq!(a.series_div(&a).unwrap(), TwistedSeries::one(0, 2));
        let one = TwistedSeries::<L>::one(0, 4);
        let one_minus_t = series(0, vec![L::one(), -L::one(), L::zero(), L::zero(), L::zero()]);
        assert_eq!(
            one.series_div(&one_minus_t).unwrap(),
            TwistedSeries::from_fn(0, 4, |_| L::one())
        );
        let non_unit = series(0, vec![lp(0, &[1, 1]), L::one()]);
        assert_eq!(one.series_div(&non_unit), Err(Error::NonUnit));
        assert_eq!(
            one.series_div(&TwistedSeries::one(1, 4)),
            Err(Error::Twisted(1))
        );
    }

    #[test]
    fn solver_examples() {
        let geo = solve_functional_equation(6, &[0]);
        assert_eq!(geo, TwistedSeries::from_fn(0, 6, |_| L::one()));

        let full = solve_functional_equation(3, &full_shifts(2));
        assert_eq!(full.coeff(2), &lp(0, &[1, 1]));
        assert_eq!(full.coeff(2).shift(1 * 3 + 2), lp(5, &[1, 1]));

        let punctual = solve_functional_equation(3, &punctual_shifts(2));
        assert_eq!(punctual.coeff(3), &lp(-3, &[1, 1, 2, 1]));
        assert_eq!(punctual.coeff(3).shift(3), lp(0, &[1, 1, 2, 1]));
    }

    #[test]
    fn solver_output_satisfies_its_equation() {
        for m in 1..=3u32 {
            for shifts in [full_shifts(m), punctual_shifts(m)] {
                let g = solve_functional_equation(6, &shifts);
                let r = functional_equation_residual(&g, &shifts);
                assert!(r.coeffs().iter().all(Zero::is_zero), "m={m} {shifts:?}");
            }
        }
    }

    #[test]
    fn twisted_inverse_round_trip() {
        let a = series(2, vec![L::one(), lp(0, &[1, 1]), lp(-2, &[3]), lp(0, &[0, 0, 1])]);
        let inv = a.twisted_inverse().unwrap();
        assert_eq!(a.twisted_mul(&inv).unwrap(), TwistedSeries::one(2, 3));
    }
}
