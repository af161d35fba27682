//! q-Pochhammer symbols, Gaussian binomials, group motives and the generating
//! series `H`, `B` used by the motive computations.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{LaurentPolynomial, Poly, RationalFunction};
use crate::series::{tri, TwistedSeries};
use crate::{Error, Result};

type L = LaurentPolynomial;
type Rf = RationalFunction;

/// Length of a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerLength {
    Finite(usize),
    Infinite,
}

/// `(a; q^w)_n` with `a = ±q^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QSymbolSpec {
    pub a_sign: i8,
    pub a_exponent: i64,
    pub base_exponent: u32,
    pub length: PochhammerLength,
}

impl QSymbolSpec {
    pub fn finite(a_sign: i8, a_exponent: i64, base_exponent: u32, n: usize) -> Self {
        Self {
            a_sign,
            a_exponent,
            base_exponent,
            length: PochhammerLength::Finite(n),
        }
    }

    fn a(&self) -> L {
        L::monomial(BigInt::from(self.a_sign), self.a_exponent)
    }
}

/// `(a; q^w)_n = Π_{k<n} (1 - a q^(wk))`.
pub fn q_pochhammer(spec: &QSymbolSpec) -> Result<L> {
    let PochhammerLength::Finite(n) = spec.length else {
        return Err(Error::InvalidArgument(
            "an infinite q-Pochhammer product has no polynomial value".into(),
        ));
    };
    if spec.a_sign != 1 && spec.a_sign != -1 {
        return Err(Error::InvalidArgument(format!("sign {} is not ±1", spec.a_sign)));
    }
    if spec.base_exponent == 0 {
        return Err(Error::InvalidArgument("base exponent must be positive".into()));
    }
    let a = spec.a();
    let w = spec.base_exponent as i64;
    Ok((0..n as i64).map(|k| L::one() - a.shift(w * k)).product())
}

/// `(q^w; q^w)_n` as a dense polynomial.
fn q_factorial_product(n: usize, w: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| {
        &acc * &(Poly::one() - Poly::monomial(BigInt::one(), i * w))
    })
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: usize) -> L {
    L::from_coeffs(0, core::iter::repeat_n(1, n))
}

/// `[d]_q! = Π_{i=1}^d [i]_q`.
pub fn q_factorial(d: usize) -> L {
    (1..=d).map(q_integer).product()
}

/// The Gaussian binomial `[d choose e]` at base `q^w`.
pub fn q_binomial(d: usize, e: usize, w: u32) -> Result<L> {
    if e > d {
        return Err(Error::InvalidArgument(format!("q-binomial with e = {e} > d = {d}")));
    }
    if w == 0 {
        return Err(Error::InvalidArgument("base exponent must be positive".into()));
    }
    let w = w as usize;
    let num = q_factorial_product(d, w);
    let den = &q_factorial_product(e, w) * &q_factorial_product(d - e, w);
    let quot = num
        .div_exact(&den)
        .ok_or_else(|| Error::Certification(format!("[{d} choose {e}] is not a polynomial")))?;
    Ok(L::from(&quot))
}

/// `[GL_d] = Π_{i<d} (q^d - q^i)`.
pub fn gl_motive(d: usize) -> L {
    let d = d as i64;
    (0..d).map(|i| L::q_pow(d) - L::q_pow(i)).product()
}

/// `[B_d] = q^(d(d-1)/2) (q - 1)^d` for the Borel subgroup of `GL_d`.
pub fn borel_motive(d: usize) -> L {
    (L::q() - L::one()).pow(d as u32).shift(tri(d))
}

/// `H^(m)(q, t) = Σ_d q^(-(m-1)d(d-1)/2) t^d / ((1-q)...(1-q^d))`.
pub fn series_h(m: u32, order: usize) -> TwistedSeries<Rf> {
    let w = (m as i64 - 1).max(0);
    TwistedSeries::from_fn(0, order, |d| {
        let den = q_factorial_product(d, 1).shift((w * tri(d)) as usize);
        Rf::new(Poly::one(), den).expect("non-zero denominator")
    })
}

/// `B(q^w, t) = Σ_d q^(w·d(d-1)/2) t^d / (q^w; q^w)_d`.
pub fn series_b(w: u32, order: usize) -> TwistedSeries<Rf> {
    assert!(w >= 1, "B(q^w, t) needs a positive base exponent");
    let w = w as usize;
    TwistedSeries::from_fn(0, order, |d| {
        let num = Poly::monomial(BigInt::one(), w * tri(d) as usize);
        Rf::new(num, q_factorial_product(d, w)).expect("non-zero denominator")
    })
}

/// `Σ_d t^d / ((1-q)...(1-q^d))` placed in the twist-`(m-1)` ring.
pub fn inverse_q_factorial_series(m: u32, order: usize) -> TwistedSeries<Rf> {
    series_h(1, order).with_twist(m.saturating_sub(1))
}

/// `Σ_d [N_d]/[GL_d] t^d` in the twist-`(m-1)` ring: the twisted inverse of
/// [`inverse_q_factorial_series`].
pub fn nilcone_series(m: u32, order: usize) -> Result<TwistedSeries<Rf>> {
    inverse_q_factorial_series(m, order).twisted_inverse()
}

/// Motives `[N^(m)(C^d)]` of the cone of simultaneously nilpotent `m`-tuples
/// of `d × d` matrices, `d = 0..=dmax`.
///
/// Each class is obtained in `Q(q)` and then certified to be a Laurent
/// polynomial; a failure is reported as [`Error::Certification`].
pub fn nilcone_motive(m: u32, dmax: usize) -> Result<Vec<L>> {
    let series = nilcone_series(m, dmax)?;
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            (c * &Rf::from(&gl_motive(d))).to_laurent().map_err(|e| {
                Error::Certification(format!("nilpotent cone motive m={m} d={d}: {e}"))
            })
        })
        .collect()
}

/// Which of the two q-binomial-theorem identities a check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QIdentity {
    /// `B(q, t) = (-t; q)_∞`.
    ProductForm,
    /// `Σ_d (a;q)_d/(q;q)_d z^d = (az;q)_∞ / (z;q)_∞`.
    Quotient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckMethod {
    /// Series side expanded q-adically against a finite prefix of the product.
    QAdic,
    /// Series side checked exactly against the q-difference equation that
    /// characterizes the infinite product.
    DifferenceEquation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBinomialCheck {
    pub identity: QIdentity,
    pub method: CheckMethod,
    pub base_exponent: u32,
    /// `(sign, j)` for `a = ±q^j`; `None` for the product form.
    pub a: Option<(i8, i64)>,
    /// Lowest `t`-degree where the two sides differ.
    pub first_failure: Option<usize>,
}

impl QBinomialCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBinomialReport {
    pub order: usize,
    pub precision: i64,
    pub checks: Vec<QBinomialCheck>,
}

impl QBinomialReport {
    pub fn failures(&self) -> impl Iterator<Item = &QBinomialCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Parameter grid for [`qbinomial_theorem_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBinomialSamples {
    pub base_exponents: Vec<u32>,
    /// `(sign, j)` pairs for `a = ±q^j`.
    pub a_values: Vec<(i8, i64)>,
    /// q-adic precision: coefficients are compared modulo `q^precision`.
    pub precision: i64,
}

impl Default for QBinomialSamples {
    fn default() -> Self {
        Self {
            base_exponents: alloc::vec![1, 2, 3],
            a_values: alloc::vec![(1, 0), (1, 1), (-1, 1), (1, 2), (-1, 0), (1, -1)],
            precision: 48,
        }
    }
}

fn first_mismatch<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Truncated `z`-series with Laurent coefficients reduced modulo `q^precision`.
fn qadic_mul(a: &[L], b: &[L], precision: i64) -> Vec<L> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|d| {
            let mut acc = L::zero();
            for e in 0..=d {
                if a[e].is_zero() || b[d - e].is_zero() {
                    continue;
                }
                acc += &(&a[e] * &b[d - e]);
            }
            acc.truncate_above(precision)
        })
        .collect()
}

/// `Π_{k<K} (1 - c z q^(wk))` for the prefix length `K` covering `q^precision`.
fn linear_factor_product(c: &L, w: i64, order: usize, precision: i64) -> Vec<L> {
    let factors = (precision + w - 1) / w;
    let mut acc: Vec<L> = (0..=order).map(|d| if d == 0 { L::one() } else { L::zero() }).collect();
    for k in 0..factors.max(0) {
        let ck = c.shift(w * k);
        for d in (1..=order).rev() {
            let term = (&ck * &acc[d - 1]).truncate_above(precision);
            acc[d] -= &term;
        }
    }
    acc
}

/// `Π_{k<K} 1/(1 - z q^(wk))`; each division is the recurrence
/// `a'_d = a_d + q^(wk) a'_(d-1)`.
fn geometric_factor_product(w: i64, order: usize, precision: i64) -> Vec<L> {
    let factors = (precision + w - 1) / w;
    let mut acc: Vec<L> = (0..=order).map(|d| if d == 0 { L::one() } else { L::zero() }).collect();
    for k in 0..factors.max(0) {
        for d in 1..=order {
            let term = acc[d - 1].shift(w * k).truncate_above(precision);
            acc[d] += &term;
        }
    }
    acc
}

/// Checks, coefficientwise up to `t^order`, the two forms of the q-binomial
/// theorem for each base `q^w` in the sample grid:
///
/// - `B(q^w, t) = (-t; q^w)_∞`,
/// - `Σ_d (a; q^w)_d / (q^w; q^w)_d z^d = (az; q^w)_∞ / (z; q^w)_∞`.
///
/// Each identity is checked twice: q-adically against a finite prefix of the
/// infinite products (modulo `q^precision`), and exactly in `Q(q)` through
/// the q-difference equation the product side satisfies.
pub fn qbinomial_theorem_check(order: usize, samples: &QBinomialSamples) -> Result<QBinomialReport> {
    let precision = samples.precision;
    let mut checks = Vec::new();
    for &w in &samples.base_exponents {
        if w == 0 {
            return Err(Error::InvalidArgument("base exponent must be positive".into()));
        }
        let wi = w as i64;
        let b = series_b(w, order);

        // B(q^w, t) against Π (1 + t q^{wk})
        let lhs: Vec<L> = b
            .coeffs()
            .iter()
            .map(|c| c.expand(precision))
            .collect::<Result<_>>()?;
        let rhs = linear_factor_product(&-L::one(), wi, order, precision);
        checks.push(QBinomialCheck {
            identity: QIdentity::ProductForm,
            method: CheckMethod::QAdic,
            base_exponent: w,
            a: None,
            first_failure: first_mismatch(&lhs, &rhs),
        });

        // P(t) = (1 + t) P(q^w t)
        let one_plus_t = TwistedSeries::from_fn(0, order, |d| match d {
            0 | 1 => Rf::one(),
            _ => Rf::zero(),
        });
        let shifted = one_plus_t.ordinary_mul(&b.substitute_scale(wi));
        checks.push(QBinomialCheck {
            identity: QIdentity::ProductForm,
            method: CheckMethod::DifferenceEquation,
            base_exponent: w,
            a: None,
            first_failure: first_mismatch(b.coeffs(), shifted.coeffs()),
        });

        let max_neg = samples.a_values.iter().map(|&(_, j)| (-j).max(0)).max().unwrap_or(0);
        let geometric = geometric_factor_product(wi, order, precision + max_neg * order as i64);

        for &(sign, j) in &samples.a_values {
            let a_spec = |n| QSymbolSpec::finite(sign, j, w, n);
            let a = a_spec(0).a();
            let series = TwistedSeries::from_fn(0, order, |d| {
                let num = Rf::from(&q_pochhammer(&a_spec(d)).expect("finite symbol"));
                let den = Rf::from_poly(q_factorial_product(d, w as usize));
                num.checked_div(&den).expect("non-zero denominator")
            });

            // negative a-exponents push terms below q^0; widen the working precision
            let neg = (-j).max(0) * order as i64;
            let working = precision + neg;
            let lhs: Vec<L> = series
                .coeffs()
                .iter()
                .map(|c| c.expand(precision))
                .collect::<Result<_>>()?;
            let num = linear_factor_product(&a, wi, order, working);
            let den: Vec<L> = geometric.iter().map(|c| c.truncate_above(working)).collect();
            let rhs: Vec<L> = qadic_mul(&num, &den, working)
                .into_iter()
                .map(|c| c.truncate_above(precision))
                .collect();
            checks.push(QBinomialCheck {
                identity: QIdentity::Quotient,
                method: CheckMethod::QAdic,
                base_exponent: w,
                a: Some((sign, j)),
                first_failure: first_mismatch(&lhs, &rhs),
            });

            // (1 - z) G(z) = (1 - a z) G(q^w z)
            let linear = |c: Rf| {
                TwistedSeries::from_fn(0, order, |d| match d {
                    0 => Rf::one(),
                    1 => -c.clone(),
                    _ => Rf::zero(),
                })
            };
            let left = linear(Rf::one()).ordinary_mul(&series);
            let right = linear(Rf::from(&a)).ordinary_mul(&series.substitute_scale(wi));
            checks.push(QBinomialCheck {
                identity: QIdentity::Quotient,
                method: CheckMethod::DifferenceEquation,
                base_exponent: w,
                a: Some((sign, j)),
                first_failure: first_mismatch(left.coeffs(), right.coeffs()),
            });
        }
    }
    Ok(QBinomialReport { order, precision, checks })
}

/// The `t^d` coefficient ratio `c_d / c_(d-1)` of `H^(m)`, i.e.
/// `q^(-(m-1)(d-1)) / (1 - q^d)`.
pub fn h_coefficient_ratio(m: u32, d: usize) -> Rf {
    let w = (m as i64 - 1).max(0);
    let num = Rf::q_pow(-w * (d as i64 - 1));
    let den = Rf::from_poly(Poly::one() - Poly::monomial(BigInt::one(), d));
    num.checked_div(&den).expect("1 - q^d is non-zero for d >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> L {
        L::from_coeffs(0, c.iter().copied())
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&QSymbolSpec::finite(1, 1, 1, 2)).unwrap(), lp(&[1, -1, -1, 1]));
        assert_eq!(q_pochhammer(&QSymbolSpec::finite(-1, 5, 2, 0)).unwrap(), L::one());
        let expected = lp(&[1, -1]) * lp(&[1, 0, 0, -1]) * lp(&[1, 0, 0, 0, 0, -1]);
        assert_eq!(q_pochhammer(&QSymbolSpec::finite(1, 1, 2, 3)).unwrap(), expected);
        let infinite = QSymbolSpec {
            length: PochhammerLength::Infinite,
            ..QSymbolSpec::finite(1, 1, 1, 0)
        };
        assert!(q_pochhammer(&infinite).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(4, 2, 1).unwrap(), lp(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0, 1).unwrap(), L::one());
        assert_eq!(q_binomial(3, 1, 2).unwrap(), lp(&[1, 0, 1, 0, 1]));
        assert!(q_binomial(2, 3, 1).is_err());
    }

    #[test]
    fn group_motives() {
        assert_eq!(gl_motive(1), lp(&[-1, 1]));
        assert_eq!(gl_motive(2), lp(&[0, 1, -1, -1, 1]));
        assert_eq!(gl_motive(0), L::one());
        assert_eq!(borel_motive(1), lp(&[-1, 1]));
        assert_eq!(borel_motive(2), lp(&[0, 1, -2, 1]));
        assert_eq!(borel_motive(0), L::one());
    }

    #[test]
    fn factorials() {
        assert_eq!(q_factorial(3), lp(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), L::one());
        assert_eq!(q_factorial(2), lp(&[1, 1]));
    }

    #[test]
    fn nilcone_anchors() {
        for m in 1..=4 {
            let n = nilcone_motive(m, 2).unwrap();
            assert_eq!(n[0], L::one());
            assert_eq!(n[1], L::one());
        }
        assert_eq!(nilcone_motive(1, 2).unwrap()[2], lp(&[0, 0, 1]));
        assert_eq!(nilcone_motive(2, 2).unwrap()[2], lp(&[0, -1, 1, 1]));
    }

    #[test]
    fn h_series_examples() {
        let h1 = series_h(1, 3);
        assert_eq!(h1.coeff(0), &Rf::one());
        let den = Poly::from_i64s(&[1, -1]) * Poly::from_i64s(&[1, 0, -1]);
        assert_eq!(h1.coeff(2), &Rf::new(Poly::one(), den.clone()).unwrap());
        let h2 = series_h(2, 3);
        assert_eq!(h2.coeff(2), &Rf::new(Poly::one(), den.shift(1)).unwrap());
        for m in 1..=3 {
            let h = series_h(m, 6);
            for d in 1..=6 {
                assert_eq!(h.coeff(d), &(h.coeff(d - 1) * &h_coefficient_ratio(m, d)));
            }
        }
    }

    #[test]
    fn b_series_examples() {
        let b = series_b(1, 3);
        assert_eq!(b.coeff(0), &Rf::one());
        assert_eq!(b.coeff(1), &Rf::new(Poly::one(), Poly::from_i64s(&[1, -1])).unwrap());
    }

    #[test]
    fn qbinomial_theorem_small() {
        let report = qbinomial_theorem_check(6, &QBinomialSamples::default()).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let trivial = qbinomial_theorem_check(0, &QBinomialSamples::default()).unwrap();
        assert!(trivial.all_passed());
    }

    #[test]
    fn qbinomial_theorem_detects_a_wrong_product() {
        // dropping the last factor of the prefix breaks the q-adic comparison
        let short = linear_factor_product(&-L::one(), 1, 6, 10);
        let full = linear_factor_product(&-L::one(), 1, 6, 12);
        let trunc: Vec<L> = full.iter().map(|c| c.truncate_above(12)).collect();
        let short12: Vec<L> = short.iter().map(|c| c.truncate_above(12)).collect();
        assert!(first_mismatch(&trunc, &short12).is_some());
    }
}
