use alloc::vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{forward_binop, LaurentPolynomial, Poly};
use crate::{Error, Result};

/// An element of `Q(q)` as a reduced fraction of integer polynomials.
///
/// Canonical form: the numerator and denominator share no polynomial factor,
/// the combined integer content is 1 and the denominator's leading coefficient
/// is positive. Zero is `0/1`. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.primitive_gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading_coefficient().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(Poly::constant(c.into()))
    }

    /// `q^exp` for any integer exponent.
    pub fn q_pow(exp: i64) -> Self {
        let mono = Poly::monomial(BigInt::one(), exp.unsigned_abs() as usize);
        if exp >= 0 {
            Self::from_poly(mono)
        } else {
            Self { num: Poly::one(), den: mono }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// The Laurent polynomial this function equals, if any.
    ///
    /// Succeeds exactly when the reduced denominator is a power of `q`;
    /// otherwise the error carries the pseudo-remainder of numerator by
    /// denominator.
    pub fn to_laurent(&self) -> Result<LaurentPolynomial> {
        let v = self.den.valuation().unwrap_or(0);
        let is_q_power = self.den.coeffs().len() == v + 1 && self.den.coeffs()[v].is_one();
        if is_q_power {
            Ok(LaurentPolynomial::from(&self.num).shift(-(v as i64)))
        } else {
            Err(Error::NonPolynomial {
                value: self.clone(),
                remainder: self.num.pseudo_rem(&self.den),
            })
        }
    }

    /// The q-adic expansion modulo `q^precision`: every term of exponent
    /// below `precision`.
    ///
    /// Requires the denominator to be `q^k · u` with `u(0) = ±1`.
    pub fn expand(&self, precision: i64) -> Result<LaurentPolynomial> {
        let v = self.den.valuation().unwrap_or(0);
        let unit = &self.den.coeffs()[v];
        if !(unit.is_one() || (-unit).is_one()) {
            return Err(Error::NotExpandable(self.clone()));
        }
        // num / (q^v u) = q^-v · num · u^-1; we need num · u^-1 mod q^(precision + v).
        let need = precision + v as i64;
        if need <= 0 {
            return Ok(LaurentPolynomial::zero());
        }
        let need = need as usize;
        let u = &self.den.coeffs()[v..];
        let mut inv = vec![BigInt::zero(); need];
        inv[0] = unit.clone();
        for n in 1..need {
            let mut acc = BigInt::zero();
            for k in 1..=n.min(u.len() - 1) {
                acc += &u[k] * &inv[n - k];
            }
            // unit is its own inverse
            inv[n] = -(acc * unit);
        }
        let mut out = vec![BigInt::zero(); need];
        for (i, a) in self.num.coeffs().iter().enumerate().take(need) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inv.iter().enumerate().take(need - i) {
                out[i + j] += a * b;
            }
        }
        Ok(LaurentPolynomial::from_coeffs(-(v as i64), out))
    }

    /// Substitutes `q ↦ q^w` for `w >= 1`.
    pub fn substitute_power(&self, w: usize) -> Self {
        let sub = |p: &Poly| {
            let mut coeffs = vec![BigInt::zero(); p.coeffs().len().saturating_sub(1) * w + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                coeffs[i * w] = c.clone();
            }
            Poly::from_coeffs(coeffs)
        };
        Self::normalized(sub(&self.num), sub(&self.den))
    }
}

impl From<&LaurentPolynomial> for RationalFunction {
    fn from(p: &LaurentPolynomial) -> Self {
        match p.min_degree() {
            None => Self::zero(),
            Some(lo) if lo >= 0 => Self::from_poly(p.to_poly().expect("non-negative exponents")),
            Some(lo) => {
                let num = p.shift(-lo).to_poly().expect("shifted to q^0");
                Self::normalized(num, Poly::monomial(BigInt::one(), (-lo) as usize))
            }
        }
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.primitive_gcd(&rhs.den);
        let a_cof = self.den.div_exact(&g).expect("gcd divides");
        let b_cof = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &self.num * &b_cof + &rhs.num * &a_cof;
        RationalFunction::normalized(num, &a_cof * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying to keep the gcd in `normalized` small
        let g1 = self.num.primitive_gcd(&rhs.den);
        let g2 = rhs.num.primitive_gcd(&self.den);
        let div = |p: &Poly, g: &Poly| p.div_exact(g).expect("gcd divides");
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RationalFunction::normalized(num, den)
    }
}

forward_binop!(Add, add, RationalFunction);
forward_binop!(Sub, sub, RationalFunction);
forward_binop!(Mul, mul, RationalFunction);

impl<'a> AddAssign<&'a RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &'a RationalFunction) {
        *self = &*self + rhs;
    }
}

impl<'a> SubAssign<&'a RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &'a RationalFunction) {
        *self = &*self - rhs;
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}
