use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{fmt_terms, forward_binop};

/// A dense polynomial in `Z[q]`, ascending coefficients without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · q^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest non-zero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Coefficientwise exact division by a non-zero integer.
    pub(crate) fn div_scalar(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Multiplication by `q^by`.
    pub fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact quotient in `Z[q]`, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let d_deg = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n_deg = self.degree()?;
        if n_deg < d_deg {
            return None;
        }
        let lc = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n_deg - d_deg + 1];
        for i in (0..=n_deg - d_deg).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        rem.iter().all(Zero::is_zero).then(|| Poly::from_coeffs(quot))
    }

    /// Pseudo-remainder: `r` with `c · self = Q · divisor + r`, `deg r < deg divisor`,
    /// for some power `c` of the divisor's leading coefficient.
    pub fn pseudo_rem(&self, divisor: &Poly) -> Poly {
        let Some(d_deg) = divisor.degree() else {
            return self.clone();
        };
        let lc = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        while rem.len() > d_deg && !rem.is_empty() {
            let top = rem.len() - 1;
            let lead = rem[top].clone();
            let shift = top - d_deg;
            for c in rem.iter_mut() {
                *c *= lc;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &lead * dc;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Poly::from_coeffs(rem)
    }

    /// Greatest common divisor up to content: primitive, positive leading
    /// coefficient. Tries the heuristic evaluation gcd first and falls back to
    /// the primitive remainder sequence.
    pub fn primitive_gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let a = self.primitive_part();
        let b = other.primitive_part();
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Poly::one();
        }
        if a == b {
            return a;
        }
        heuristic_gcd(&a, &b).unwrap_or_else(|| prs_gcd(a, b))
    }

    /// Value at `q = x` for an integer `x`.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

fn prs_gcd(mut a: Poly, mut b: Poly) -> Poly {
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return Poly::one();
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a
}

/// Evaluates both primitive inputs at a large integer `x`, takes the integer
/// gcd and reads its balanced base-`x` digits back as a candidate, accepted
/// only if it divides both inputs exactly.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    let norm = |p: &Poly| p.coeffs.iter().map(BigInt::abs).max().unwrap_or_default();
    let mut x: BigInt = 2 * norm(a).min(norm(b)) + 29;
    for _ in 0..6 {
        let h = a.eval(&x).gcd(&b.eval(&x));
        if !h.is_zero() {
            let mut digits = Vec::new();
            let mut rest = h;
            let half = &x / 2;
            while !rest.is_zero() {
                let mut g = rest.mod_floor(&x);
                if g > half {
                    g -= &x;
                }
                rest = (&rest - &g) / &x;
                digits.push(g);
            }
            let candidate = Poly::from_coeffs(digits).primitive_part();
            if candidate.degree().is_some()
                && a.div_exact(&candidate).is_some()
                && b.div_exact(&candidate).is_some()
            {
                return Some(candidate);
            }
        }
        x = x * 73794 / 27011;
    }
    None
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64, c)),
        )
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

forward_binop!(Add, add, Poly);
forward_binop!(Sub, sub, Poly);
forward_binop!(Mul, mul, Poly);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
