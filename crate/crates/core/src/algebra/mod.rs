//! Coefficient rings: `Z[q, q^-1]`, `Z[q]` and `Q(q)`.

mod laurent;
mod poly;
mod rational;

pub use laurent::LaurentPolynomial;
pub use poly::Poly;
pub use rational::RationalFunction;

/// Implements the owned/borrowed combinations of a binary operator in terms of
/// the `&T op &T` implementation.
macro_rules! forward_binop {
    ($Op:ident, $method:ident, $T:ty) => {
        impl core::ops::$Op<$T> for $T {
            type Output = $T;
            fn $method(self, rhs: $T) -> $T {
                core::ops::$Op::$method(&self, &rhs)
            }
        }
        impl<'a> core::ops::$Op<&'a $T> for $T {
            type Output = $T;
            fn $method(self, rhs: &'a $T) -> $T {
                core::ops::$Op::$method(&self, rhs)
            }
        }
        impl<'a> core::ops::$Op<$T> for &'a $T {
            type Output = $T;
            fn $method(self, rhs: $T) -> $T {
                core::ops::$Op::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

/// Writes `terms` (exponent, coefficient) as `c0 + c1 q + c2 q^2 ...`.
pub(crate) fn fmt_terms<'a, I>(f: &mut core::fmt::Formatter<'_>, terms: I) -> core::fmt::Result
where
    I: IntoIterator<Item = (i64, &'a num_bigint::BigInt)>,
{
    use num_traits::{One, Signed};

    let mut first = true;
    for (exp, c) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        if exp == 0 {
            write!(f, "{abs}")?;
            continue;
        }
        if !abs.is_one() {
            write!(f, "{abs}")?;
        }
        if exp == 1 {
            f.write_str("q")?;
        } else {
            write!(f, "q^{exp}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
