//! Dimension audit of the Steinberg-type self fibre product of the small
//! resolution, stratified by pairs of flags in relative position `σ ∈ S_d`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::LaurentPolynomial;
use crate::qtools::q_factorial;
use crate::series::tri;
use crate::{Error, Result};

pub const DEFAULT_MAX_PERMUTATIONS: u64 = 1_000_000;

/// A bijection of `{1, ..., d}`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds `σ` from `[σ(1), ..., σ(d)]`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = alloc::vec![false; d];
        for &i in &images {
            if i == 0 || i > d || seen[i - 1] {
                return Err(Error::InvalidPermutation(i));
            }
            seen[i - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            images: (1..=d).collect(),
        }
    }

    pub fn longest(d: usize) -> Self {
        Self {
            images: (1..=d).rev().collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| s == i + 1)
    }

    /// Advances to the next permutation in lexicographic order of images.
    /// Returns `false` (and leaves `self` unchanged) at the last one.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.images;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, s) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// `l(σ) = #{i < j : σ(i) > σ(j)}`.
pub fn inversions(sigma: &Permutation) -> usize {
    let v = sigma.images();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&b| b < v[i]).count())
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumDimension {
    /// Dimension of the stratum before dividing by `GL(V)`.
    pub total: i64,
    /// `total - d²`.
    pub quotient: i64,
}

/// `(m-1)(d(d-1)/2 - l(σ))`, plus `d²` for the total.
pub fn stratum_dimension(m: u32, sigma: &Permutation) -> StratumDimension {
    quotient_to_record(sigma.degree(), quotient_dim(m, sigma.degree(), inversions(sigma)))
}

fn quotient_dim(m: u32, d: usize, length: usize) -> i64 {
    (m as i64 - 1) * (tri(d) - length as i64)
}

fn quotient_to_record(d: usize, quotient: i64) -> StratumDimension {
    StratumDimension {
        total: quotient + (d * d) as i64,
        quotient,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditMode {
    /// Stratum sizes from the Mahonian numbers, the coefficients of `[d]_q!`.
    Grouped,
    /// Enumerates every permutation.
    Exhaustive,
}

/// All permutations sharing one inversion count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRow {
    pub length: usize,
    pub count: BigUint,
    pub quotient_dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallnessReport {
    pub m: u32,
    pub d: usize,
    pub strata: Vec<StratumRow>,
    /// Largest quotient stratum dimension.
    pub top_dim: i64,
    /// `(m-1)d(d-1)/2`, the dimension of the punctual Hilbert scheme.
    pub expected_dim: i64,
    /// Only `σ = id` reaches `top_dim`.
    pub unique_top: bool,
    /// Every stratum with `σ ≠ id` has quotient dimension below
    /// `expected_dim`, so the diagonal is the only top-dimensional component.
    pub small: bool,
    /// `m(m-1)/2`, a competing closed form for this dimension, kept so that its
    /// disagreement with the stratum formula is visible.
    pub printed_dim: i64,
    /// Set when `printed_dim` differs from `top_dim`.
    pub printed_dim_discrepancy: bool,
    pub note: Option<String>,
}

impl SmallnessReport {
    pub fn top_matches_expected(&self) -> bool {
        self.top_dim == self.expected_dim
    }

    pub fn total_dim(&self) -> i64 {
        self.top_dim + (self.d * self.d) as i64
    }
}

/// Number of permutations of each length, by enumeration.
fn exhaustive_counts(d: usize, cap: u64) -> Result<Vec<BigUint>> {
    let count: BigUint = (1..=d as u64).map(BigUint::from).product();
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "permutations",
            count,
            cap,
        });
    }
    let mut counts = alloc::vec![0u64; tri(d) as usize + 1];
    let mut sigma = Permutation::identity(d);
    loop {
        counts[inversions(&sigma)] += 1;
        if !sigma.next_lex() {
            break;
        }
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

fn mahonian_counts(d: usize) -> Vec<BigUint> {
    let f = q_factorial(d);
    (0..=tri(d))
        .map(|k| f.coeff(k).to_biguint().expect("Mahonian numbers are nonnegative"))
        .collect()
}

/// Audits the stratum dimensions for `(m, d)`. Exhaustive mode refuses when
/// `d!` exceeds `max_permutations`; grouped mode has no cap.
pub fn smallness_audit(
    m: u32,
    d: usize,
    mode: AuditMode,
    max_permutations: u64,
) -> Result<SmallnessReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let counts = match mode {
        AuditMode::Grouped => mahonian_counts(d),
        AuditMode::Exhaustive => exhaustive_counts(d, max_permutations)?,
    };
    let strata: Vec<StratumRow> = counts
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(length, count)| StratumRow {
            length,
            count,
            quotient_dim: quotient_dim(m, d, length),
        })
        .collect();
    let top_dim = strata.iter().map(|s| s.quotient_dim).max().unwrap_or(0);
    let at_top: BigUint = strata
        .iter()
        .filter(|s| s.quotient_dim == top_dim)
        .map(|s| s.count.clone())
        .sum();
    let unique_top = at_top.is_one();
    let expected_dim = quotient_dim(m, d, 0);
    let off_diagonal_below = strata
        .iter()
        .filter(|s| s.length > 0)
        .all(|s| s.quotient_dim < expected_dim);
    // For m = 1 a stable pair is a regular nilpotent with a cyclic vector,
    // whose flag is unique, so every stratum with σ ≠ id is empty.
    let (small, note) = if m == 1 && d >= 2 {
        (
            top_dim == expected_dim,
            Some(String::from(
                "m = 1: strata with σ ≠ id are empty, so the resolution is an isomorphism",
            )),
        )
    } else {
        (top_dim == expected_dim && off_diagonal_below, None)
    };
    let printed_dim = m as i64 * (m as i64 - 1) / 2;
    Ok(SmallnessReport {
        m,
        d,
        strata,
        top_dim,
        expected_dim,
        unique_top,
        small,
        printed_dim,
        printed_dim_discrepancy: printed_dim != top_dim,
        note,
    })
}

/// `Σ_σ q^l(σ)` by enumeration.
pub fn inversion_polynomial(d: usize, max_permutations: u64) -> Result<LaurentPolynomial> {
    let counts = exhaustive_counts(d, max_permutations)?;
    Ok(LaurentPolynomial::from_coeffs(
        0,
        counts.into_iter().map(BigInt::from),
    ))
}

/// Whether `Σ_σ q^l(σ)` over all of `S_d` equals `[d]_q!`.
pub fn inversion_gf_check(d: usize, max_permutations: u64) -> Result<bool> {
    Ok(inversion_polynomial(d, max_permutations)? == q_factorial(d))
}

/// Enumerates `S_d` in lexicographic order of images.
pub fn permutations(d: usize, max_permutations: u64) -> Result<Vec<Permutation>> {
    let count: BigUint = (1..=d as u64).map(BigUint::from).product();
    if count > BigUint::from(max_permutations) {
        return Err(Error::CapExceeded {
            what: "permutations",
            count,
            cap: max_permutations,
        });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut sigma = Permutation::identity(d);
    loop {
        out.push(sigma.clone());
        if !sigma.next_lex() {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&Permutation::identity(4)), 0);
        assert_eq!(inversions(&Permutation::longest(3)), 3);
        assert_eq!(inversions(&perm(&[2, 1, 3])), 1);
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert_eq!(perm(&[3, 1, 2]).to_string(), "(3,1,2)");
    }

    #[test]
    fn stratum_examples() {
        let id = Permutation::identity(3);
        let w0 = Permutation::longest(3);
        assert_eq!(
            stratum_dimension(2, &id),
            StratumDimension { total: 12, quotient: 3 }
        );
        assert_eq!(
            stratum_dimension(2, &w0),
            StratumDimension { total: 9, quotient: 0 }
        );
        assert_eq!(stratum_dimension(1, &perm(&[2, 3, 1])).quotient, 0);
    }

    #[test]
    fn audit_examples() {
        let r = smallness_audit(2, 3, AuditMode::Exhaustive, 100).unwrap();
        let dims: Vec<(i64, u64)> = r
            .strata
            .iter()
            .map(|s| (s.quotient_dim, s.count.to_u64().unwrap()))
            .collect();
        assert_eq!(dims, vec![(3, 1), (2, 2), (1, 2), (0, 1)]);
        assert!(r.unique_top && r.small && r.top_matches_expected());
        assert_eq!(r.total_dim(), 12);
        assert_eq!(r.printed_dim, 1);
        assert!(r.printed_dim_discrepancy);

        let r = smallness_audit(1, 3, AuditMode::Grouped, 0).unwrap();
        assert!(r.strata.iter().all(|s| s.quotient_dim == 0));
        assert!(!r.unique_top);
        assert!(r.small && r.note.is_some());

        let r = smallness_audit(3, 4, AuditMode::Exhaustive, 100).unwrap();
        assert_eq!(r.top_dim, 12);
        assert!(r.unique_top && r.small);
    }

    #[test]
    fn audit_cap() {
        assert!(matches!(
            smallness_audit(2, 5, AuditMode::Exhaustive, 100),
            Err(Error::CapExceeded { .. })
        ));
        assert!(smallness_audit(2, 5, AuditMode::Grouped, 100).is_ok());
    }

    #[test]
    fn inversion_gf() {
        assert_eq!(
            inversion_polynomial(3, 100).unwrap(),
            LaurentPolynomial::from_coeffs(0, [1, 2, 2, 1])
        );
        for d in 0..=6 {
            assert!(inversion_gf_check(d, 1000).unwrap());
        }
        assert_eq!(permutations(3, 10).unwrap().len(), 6);
    }
}
