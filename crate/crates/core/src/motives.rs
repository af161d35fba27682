//! Motives of the full and punctual noncommutative Hilbert schemes and of the
//! small resolution, each computed by several independent routes.
//!
//! All classes are polynomials in `q`, the Lefschetz motive.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::qtools::{self, q_binomial, q_integer};
use crate::series::{full_shifts, punctual_shifts, solve_functional_equation, tri, TwistedSeries};
use crate::trees::{self, PavingKind};
use crate::{Error, Result};

type L = LaurentPolynomial;
type Rf = RationalFunction;

/// Hard limits on exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_trees: u64,
    pub max_permutations: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_trees: trees::DEFAULT_MAX_TREES,
            max_permutations: crate::steinberg::DEFAULT_MAX_PERMUTATIONS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotiveKind {
    Full,
    Punctual,
    Resolution,
    Ih,
    Nilcone,
}

impl MotiveKind {
    pub const ALL: [MotiveKind; 5] = [
        MotiveKind::Full,
        MotiveKind::Punctual,
        MotiveKind::Resolution,
        MotiveKind::Ih,
        MotiveKind::Nilcone,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MotiveKind::Full => "full",
            MotiveKind::Punctual => "punctual",
            MotiveKind::Resolution => "resolution",
            MotiveKind::Ih => "ih",
            MotiveKind::Nilcone => "nilcone",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Routes that compute this kind, in canonical order.
    pub fn routes(self) -> &'static [Route] {
        match self {
            MotiveKind::Full => &[Route::Functional, Route::Trees],
            MotiveKind::Punctual => &[
                Route::Functional,
                Route::Reciprocity,
                Route::Ratio,
                Route::Trees,
            ],
            MotiveKind::Resolution | MotiveKind::Ih => &[Route::Product, Route::Bseries],
            MotiveKind::Nilcone => &[Route::Stratification],
        }
    }
}

impl fmt::Display for MotiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// Degree-by-degree solution of the functional equation.
    Functional,
    /// Reciprocity `⁰h_d(q) = q^((m-1)d²+d) h_d(q^-1)` from the full motive.
    Reciprocity,
    /// `⁰F = H(q, t) / H(q, qt)` over `Q(q)`.
    Ratio,
    /// Cell census of the affine paving.
    Trees,
    /// Closed product `Π_i [(m-1)i + 1]_q`.
    Product,
    /// `B(q^(m-1), qt) / B(q^(m-1), t)` over `Q(q)`.
    Bseries,
    /// Twisted inversion of `Σ t^d / ((1-q)...(1-q^d))`.
    Stratification,
}

impl Route {
    pub const ALL: [Route; 7] = [
        Route::Functional,
        Route::Reciprocity,
        Route::Ratio,
        Route::Trees,
        Route::Product,
        Route::Bseries,
        Route::Stratification,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Functional => "functional",
            Route::Reciprocity => "reciprocity",
            Route::Ratio => "ratio",
            Route::Trees => "trees",
            Route::Product => "product",
            Route::Bseries => "bseries",
            Route::Stratification => "stratification",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.as_str() == s)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `dim ⁰Hilb = (m-1)d(d-1)/2`, `dim Hilb = (m-1)d² + d`.
pub fn dimension(m: u32, d: usize, kind: PavingKind) -> i64 {
    let w = m as i64 - 1;
    let d = d as i64;
    match kind {
        PavingKind::Punctual => w * d * (d - 1) / 2,
        PavingKind::Full => w * d * d + d,
    }
}

/// `h_d^(m)`, the motive of the full noncommutative Hilbert scheme.
pub fn hilb_motive(m: u32, d: usize) -> L {
    hilb_motives(m, d).pop().expect("d + 1 entries")
}

/// `h_0, ..., h_dmax` from one solve of the full functional equation.
pub fn hilb_motives(m: u32, dmax: usize) -> Vec<L> {
    let w = m as i64 - 1;
    solve_functional_equation(dmax, &full_shifts(m))
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(d, c)| c.shift(w * tri(d + 1) + d as i64))
        .collect()
}

/// `⁰h_0, ..., ⁰h_dmax` along one route.
pub fn punctual_motives(m: u32, dmax: usize, route: Route, caps: &Caps) -> Result<Vec<L>> {
    let w = m as i64 - 1;
    let denormalize = |series: TwistedSeries<L>| -> Vec<L> {
        series
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(d, c)| c.shift(w * tri(d)))
            .collect()
    };
    match route {
        Route::Functional => Ok(denormalize(solve_functional_equation(
            dmax,
            &punctual_shifts(m),
        ))),
        Route::Reciprocity => Ok(hilb_motives(m, dmax)
            .iter()
            .enumerate()
            .map(|(d, h)| h.reciprocal(dimension(m, d, PavingKind::Full)))
            .collect()),
        Route::Ratio => {
            let h = qtools::series_h(m, dmax);
            let ratio = h.series_div(&h.substitute_scale(1))?;
            ratio
                .coeffs()
                .iter()
                .enumerate()
                .map(|(d, c)| {
                    (c * &Rf::q_pow(w * tri(d))).to_laurent().map_err(|e| {
                        Error::Certification(format!("ratio route m={m} d={d}: {e}"))
                    })
                })
                .collect()
        }
        Route::Trees => Ok(denormalize(trees::paving_series(
            m,
            dmax,
            PavingKind::Punctual,
            caps.max_trees,
        )?)),
        other => Err(Error::InvalidArgument(format!(
            "route {other} does not compute punctual motives"
        ))),
    }
}

/// `⁰h_d^(m)`, the motive of the punctual Hilbert scheme.
pub fn punctual_motive(m: u32, d: usize, route: Route, caps: &Caps) -> Result<L> {
    Ok(punctual_motives(m, d, route, caps)?.pop().expect("d + 1 entries"))
}

/// `[Z^(m)(C^0)], ..., [Z^(m)(C^dmax)]` along one route.
pub fn resolution_motives(m: u32, dmax: usize, route: Route) -> Result<Vec<L>> {
    match route {
        Route::Product => Ok((0..=dmax)
            .map(|d| {
                (0..d)
                    .map(|i| q_integer((m as usize - 1) * i + 1))
                    .product()
            })
            .collect()),
        Route::Bseries if m >= 2 => {
            let w = m - 1;
            let b = qtools::series_b(w, dmax);
            let ratio = b.substitute_scale(1).series_div(&b)?;
            ratio
                .coeffs()
                .iter()
                .enumerate()
                .map(|(d, x)| {
                    // x_d = [Z_d] (q-1)^d / (q^w; q^w)_d
                    let pochhammer = qtools::q_pochhammer(&qtools::QSymbolSpec::finite(
                        1, w as i64, w, d,
                    ))?;
                    let q_minus_one = (L::q() - L::one()).pow(d as u32);
                    let z = x * &Rf::from(&pochhammer);
                    let z = z.checked_div(&Rf::from(&q_minus_one))?;
                    z.to_laurent().map_err(|e| {
                        Error::Certification(format!("bseries route m={m} d={d}: {e}"))
                    })
                })
                .collect()
        }
        Route::Bseries => Ok(resolution_by_stratification(m, dmax)),
        other => Err(Error::InvalidArgument(format!(
            "route {other} does not compute resolution motives"
        ))),
    }
}

/// For `m = 1` the base `q^(m-1)` of the B-series collapses to 1; this solves
/// the stratification identity it normalizes,
/// `q^d [n_d^m] = Σ_e q^(e(d-e)) [d e]_(q^(m-1)) [P_e] [n_(d-e)^m]`,
/// for the stable stratum `[P_d] = [Z_d] [B_d]`, with `[n_d^m] = q^(m d(d-1)/2)`.
fn resolution_by_stratification(m: u32, dmax: usize) -> Vec<L> {
    let w = m - 1;
    let nil = |d: usize| L::q_pow(m as i64 * tri(d));
    let binom = |d: usize, e: usize| -> L {
        if w == 0 {
            L::constant(binomial_small(d, e))
        } else {
            q_binomial(d, e, w).expect("e <= d")
        }
    };
    let mut stable: Vec<L> = Vec::with_capacity(dmax + 1);
    let mut out = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        let mut rest = nil(d).shift(d as i64);
        for (e, p) in stable.iter().enumerate() {
            let term = &(&binom(d, e) * p) * &nil(d - e);
            rest -= &term.shift((e * (d - e)) as i64);
        }
        // the e = d term has binomial 1 and [n_0] = 1
        let z = Rf::from(&rest)
            .checked_div(&Rf::from(&qtools::borel_motive(d)))
            .and_then(|z| z.to_laurent())
            .expect("stable stratum is divisible by the Borel motive");
        stable.push(rest);
        out.push(z);
    }
    out
}

fn binomial_small(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn resolution_motive(m: u32, d: usize, route: Route) -> Result<L> {
    Ok(resolution_motives(m, d, route)?.pop().expect("d + 1 entries"))
}

/// Poincaré polynomial of the intersection cohomology of `⁰Hilb^(m)(C^d)`
/// (in `q = t^2`), which is the motive of its small resolution.
pub fn ih_poincare(m: u32, d: usize) -> L {
    resolution_motive(m, d, Route::Product).expect("product route always applies")
}

/// Value at `q = 1` of the motive of the given kind.
pub fn euler_characteristic(m: u32, d: usize, kind: MotiveKind, caps: &Caps) -> Result<BigInt> {
    let p = match kind {
        MotiveKind::Full => hilb_motive(m, d),
        MotiveKind::Punctual => punctual_motive(m, d, Route::Functional, caps)?,
        MotiveKind::Resolution => resolution_motive(m, d, Route::Product)?,
        MotiveKind::Ih => ih_poincare(m, d),
        MotiveKind::Nilcone => qtools::nilcone_motive(m, d)?.pop().expect("d + 1 entries"),
    };
    Ok(p.eval_at_one())
}

/// `Π_{i<d} ((m-1)i + 1)`.
pub fn resolution_euler_formula(m: u32, d: usize) -> BigUint {
    (0..d as u64)
        .map(|i| BigUint::from((m as u64 - 1) * i + 1))
        .product()
}

/// Dimensions for the embedding of `⁰Hilb^(m)(C^d)` into the Grassmannian of
/// `d`-dimensional quotients of `Â/(Â_+)^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannianParams {
    /// `dim Â/(Â_+)^d = Σ_{s<d} m^s`.
    pub ambient_space_dim: u128,
    /// `d · (ambient - d)`.
    pub grassmannian_dim: u128,
}

pub fn grassmannian_embedding_params(m: u32, d: usize) -> GrassmannianParams {
    let ambient: u128 = (0..d as u32).map(|s| (m as u128).pow(s)).sum();
    GrassmannianParams {
        ambient_space_dim: ambient,
        grassmannian_dim: d as u128 * (ambient - d as u128),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveEntry {
    pub m: u32,
    pub d: usize,
    pub kind: MotiveKind,
    pub route: Route,
    pub polynomial: L,
    pub dimension: i64,
}

impl MotiveEntry {
    fn sort_key(&self) -> (u32, usize, MotiveKind, Route) {
        (self.m, self.d, self.kind, self.route)
    }
}

/// Results tagged by `(m, d, kind, route)`, kept sorted in that order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MotiveTable {
    entries: Vec<MotiveEntry>,
}

/// Two routes that disagree on the same `(m, d, kind)` cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteConflict {
    pub m: u32,
    pub d: usize,
    pub kind: MotiveKind,
    pub first: (Route, L),
    pub second: (Route, L),
}

impl fmt::Display for RouteConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} d={} {}: {} gives {} but {} gives {}",
            self.m, self.d, self.kind, self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

impl MotiveTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = MotiveEntry>) -> Self {
        let mut table = Self::new();
        for e in entries {
            table.push(e);
        }
        table
    }

    pub fn push(&mut self, entry: MotiveEntry) {
        let idx = self
            .entries
            .partition_point(|e| e.sort_key() <= entry.sort_key());
        self.entries.insert(idx, entry);
    }

    pub fn entries(&self) -> &[MotiveEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, m: u32, d: usize, kind: MotiveKind, route: Route) -> Option<&MotiveEntry> {
        self.entries
            .iter()
            .find(|e| e.sort_key() == (m, d, kind, route))
    }

    /// Every pair of routes that disagree on a cell, compared against the
    /// first route present for that cell.
    pub fn conflicts(&self) -> Vec<RouteConflict> {
        let mut out = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            let first = self.entries[..i]
                .iter()
                .find(|p| (p.m, p.d, p.kind) == (e.m, e.d, e.kind));
            if let Some(p) = first {
                if p.polynomial != e.polynomial {
                    out.push(RouteConflict {
                        m: e.m,
                        d: e.d,
                        kind: e.kind,
                        first: (p.route, p.polynomial.clone()),
                        second: (e.route, e.polynomial.clone()),
                    });
                }
            }
        }
        out
    }

    /// Rows whose polynomial degree differs from the stored dimension, for the
    /// kinds where the two must agree.
    pub fn degree_mismatches(&self) -> Vec<&MotiveEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind != MotiveKind::Nilcone)
            .filter(|e| e.polynomial.degree() != Some(e.dimension))
            .collect()
    }
}

/// Kinds and routes to compute for [`build_table`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    pub m: u32,
    pub dmax: usize,
    pub kinds: Vec<MotiveKind>,
    /// `None` selects every route of each kind.
    pub routes: Option<Vec<Route>>,
}

/// Computes every requested `(kind, route)` column for `d = 0..=dmax`.
pub fn build_table(req: &TableRequest, caps: &Caps) -> Result<MotiveTable> {
    let (m, dmax) = (req.m, req.dmax);
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let mut table = MotiveTable::new();
    for &kind in &req.kinds {
        for &route in kind.routes() {
            if req.routes.as_ref().is_some_and(|r| !r.contains(&route)) {
                continue;
            }
            let column: Vec<L> = match kind {
                MotiveKind::Full => match route {
                    Route::Functional => hilb_motives(m, dmax),
                    _ => trees::paving_series(m, dmax, PavingKind::Full, caps.max_trees)?
                        .into_coeffs(),
                },
                MotiveKind::Punctual => punctual_motives(m, dmax, route, caps)?,
                MotiveKind::Resolution | MotiveKind::Ih => resolution_motives(m, dmax, route)?,
                MotiveKind::Nilcone => qtools::nilcone_motive(m, dmax)?,
            };
            for (d, polynomial) in column.into_iter().enumerate() {
                let dimension = match kind {
                    MotiveKind::Full => dimension(m, d, PavingKind::Full),
                    MotiveKind::Nilcone => polynomial.degree().unwrap_or(0),
                    _ => dimension(m, d, PavingKind::Punctual),
                };
                table.push(MotiveEntry {
                    m,
                    d,
                    kind,
                    route,
                    polynomial,
                    dimension,
                });
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> L {
        L::from_coeffs(0, c.iter().copied())
    }

    const ALL_PUNCTUAL: [Route; 4] = [Route::Functional, Route::Reciprocity, Route::Ratio, Route::Trees];

    #[test]
    fn hilb_examples() {
        for d in 0..6 {
            assert_eq!(hilb_motive(1, d), L::q_pow(d as i64));
        }
        assert_eq!(hilb_motive(2, 2), L::from_coeffs(5, [1, 1]));
        assert_eq!(hilb_motive(2, 3), L::from_coeffs(9, [1, 2, 1, 1]));
    }

    #[test]
    fn punctual_examples() {
        let caps = Caps::default();
        for route in ALL_PUNCTUAL {
            for m in 1..=4 {
                assert_eq!(punctual_motive(m, 0, route, &caps).unwrap(), L::one());
                assert_eq!(punctual_motive(m, 1, route, &caps).unwrap(), L::one());
            }
            assert_eq!(punctual_motive(3, 2, route, &caps).unwrap(), lp(&[1, 1, 1]));
            assert_eq!(punctual_motive(2, 3, route, &caps).unwrap(), lp(&[1, 1, 2, 1]));
            assert_eq!(
                punctual_motive(2, 4, route, &caps).unwrap(),
                lp(&[1, 1, 2, 3, 3, 3, 1])
            );
        }
        assert!(punctual_motive(2, 2, Route::Product, &caps).is_err());
        let tight = Caps {
            max_trees: 3,
            ..Caps::default()
        };
        assert!(matches!(
            punctual_motive(2, 3, Route::Trees, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn resolution_examples() {
        for route in [Route::Product, Route::Bseries] {
            assert_eq!(resolution_motive(2, 3, route).unwrap(), lp(&[1, 2, 2, 1]));
            for d in 0..=6 {
                assert_eq!(resolution_motive(1, d, route).unwrap(), L::one());
            }
            let z = resolution_motive(3, 3, route).unwrap();
            assert_eq!(z, lp(&[1, 1, 1]) * lp(&[1, 1, 1, 1, 1]));
            assert_eq!(z.eval_at_one(), BigInt::from(15));
        }
    }

    #[test]
    fn ih_examples() {
        assert_eq!(ih_poincare(2, 3), lp(&[1, 2, 2, 1]));
        assert_eq!(ih_poincare(3, 1), L::one());
        assert_eq!(ih_poincare(2, 2), lp(&[1, 1]));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(2, 3, PavingKind::Punctual), 3);
        assert_eq!(dimension(1, 7, PavingKind::Punctual), 0);
        assert_eq!(dimension(2, 2, PavingKind::Full), 6);
    }

    #[test]
    fn euler_examples() {
        let caps = Caps::default();
        assert_eq!(
            euler_characteristic(2, 4, MotiveKind::Punctual, &caps).unwrap(),
            BigInt::from(14)
        );
        assert_eq!(
            euler_characteristic(3, 3, MotiveKind::Resolution, &caps).unwrap(),
            BigInt::from(15)
        );
        for kind in MotiveKind::ALL {
            assert_eq!(euler_characteristic(3, 0, kind, &caps).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(
            grassmannian_embedding_params(2, 3),
            GrassmannianParams {
                ambient_space_dim: 7,
                grassmannian_dim: 12
            }
        );
        assert_eq!(grassmannian_embedding_params(1, 5).grassmannian_dim, 0);
        assert_eq!(grassmannian_embedding_params(1, 5).ambient_space_dim, 5);
        assert_eq!(
            grassmannian_embedding_params(2, 2),
            GrassmannianParams {
                ambient_space_dim: 3,
                grassmannian_dim: 2
            }
        );
    }

    #[test]
    fn table_is_sorted_and_consistent() {
        let req = TableRequest {
            m: 2,
            dmax: 4,
            kinds: MotiveKind::ALL.to_vec(),
            routes: None,
        };
        let table = build_table(&req, &Caps::default()).unwrap();
        assert!(table.conflicts().is_empty());
        assert!(table.degree_mismatches().is_empty());
        let keys: Vec<_> = table.entries().iter().map(MotiveEntry::sort_key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(
            table.get(2, 3, MotiveKind::Punctual, Route::Ratio).unwrap().polynomial,
            lp(&[1, 1, 2, 1])
        );
    }

    #[test]
    fn conflicts_are_reported() {
        let entry = |route, p| MotiveEntry {
            m: 2,
            d: 2,
            kind: MotiveKind::Punctual,
            route,
            polynomial: p,
            dimension: 1,
        };
        let table = MotiveTable::from_entries([
            entry(Route::Ratio, lp(&[1, 2])),
            entry(Route::Functional, lp(&[1, 1])),
        ]);
        let c = table.conflicts();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].first.0, Route::Functional);
        assert_eq!(c[0].second.0, Route::Ratio);
        assert_eq!(table.degree_mismatches().len(), 0);
    }
}
