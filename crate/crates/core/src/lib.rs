//! Exact arithmetic for the motives of punctual noncommutative Hilbert schemes.
//!
//! Every quantity is computed over `Z[q, q^-1]` or `Q(q)` with arbitrary-precision
//! integer coefficients, where `q` stands for the Lefschetz motive. The crate is
//! `no_std` and only needs `alloc`.
//!
//! Module map:
//!
//! - [`algebra`]: Laurent polynomials, dense integer polynomials, rational functions.
//! - [`series`]: truncated (twisted) power series in `t` and the functional-equation solver.
//! - [`qtools`]: q-Pochhammer symbols, Gaussian binomials, group motives, the `H` and `B`
//!   series, nilpotent-cone motives.
//! - [`trees`]: m-ary word trees, the orders on them, paving cell dimensions and census series.
//! - [`motives`]: Hilbert scheme, punctual and resolution motives by several independent routes.
//! - [`steinberg`]: permutation strata of the Steinberg-type variety and the smallness audit.

#![no_std]

extern crate alloc;

pub mod algebra;
mod error;
pub mod motives;
pub mod qtools;
pub mod series;
pub mod steinberg;
pub mod trees;

pub use algebra::{LaurentPolynomial, Poly, RationalFunction};
pub use error::{Error, Result};
pub use motives::{Caps, MotiveEntry, MotiveKind, MotiveTable, Route};
pub use series::{Coefficient, TwistedSeries};
pub use trees::{Tree, Word};
