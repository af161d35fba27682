use alloc::string::String;

use num_bigint::BigUint;

use crate::algebra::{Poly, RationalFunction};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("evaluation of a polynomial with negative exponents at zero")]
    EvaluationAtZero,
    #[error("polynomial has negative exponents but they were not allowed")]
    NegativeExponent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function {value} is not a Laurent polynomial (pseudo-remainder {remainder})")]
    NonPolynomial {
        value: RationalFunction,
        remainder: Poly,
    },
    #[error("cannot expand {0} as a power series: denominator is not a unit at q = 0")]
    NotExpandable(RationalFunction),
    #[error("twist mismatch: {left} vs {right}")]
    TwistMismatch { left: u32, right: u32 },
    #[error("operation requires untwisted series, got twist {0}")]
    Twisted(u32),
    #[error("constant coefficient of the divisor is not a unit")]
    NonUnit,
    #[error("{what}: {count} items exceed the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: BigUint,
        cap: u64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("letter {letter} outside the alphabet 1..={arity}")]
    LetterOutOfRange { letter: u32, arity: u32 },
    #[error("word set is not closed under left subwords")]
    NotSubwordClosed,
    #[error("cannot ungraft the empty tree")]
    EmptyTree,
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("certification failed: {0}")]
    Certification(String),
}
