//! Exact arithmetic for root systems of complex simple Lie groups, Weyl group
//! enumeration, spin norms along Vogan pencils, and the Dirac-inequality sieve
//! that cuts each involution family down to finitely many candidate
//! representations.
//!
//! All quantities are exact rationals in the fundamental-weight basis; no
//! floating point appears anywhere. Norms are stored and compared as squared
//! values so that equalities like `|delta|_spin = |2 lambda|` are decidable.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod families;
pub mod mat;
pub mod root;
pub mod sieve;
pub mod spin;
pub mod weyl;

use alloc::string::String;
use core::fmt;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::Ratio<i64>;

/// Shorthand for constructing a rational.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Unknown or unsupported (family, rank) combination.
    BadType(String),
    /// Coordinate vector length does not match the rank.
    DimensionMismatch { expected: usize, got: usize },
    /// A weight failed a precondition (e.g. not dominant integral).
    BadWeight(String),
    /// Levi index set empty or out of range.
    BadLevi(String),
    /// Weyl group larger than the configured enumeration budget.
    GroupTooLarge { order_bound: usize },
    /// An operation that requires an empty (resp. nonempty) fixed set was
    /// called on the wrong kind of involution.
    FixedSetContract(String),
    /// Shipped table data does not match computed data.
    DataCorruption(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadType(s) => write!(f, "invalid root system type: {s}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::BadWeight(s) => write!(f, "bad weight: {s}"),
            Error::BadLevi(s) => write!(f, "bad Levi subset: {s}"),
            Error::GroupTooLarge { order_bound } => {
                write!(f, "Weyl group exceeds enumeration budget of {order_bound}")
            }
            Error::FixedSetContract(s) => write!(f, "fixed-set contract violation: {s}"),
            Error::DataCorruption(s) => write!(f, "data corruption: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
