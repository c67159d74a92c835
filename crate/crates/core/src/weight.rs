//! Extended nonnegative weights: exact 64-bit integers plus an `Infinite`
//! element that saturates under addition and orders above every finite value.
//!
//! All algorithms in this crate compare sums of weights, so the arithmetic is
//! kept exact: no floats, no sentinel values. Subtraction is deliberately not
//! provided; code that needs signed potentials (`ncsp` labels) works on plain
//! `i64` values extracted from finite weights.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

/// A nonnegative edge weight or `Infinite`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(i64),
    Infinite,
}

pub use Weight::{Finite, Infinite};

impl Weight {
    pub const ZERO: Weight = Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Infinite)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    /// The finite value, panicking on `Infinite`. Call sites use this only
    /// where finiteness is an established invariant.
    pub fn finite(self) -> i64 {
        match self {
            Finite(v) => v,
            Infinite => panic!("expected finite weight"),
        }
    }

    pub fn as_finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a.checked_add(b).expect("weight overflow")),
            _ => Infinite,
        }
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Weight {
        Finite(v)
    }
}
