//! Exact algebraic combinatorics for the weak polynomial identities of the
//! superalgebra `M(1,1)` of 2×2 matrices over the Grassmann algebra.
//!
//! The crate is `no_std` (it needs `alloc`) and covers:
//!
//! * [`tableaux`]: partitions, tableaux, semistandard predicates in the
//!   english and french conventions, and exhaustive enumeration.
//! * [`krs`]: row insertion and deletion.
//! * [`carray`]: two-rowed arrays of commutators, their normal form and
//!   ordering, and enumeration of normal c-arrays.
//! * [`bijection`]: the correspondence between c-arrays and semistandard
//!   tableaux of double shape.
//! * [`straighten`]: rewriting products of commutators into the normal basis.
//! * [`oracle`]: the invariant-ring image of multilinear proper polynomials
//!   and exact rank computations.
//! * [`grassmann`]: exterior-algebra arithmetic, `M(1,1)` and randomized
//!   evaluation of candidate identities.
//! * [`series`]: dimension formula, Hilbert series and codimension series.
//!
//! All arithmetic is exact; coefficients are arbitrary-precision rationals.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bijection;
pub mod carray;
mod error;
pub mod grassmann;
pub mod krs;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod series;
pub mod straighten;
pub mod tableaux;

pub use error::{Error, Result};

use core::fmt;
use core::ops::{Mul, Neg};

/// Exact rational coefficients.
pub type Q = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn from_parity(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_q(self) -> Q {
        q(self.to_i64())
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_parity(3), Sign::Minus);
        assert_eq!(Sign::Minus.to_q(), q(-1));
    }
}
