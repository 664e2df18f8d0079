//! Exact rational arithmetic on univariate polynomials, truncated power
//! series and `(s, t)`-bigraded polynomials.
//!
//! Every value carries its variable tag and operations refuse to mix
//! tags. Scalars are [`BigRational`], always kept in lowest terms.

mod bipoly;
mod series;
mod unipoly;

pub use bipoly::{BiPoly, BiSeries};
pub use num_rational::BigRational;
pub use series::TruncatedSeries;
pub use unipoly::UniPoly;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// Variable tag carried by every polynomial and series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    Q,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::Q => "q",
            Var::X => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable mismatch: cannot combine a polynomial in {left} with one in {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
}

pub(crate) fn check_vars(left: Var, right: Var) -> Result<(), PolyError> {
    if left == right {
        Ok(())
    } else {
        Err(PolyError::VariableMismatch { left, right })
    }
}

/// `n` as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
