use num_bigint::BigInt;
use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::weylcore::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Poly(#[from] PolyError),

    #[error(
        "Weyl group of order {order} exceeds the enumeration cap of {cap} elements \
         (set WEYL_ENUM_CAP to raise the cap)"
    )]
    CapExceeded { order: BigInt, cap: u64 },

    #[error("no closed-form class table for factor {0}; use enumeration")]
    UnsupportedFactor(String),

    #[error(
        "truncation window of order {window} is insufficient: nonzero coefficient at degree {degree} \
         exceeds the bound {bound}"
    )]
    TruncationInsufficient {
        window: usize,
        bound: usize,
        degree: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
