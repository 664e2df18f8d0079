//! Reference implementations used to validate the fast paths.
//!
//! [`brute`] depends only on the polynomial substrate and on the generator
//! matrices; it never sees a class table. [`cross_check`] runs both sides
//! and reports every comparison.

pub mod brute;
mod check;

pub use brute::{brute_rep_series, brute_rep_series_up_to};
pub use check::{cross_check, CheckEntry, CheckReport};
