//! Exact Poincaré and Hilbert–Poincaré series of representation spaces of
//! free abelian and nilpotent groups in compact connected Lie groups.
//!
//! All of the series are averages over the Weyl group `W` of class
//! functions of its reflection action on the maximal torus, e.g.
//!
//! ```text
//! P(Rep(Z^n, G)_1; s) = (1/|W|) Σ_w det(1 + s w)^n
//! ```
//!
//! The crate is layered:
//!
//! - [`exactpoly`]: exact rational polynomials, truncated series and
//!   bigraded polynomials;
//! - [`weylcore`]: group specs, Weyl group generators, and the
//!   characteristic-polynomial [`ClassTable`](weylcore::ClassTable);
//! - [`series`]: the series formulas evaluated on a class table;
//! - [`oracle`]: independent brute-force evaluation and cross-checks;
//! - [`cli`]: the `repseries` command-line front end.
//!
//! ```
//! use repseries::weylcore::{class_table, parse_group, DEFAULT_ENUM_CAP};
//! use repseries::series::rep_series;
//!
//! let g = parse_group("U(3)").unwrap();
//! let table = class_table(&g, DEFAULT_ENUM_CAP).unwrap();
//! assert_eq!(rep_series(&table, 1).to_string(), "1 + s");
//! ```

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod oracle;
pub mod series;
pub mod weylcore;

pub use error::{Error, Result};
