use std::fmt;
use std::str::FromStr;

use crate::exactpoly::{BiPoly, BiSeries, BigRational, TruncatedSeries, UniPoly};
use crate::weylcore::GroupSpec;

/// Which formula produced a [`SeriesResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    Rep,
    RepHilbert,
    Smash,
    Comm,
    CommHilbert,
    Xq,
    Hom,
    Euler,
}

impl FormulaId {
    pub const ALL: [FormulaId; 8] = [
        FormulaId::Rep,
        FormulaId::RepHilbert,
        FormulaId::Smash,
        FormulaId::Comm,
        FormulaId::CommHilbert,
        FormulaId::Xq,
        FormulaId::Hom,
        FormulaId::Euler,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Rep => "rep",
            FormulaId::RepHilbert => "rep_hilbert",
            FormulaId::Smash => "smash",
            FormulaId::Comm => "comm",
            FormulaId::CommHilbert => "comm_hilbert",
            FormulaId::Xq => "xq",
            FormulaId::Hom => "hom",
            FormulaId::Euler => "euler",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown formula {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesValue {
    Poly(UniPoly),
    BiPoly(BiPoly),
    Series(TruncatedSeries),
    BiSeries(BiSeries),
    Scalar(BigRational),
}

/// A computed series together with what it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub formula: FormulaId,
    pub group: GroupSpec,
    /// `n`, `k`, `q`-independent truncation order, or `n` again, depending on
    /// the formula.
    pub parameter: u64,
    pub value: SeriesValue,
}

impl SeriesResult {
    /// Pairs a value with its formula, rejecting mismatched kinds.
    pub fn new(formula: FormulaId, group: GroupSpec, parameter: u64, value: SeriesValue) -> Self {
        let ok = matches!(
            (formula, &value),
            (
                FormulaId::Rep | FormulaId::Smash | FormulaId::Hom,
                SeriesValue::Poly(_)
            ) | (FormulaId::RepHilbert, SeriesValue::BiPoly(_))
                | (FormulaId::Comm | FormulaId::Xq, SeriesValue::Series(_))
                | (
                    FormulaId::CommHilbert | FormulaId::Xq,
                    SeriesValue::BiSeries(_)
                )
                | (FormulaId::Euler, SeriesValue::Scalar(_))
        );
        assert!(ok, "value kind does not match formula {formula}");
        SeriesResult {
            formula,
            group,
            parameter,
            value,
        }
    }
}

impl fmt::Display for SeriesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesValue::Poly(p) => p.fmt(f),
            SeriesValue::BiPoly(p) => p.fmt(f),
            SeriesValue::Series(p) => p.fmt(f),
            SeriesValue::BiSeries(p) => p.fmt(f),
            SeriesValue::Scalar(x) => x.fmt(f),
        }
    }
}
