use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{check_vars, PolyError, TruncatedSeries, UniPoly, Var};

/// Polynomial in `(s, t)`, stored as `s`-polynomials indexed by `t`-degree.
///
/// `t`-degrees are strictly increasing and no stored part is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    entries: Vec<(usize, UniPoly)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            entries: Vec::new(),
        }
    }

    /// Builds from `(t_degree, s_part)` pairs in any order; repeated degrees
    /// are summed and zero parts dropped.
    pub fn from_parts(
        parts: impl IntoIterator<Item = (usize, UniPoly)>,
    ) -> Result<Self, PolyError> {
        let mut acc: BTreeMap<usize, UniPoly> = BTreeMap::new();
        for (k, p) in parts {
            check_vars(Var::S, p.var())?;
            let merged = match acc.remove(&k) {
                Some(prev) => prev.checked_add(&p)?,
                None => p,
            };
            acc.insert(k, merged);
        }
        Ok(BiPoly {
            entries: acc.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        })
    }

    pub fn entries(&self) -> &[(usize, UniPoly)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The `s`-polynomial multiplying `t^k` (zero if absent).
    pub fn part(&self, k: usize) -> UniPoly {
        self.entries
            .iter()
            .find(|(d, _)| *d == k)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| UniPoly::zero(Var::S))
    }

    /// Sets `t = 1`.
    pub fn collapse(&self) -> UniPoly {
        self.entries
            .iter()
            .fold(UniPoly::zero(Var::S), |acc, (_, p)| &acc + p)
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        Self::from_parts(self.entries.iter().chain(&other.entries).cloned())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bigraded(f, self.entries.iter().map(|(k, p)| (*k, p.coeffs())))?;
        if self.is_zero() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Bigraded series: `t`-graded parts, each a truncated series in `s` of a
/// common order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    order: usize,
    entries: Vec<(usize, TruncatedSeries)>,
}

impl BiSeries {
    /// Parts must be in `s`; they are truncated to `order`, merged by
    /// `t`-degree and zero parts dropped.
    pub fn from_parts(
        order: usize,
        parts: impl IntoIterator<Item = (usize, TruncatedSeries)>,
    ) -> Result<Self, PolyError> {
        let mut acc: BTreeMap<usize, TruncatedSeries> = BTreeMap::new();
        for (k, p) in parts {
            check_vars(Var::S, p.var())?;
            let p = p.truncate(order);
            let merged = match acc.remove(&k) {
                Some(prev) => prev.checked_add(&p)?,
                None => p,
            };
            acc.insert(k, merged);
        }
        Ok(BiSeries {
            order,
            entries: acc.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[(usize, TruncatedSeries)] {
        &self.entries
    }

    pub fn part(&self, k: usize) -> TruncatedSeries {
        self.entries
            .iter()
            .find(|(d, _)| *d == k)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| TruncatedSeries::zero(Var::S, self.order))
    }

    /// Sets `t = 1`.
    pub fn collapse(&self) -> TruncatedSeries {
        self.entries
            .iter()
            .fold(TruncatedSeries::zero(Var::S, self.order), |acc, (_, p)| {
                acc.checked_add(p).expect("parts are in s")
            })
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let any = write_bigraded(f, self.entries.iter().map(|(k, p)| (*k, p.coeffs())))?;
        let tail = format!("O(s^{})", self.order + 1);
        if any {
            write!(f, " + {tail}")
        } else {
            f.write_str(&tail)
        }
    }
}

/// Writes `c s^i t^k` terms grouped by `t`-degree. Returns whether any term
/// was written.
fn write_bigraded<'a>(
    f: &mut fmt::Formatter<'_>,
    parts: impl Iterator<Item = (usize, &'a [num_rational::BigRational])>,
) -> Result<bool, fmt::Error> {
    use num_traits::{One, Signed};
    let mut first = true;
    for (k, coeffs) in parts {
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            match i {
                0 => {}
                1 => factors.push("s".to_string()),
                _ => factors.push(format!("s^{i}")),
            }
            match k {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{k}")),
            }
            if factors.is_empty() || !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            f.write_str(&factors.join(" "))?;
        }
    }
    Ok(!first)
}
