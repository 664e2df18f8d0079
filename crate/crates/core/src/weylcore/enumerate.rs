//! Exhaustive enumeration of a Weyl group from its simple reflections.
//!
//! Elements are generated breadth-first by left multiplication with simple
//! reflections. For a Coxeter system `l(s·w) = l(w) ± 1`, so the next layer
//! can only collide with itself or the previous layer; only two layers of
//! matrices are kept in memory at any time, which makes E7 (2.9M elements)
//! cheap. Every element is bucketed by its characteristic polynomial.

use num_bigint::BigInt;
use rustc_hash::{FxHashMap, FxHashSet};

use super::element::WeylElement;
use super::generators::reflection_generators;
use super::group::GroupSpec;
use super::table::ClassTable;
use crate::error::{Error, Result};
use crate::exactpoly::{UniPoly, Var};

/// Default upper bound on the number of elements enumerated.
pub const DEFAULT_ENUM_CAP: u64 = 5_000_000;

/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_VAR: &str = "WEYL_ENUM_CAP";

/// The cap from `WEYL_ENUM_CAP`, or the default when unset.
pub fn enum_cap_from_env() -> Result<u64> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("{ENUM_CAP_VAR}={v:?} is not a positive integer"))
            }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

pub(crate) fn check_cap(order: &BigInt, cap: u64) -> Result<()> {
    if order > &BigInt::from(cap) {
        return Err(Error::CapExceeded {
            order: order.clone(),
            cap,
        });
    }
    Ok(())
}

/// A generator stored row-sparse: `rows[i]` lists `(k, g_ik)` for nonzero entries.
struct SparseGen {
    rows: Vec<Vec<(usize, i32)>>,
}

impl SparseGen {
    fn new(g: &WeylElement) -> Self {
        let rows = g
            .rows()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(k, &x)| (k, i32::try_from(x).expect("generator entry")))
                    .collect()
            })
            .collect();
        SparseGen { rows }
    }

    /// `g · w` for a packed row-major matrix.
    fn left_mul(&self, w: &[i8], r: usize, out: &mut Vec<i8>) -> Result<()> {
        out.clear();
        out.resize(r * r, 0);
        for (i, row) in self.rows.iter().enumerate() {
            if let [(k, 1)] = row.as_slice() {
                out[i * r..(i + 1) * r].copy_from_slice(&w[k * r..(k + 1) * r]);
                continue;
            }
            for j in 0..r {
                let v: i32 = row.iter().map(|&(k, g)| g * i32::from(w[k * r + j])).sum();
                out[i * r + j] = i8::try_from(v)
                    .map_err(|_| Error::Internal(format!("Weyl matrix entry {v} out of range")))?;
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier, ascending
/// coefficients. All divisions are exact for integer matrices.
pub(crate) fn char_poly_i64(a: &[i8], r: usize) -> Vec<i64> {
    let mut coeffs = vec![0i64; r + 1];
    coeffs[r] = 1;
    let mut m = vec![0i64; r * r];
    let mut am = vec![0i64; r * r];
    for k in 1..=r {
        // M_k = A M_{k-1} + c_{r-k+1} I
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0i64;
                for l in 0..r {
                    let x = i64::from(a[i * r + l]);
                    if x != 0 {
                        acc += x * m[l * r + j];
                    }
                }
                am[i * r + j] = acc;
            }
        }
        for i in 0..r {
            am[i * r + i] += coeffs[r - k + 1];
        }
        std::mem::swap(&mut m, &mut am);
        // c_{r-k} = -tr(A M_k) / k
        let mut trace = 0i64;
        for i in 0..r {
            for l in 0..r {
                trace += i64::from(a[i * r + l]) * m[l * r + i];
            }
        }
        debug_assert_eq!(trace % k as i64, 0);
        coeffs[r - k] = -trace / k as i64;
    }
    coeffs
}

/// Enumerates the group generated by `generators` (simple reflections of a
/// Coxeter system on a rank-`rank` lattice) and counts elements per
/// characteristic polynomial. Stops with `CapExceeded` past `cap` elements.
pub(crate) fn count_char_polys(
    generators: &[WeylElement],
    rank: usize,
    cap: u64,
) -> Result<(FxHashMap<Vec<i64>, u64>, u64)> {
    let r = rank;
    let pack = |w: &WeylElement| -> Vec<i8> {
        w.entries()
            .iter()
            .map(|&x| i8::try_from(x).expect("generator entry"))
            .collect()
    };
    let gens: Vec<SparseGen> = generators.iter().map(SparseGen::new).collect();

    let mut counts: FxHashMap<Vec<i64>, u64> = FxHashMap::default();
    let identity = pack(&WeylElement::identity(r));
    let mut previous: FxHashSet<Box<[i8]>> = FxHashSet::default();
    let mut current: FxHashSet<Box<[i8]>> = FxHashSet::default();
    current.insert(identity.into_boxed_slice());
    let mut total: u64 = 0;
    let mut scratch = Vec::with_capacity(r * r);

    while !current.is_empty() {
        total += current.len() as u64;
        if total > cap {
            return Err(Error::CapExceeded {
                order: BigInt::from(total),
                cap,
            });
        }
        for w in &current {
            *counts.entry(char_poly_i64(w, r)).or_insert(0) += 1;
        }
        let mut next: FxHashSet<Box<[i8]>> = FxHashSet::default();
        for w in &current {
            for g in &gens {
                g.left_mul(w, r, &mut scratch)?;
                if !previous.contains(scratch.as_slice()) && !next.contains(scratch.as_slice()) {
                    next.insert(scratch.clone().into_boxed_slice());
                }
            }
        }
        previous = std::mem::replace(&mut current, next);
    }
    Ok((counts, total))
}

/// Class table by exhaustive closure of the simple reflections of `g`.
///
/// Refuses up front when `|W(g)|` exceeds `cap`.
pub fn enumerate_class_table(g: &GroupSpec, cap: u64) -> Result<ClassTable> {
    let order = g.weyl_order();
    check_cap(&order, cap)?;
    if g.rank() == 0 {
        return Ok(ClassTable::trivial(g.clone()));
    }
    let generators = reflection_generators(g);
    let (counts, total) = count_char_polys(&generators, g.rank(), cap)?;
    if BigInt::from(total) != order {
        return Err(Error::Internal(format!(
            "closure of {} has {total} elements, expected {order}",
            g.canonical_name()
        )));
    }
    let buckets: Vec<(UniPoly, BigInt)> = counts
        .into_iter()
        .map(|(c, n)| {
            let coeffs: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
            (UniPoly::from_bigints(Var::X, coeffs), BigInt::from(n))
        })
        .collect();
    Ok(ClassTable::from_buckets(g.clone(), buckets))
}
