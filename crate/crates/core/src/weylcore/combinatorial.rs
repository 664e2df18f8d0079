//! Class tables of the classical Weyl groups straight from cycle types.
//!
//! `S_k` classes are indexed by partitions of `k`; the hyperoctahedral group
//! `B_m` by pairs of partitions (positive cycles, negative cycles). A positive
//! `a`-cycle contributes `x^a - 1` to the characteristic polynomial and a
//! negative `b`-cycle `x^b + 1`. `D_m` keeps exactly the signed cycle types
//! with an even number of negative cycles, with unchanged sizes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::group::{GroupSpec, WeylType};
use super::table::ClassTable;
use crate::error::{Error, Result};
use crate::exactpoly::{UniPoly, Var};

/// All partitions of `n`, parts in non-increasing order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn multiplicities(parts: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// Centralizer order of a permutation with the given cycle type:
/// `Π a^{m_a} m_a!`.
fn centralizer(parts: &[u32]) -> BigInt {
    multiplicities(parts)
        .into_iter()
        .map(|(a, m)| BigInt::from(a).pow(m) * factorial(m))
        .product()
}

/// Centralizer order of a signed permutation with positive cycles `pos`
/// and negative cycles `neg`: `Π (2a)^{m_a} m_a!` over both.
fn signed_centralizer(pos: &[u32], neg: &[u32]) -> BigInt {
    let one_side = |parts: &[u32]| -> BigInt {
        multiplicities(parts)
            .into_iter()
            .map(|(a, m)| BigInt::from(2 * a).pow(m) * factorial(m))
            .product()
    };
    one_side(pos) * one_side(neg)
}

/// `x^a + sign`
fn binomial_poly(a: u32, sign: i64) -> UniPoly {
    let mut c = vec![0i64; a as usize + 1];
    c[0] = sign;
    c[a as usize] = 1;
    UniPoly::from_ints(Var::X, &c)
}

fn product_of(polys: impl IntoIterator<Item = UniPoly>) -> UniPoly {
    polys
        .into_iter()
        .fold(UniPoly::one(Var::X), |acc, p| &acc * &p)
}

fn symmetric_buckets(k: u32, reduced: bool) -> Vec<(UniPoly, BigInt)> {
    let order = factorial(k);
    partitions(k)
        .into_iter()
        .map(|lambda| {
            let size = &order / centralizer(&lambda);
            let char_poly = if reduced {
                // (x^{λ_1} - 1)/(x - 1) = 1 + x + ... + x^{λ_1 - 1}
                let head = UniPoly::from_ints(Var::X, &vec![1; lambda[0] as usize]);
                &head * &product_of(lambda[1..].iter().map(|&a| binomial_poly(a, -1)))
            } else {
                product_of(lambda.iter().map(|&a| binomial_poly(a, -1)))
            };
            (char_poly, size)
        })
        .collect()
}

fn hyperoctahedral_buckets(m: u32, even_only: bool) -> Vec<(UniPoly, BigInt)> {
    let order = (BigInt::one() << m as usize) * factorial(m);
    let mut out = Vec::new();
    for pos_total in 0..=m {
        for pos in partitions(pos_total) {
            for neg in partitions(m - pos_total) {
                if even_only && neg.len() % 2 == 1 {
                    continue;
                }
                let size = &order / signed_centralizer(&pos, &neg);
                let char_poly = product_of(
                    pos.iter()
                        .map(|&a| binomial_poly(a, -1))
                        .chain(neg.iter().map(|&b| binomial_poly(b, 1))),
                );
                out.push((char_poly, size));
            }
        }
    }
    out
}

fn factor_buckets(ty: WeylType) -> Result<Vec<(UniPoly, BigInt)>> {
    Ok(match ty {
        WeylType::Symmetric(k) => symmetric_buckets(k, false),
        WeylType::A(m) => symmetric_buckets(m + 1, true),
        WeylType::B(m) => hyperoctahedral_buckets(m, false),
        WeylType::D(m) => hyperoctahedral_buckets(m, true),
        WeylType::Torus(k) => vec![(binomial_poly(1, -1).pow(k), BigInt::one())],
        other => return Err(Error::UnsupportedFactor(format!("{other:?}"))),
    })
}

/// Class table of a product of classical factors without enumeration.
pub fn combinatorial_class_table(g: &GroupSpec) -> Result<ClassTable> {
    let mut table = ClassTable::trivial(g.clone());
    for (factor, ty) in g.factors().iter().zip(g.weyl_types()) {
        let buckets =
            factor_buckets(ty).map_err(|_| Error::UnsupportedFactor(factor.to_string()))?;
        let single = ClassTable::from_buckets(GroupSpec::from_factors(vec![*factor]), buckets);
        table = ClassTable::product(g.clone(), &table, &single);
    }
    Ok(table)
}
