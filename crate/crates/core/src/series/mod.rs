//! Poincaré and Hilbert–Poincaré series as class-function averages over a
//! [`ClassTable`].
//!
//! Every formula is a weighted sum over characteristic-polynomial buckets,
//! `(1/|W|) Σ size · f(det(1 + s w))`, so the cost depends on the number of
//! buckets rather than on `|W|`.

mod result;

pub use result::{FormulaId, SeriesResult, SeriesValue};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactpoly::{
    binomial, rat, BiPoly, BiSeries, BigRational, TruncatedSeries, UniPoly, Var,
};
use crate::weylcore::{ClassRecord, ClassTable, DegreeTable};

/// Truncation order used for the Comm / X(q) series when none is given.
pub const DEFAULT_COMM_ORDER: usize = 16;

fn inverse_order(table: &ClassTable) -> BigRational {
    BigRational::new(BigInt::one(), table.weyl_order().clone())
}

/// `(1/|W|) Σ size · f(record)`
fn class_average(table: &ClassTable, var: Var, f: impl Fn(&ClassRecord) -> UniPoly) -> UniPoly {
    let sum = table.records().iter().fold(UniPoly::zero(var), |acc, rec| {
        &acc + &f(rec).scale(&BigRational::from_integer(rec.size.clone()))
    });
    sum.scale(&inverse_order(table))
}

fn det_minus_one(rec: &ClassRecord) -> UniPoly {
    &rec.det_one_plus_sw - &UniPoly::one(Var::S)
}

/// `P(Rep(Z^n, G)_1; s) = (1/|W|) Σ_w det(1 + s w)^n`.
///
/// The same polynomial is the Poincaré series of `Rep(Γ, G)_1` for any
/// finitely generated nilpotent `Γ` with `rank H_1(Γ) = n`, in particular
/// `Rep(F_n/Γ^q, G)_1` for every `q ≥ 2`.
pub fn rep_series(table: &ClassTable, n: u32) -> UniPoly {
    class_average(table, Var::S, |rec| rec.det_one_plus_sw.pow(n))
}

/// [`rep_series`] under the name used for nilpotent groups: `h1_rank` is
/// the rank of the abelianization of `Γ`.
pub fn nilpotent_rep_series(table: &ClassTable, h1_rank: u32) -> UniPoly {
    rep_series(table, h1_rank)
}

/// `P(T̂^k / W; s) = (1/|W|) Σ_w (det(1 + s w) - 1)^k`, the series of the
/// `k`-fold smash power of the torus modulo `W`.
pub fn smash_series(table: &ClassTable, k: u32) -> UniPoly {
    class_average(table, Var::S, |rec| det_minus_one(rec).pow(k))
}

/// Bigraded series of `Rep(Z^n, G)_1`: the `t^k` part is
/// `C(n, k) · smash_series(k)`.
pub fn rep_hilbert_series(table: &ClassTable, n: u32) -> BiPoly {
    let parts = (0..=n).map(|k| {
        let c = BigRational::from_integer(binomial(u64::from(n), u64::from(k)));
        (k as usize, smash_series(table, k).scale(&c))
    });
    BiPoly::from_parts(parts).expect("parts are in s")
}

/// Bigraded series of `Comm(G)_1/G`, truncated at `s^s_order`:
/// `(1/|W|) Σ_w Σ_k (det(1 + s w) - 1)^k t^k`.
///
/// Parts with `k > s_order` vanish below `s^{s_order+1}` because each
/// `det(1 + s w) - 1` has no constant term.
pub fn comm_hilbert_series(table: &ClassTable, s_order: usize) -> Result<BiSeries> {
    if s_order == 0 {
        return Err(Error::InvalidArgument(
            "truncation order must be at least 1".into(),
        ));
    }
    let mut parts: Vec<TruncatedSeries> = vec![TruncatedSeries::zero(Var::S, s_order); s_order + 1];
    for rec in table.records() {
        let weight = BigRational::from_integer(rec.size.clone());
        let x = TruncatedSeries::from_poly(&det_minus_one(rec), s_order);
        let mut power = TruncatedSeries::one(Var::S, s_order);
        for part in parts.iter_mut() {
            *part = part.checked_add(&power.scale(&weight))?;
            power = power.checked_mul(&x)?;
        }
    }
    let inv = inverse_order(table);
    BiSeries::from_parts(
        s_order,
        parts
            .into_iter()
            .enumerate()
            .map(|(k, p)| (k, p.scale(&inv))),
    )
    .map_err(Into::into)
}

/// Poincaré series of `Comm(G)_1/G` to order `s_order` (`t = 1`).
pub fn comm_series(table: &ClassTable, s_order: usize) -> Result<TruncatedSeries> {
    Ok(comm_hilbert_series(table, s_order)?.collapse())
}

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "X(q, G) needs q >= 2, got {q}"
        )));
    }
    Ok(())
}

/// Bigraded series of `X(q, G)_1/G`; independent of `q ≥ 2` and equal to the
/// Comm series.
pub fn xq_hilbert_series(table: &ClassTable, q: u32, s_order: usize) -> Result<BiSeries> {
    check_q(q)?;
    comm_hilbert_series(table, s_order)
}

/// Poincaré series of `X(q, G)_1/G` for `q ≥ 2`.
pub fn xq_series(table: &ClassTable, q: u32, s_order: usize) -> Result<TruncatedSeries> {
    check_q(q)?;
    comm_series(table, s_order)
}

/// `P(Hom(Z^n, G)_1; q) = |W|^{-1} Π (1 - q^{2 d_i}) Σ_w det(1 + q w)^n / det(1 - q^2 w)`.
///
/// Evaluated with truncated series. `Hom(Z^n, G)_1 ⊆ G^n`, so the result has
/// degree at most `n · dim G`; the window extends past that bound and any
/// nonzero coefficient beyond it is reported as `TruncationInsufficient`.
pub fn hom_series(table: &ClassTable, degrees: &DegreeTable, n: u32) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("hom series needs n >= 1".into()));
    }
    if degrees.group() != table.group() {
        return Err(Error::InvalidArgument(format!(
            "degree table for {} does not match class table for {}",
            degrees.group(),
            table.group()
        )));
    }
    let bound = n as usize * degrees.dimension();
    let window = bound + 2 * degrees.max_degree() as usize;

    let mut acc = TruncatedSeries::zero(Var::Q, window);
    for rec in table.records() {
        let numerator = rec.det_one_plus_sw.clone().with_var(Var::Q).pow(n);
        let numerator = TruncatedSeries::from_poly(&numerator, window);
        let denominator = TruncatedSeries::from_poly(&rec.det_one_minus_q2w, window).inverse()?;
        let term = numerator.checked_mul(&denominator)?;
        acc = acc.checked_add(&term.scale(&BigRational::from_integer(rec.size.clone())))?;
    }
    let prefactor = degrees
        .degrees()
        .iter()
        .fold(UniPoly::one(Var::Q), |p, &d| {
            &p * &(&UniPoly::one(Var::Q) - &UniPoly::monomial(Var::Q, rat(1), 2 * d as usize))
        });
    let result = acc
        .checked_mul(&TruncatedSeries::from_poly(&prefactor, window))?
        .scale(&inverse_order(table))
        .to_poly();
    if let Some(degree) = result.degree().filter(|&d| d > bound) {
        return Err(Error::TruncationInsufficient {
            window,
            bound,
            degree,
        });
    }
    Ok(result)
}

/// `Π (1 + q^{2 d_i - 1})`, the Poincaré polynomial of `G` itself.
pub fn group_poincare_polynomial(degrees: &DegreeTable) -> UniPoly {
    degrees
        .degrees()
        .iter()
        .fold(UniPoly::one(Var::Q), |p, &d| {
            &p * &(&UniPoly::one(Var::Q) + &UniPoly::monomial(Var::Q, rat(1), 2 * d as usize - 1))
        })
}

/// Euler characteristic of `Rep(Z^n, G)_1`: the Rep series at `s = -1`.
pub fn euler_characteristic(table: &ClassTable, n: u32) -> BigRational {
    rep_series(table, n).eval(&rat(-1))
}

/// Whether every coefficient is a nonnegative integer.
pub fn is_betti_sequence(p: &UniPoly) -> bool {
    p.is_integral() && p.is_nonnegative()
}

/// `Σ_k C(n, k) · smash_series(k)`, the binomial recombination of the smash
/// parts; equals [`rep_series`].
pub fn recombined_rep_series(table: &ClassTable, n: u32) -> UniPoly {
    (0..=n).fold(UniPoly::zero(Var::S), |acc, k| {
        let c = BigRational::from_integer(binomial(u64::from(n), u64::from(k)));
        &acc + &smash_series(table, k).scale(&c)
    })
}
