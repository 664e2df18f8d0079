use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::GroupSpec;
use crate::exactpoly::{BigRational, UniPoly, Var};

/// All Weyl elements sharing one characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassRecord {
    /// `det(xI - w)`, monic of degree `r`.
    pub char_poly: UniPoly,
    pub size: BigInt,
    /// `det(1 + s w)`
    pub det_one_plus_sw: UniPoly,
    /// `det(1 - q^2 w)`
    pub det_one_minus_q2w: UniPoly,
}

impl ClassRecord {
    /// Derives both determinants from the characteristic polynomial: with
    /// `det(xI - w) = Σ c_j x^j`, `det(1 + s w) = Σ (-1)^i c_{r-i} s^i` and
    /// `det(1 - u w) = Σ c_{r-i} u^i`, then `u = q^2`.
    pub fn from_char_poly(char_poly: UniPoly, size: BigInt) -> Self {
        assert_eq!(char_poly.var(), Var::X);
        let rank = char_poly
            .degree()
            .expect("characteristic polynomial is monic");
        let reversed = char_poly.reversed(rank);
        let det_one_plus_sw = reversed.negate_var().with_var(Var::S);
        let det_one_minus_q2w = reversed.inflate(2).with_var(Var::Q);
        ClassRecord {
            char_poly,
            size,
            det_one_plus_sw,
            det_one_minus_q2w,
        }
    }
}

/// Distribution of characteristic polynomials over the Weyl group.
///
/// Records are sorted by the ascending-degree coefficient sequence of their
/// characteristic polynomial, so the table is canonical for a given group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    group: GroupSpec,
    records: Vec<ClassRecord>,
    weyl_order: BigInt,
}

impl ClassTable {
    /// Merges buckets with equal characteristic polynomials and sorts them.
    pub fn from_buckets(
        group: GroupSpec,
        buckets: impl IntoIterator<Item = (UniPoly, BigInt)>,
    ) -> Self {
        let mut merged: BTreeMap<Vec<BigRational>, BigInt> = BTreeMap::new();
        for (poly, size) in buckets {
            *merged
                .entry(poly.into_coeffs())
                .or_insert_with(BigInt::zero) += size;
        }
        let records: Vec<ClassRecord> = merged
            .into_iter()
            .map(|(c, size)| ClassRecord::from_char_poly(UniPoly::new(Var::X, c), size))
            .collect();
        let weyl_order = records.iter().map(|r| &r.size).sum();
        ClassTable {
            group,
            records,
            weyl_order,
        }
    }

    /// Table of the trivial group acting on a rank-0 lattice.
    pub fn trivial(group: GroupSpec) -> Self {
        Self::from_buckets(group, [(UniPoly::one(Var::X), BigInt::one())])
    }

    /// Table of `W_a × W_b` acting block-diagonally.
    pub fn product(group: GroupSpec, a: &ClassTable, b: &ClassTable) -> Self {
        let buckets = a.records.iter().flat_map(|ra| {
            b.records
                .iter()
                .map(move |rb| (&ra.char_poly * &rb.char_poly, &ra.size * &rb.size))
        });
        Self::from_buckets(group, buckets.collect::<Vec<_>>())
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn records(&self) -> &[ClassRecord] {
        &self.records
    }

    pub fn weyl_order(&self) -> &BigInt {
        &self.weyl_order
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// The bucket containing the identity, `det(1 + s w) = (1 + s)^r`.
    pub fn identity_record(&self) -> Option<&ClassRecord> {
        let identity = UniPoly::from_ints(Var::X, &[-1, 1]).pow(self.rank() as u32);
        self.records.iter().find(|r| r.char_poly == identity)
    }

    /// Checks the structural invariants every table must satisfy.
    pub fn validate(&self) -> Result<(), String> {
        let total: BigInt = self.records.iter().map(|r| &r.size).sum();
        if total != self.weyl_order || self.weyl_order != self.group.weyl_order() {
            return Err(format!(
                "sizes sum to {total}, expected |W| = {}",
                self.group.weyl_order()
            ));
        }
        let r = self.rank();
        let one_plus_s = UniPoly::from_ints(Var::S, &[1, 1]).pow(r as u32);
        let identity_buckets = self
            .records
            .iter()
            .filter(|rec| rec.det_one_plus_sw == one_plus_s)
            .count();
        if identity_buckets != 1 {
            return Err(format!(
                "{identity_buckets} buckets with det(1+sw) = (1+s)^{r}"
            ));
        }
        for rec in &self.records {
            if rec.char_poly.degree() != Some(r)
                || rec.det_one_plus_sw.coeff(0) != BigRational::one()
            {
                return Err(format!("malformed record {}", rec.char_poly));
            }
        }
        // average trace of w equals the dimension of the fixed subspace
        let trace_sum: BigRational = self
            .records
            .iter()
            .map(|rec| rec.det_one_plus_sw.coeff(1) * BigRational::from_integer(rec.size.clone()))
            .sum();
        let expected =
            BigRational::from_integer(&self.weyl_order * self.group.central_torus_rank());
        if trace_sum != expected {
            return Err(format!(
                "trace sum {trace_sum} != |W| * central rank {expected}"
            ));
        }
        Ok(())
    }
}
