use std::fmt;

use num_traits::{One, Zero};

use super::unipoly::write_terms;
use super::{check_vars, BigRational, PolyError, UniPoly, Var};

/// Formal power series known through `var^order`.
///
/// Always holds exactly `order + 1` coefficients, trailing zeros included.
/// Binary operations truncate to the smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    var: Var,
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so that the length is `order + 1`.
    pub fn new(var: Var, order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { var, order, coeffs }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::new(var, order, Vec::new())
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::new(var, order, vec![BigRational::one()])
    }

    pub fn from_poly(poly: &UniPoly, order: usize) -> Self {
        let coeffs = poly.coeffs().iter().take(order + 1).cloned().collect();
        Self::new(poly.var(), order, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops everything above `order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.var, order, self.coeffs[..=order].to_vec())
    }

    /// The known coefficients as a polynomial.
    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        check_vars(self.var, other.var)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Ok(Self::new(self.var, order, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        check_vars(self.var, other.var)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self::new(self.var, order, coeffs))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(
            self.var,
            self.order,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Multiplicative inverse to the same order.
    ///
    /// Solves `a · b = 1` term by term: `b_0 = 1/a_0`,
    /// `b_m = -(1/a_0) Σ_{i=1..m} a_i b_{m-i}`.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(PolyError::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for m in 1..=self.order {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[m - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self::new(self.var, self.order, out))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one(self.var, self.order);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base).expect("same variable");
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base).expect("same variable");
            }
        }
        result
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_terms(f, self.var, &self.coeffs, &mut first)?;
        let tail = format!("O({}^{})", self.var, self.order + 1);
        if first {
            f.write_str(&tail)
        } else {
            write!(f, " + {tail}")
        }
    }
}
