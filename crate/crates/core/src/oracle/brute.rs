//! Element-by-element evaluation of `(1/|W|) Σ_w det(1 + s w)^n`.
//!
//! Uses its own closure (full visited set, right multiplication) and its own
//! determinant (Laplace expansion with memoized minors over polynomial
//! entries). Nothing here touches class tables or characteristic
//! polynomials.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::{BigRational, UniPoly, Var};
use crate::weylcore::WeylElement;

type Matrix = Vec<i64>;

fn matmul(a: &[i64], b: &[i64], r: usize) -> Matrix {
    let mut out = vec![0i64; r * r];
    for i in 0..r {
        for j in 0..r {
            let mut acc = 0i64;
            for k in 0..r {
                acc += a[i * r + k] * b[k * r + j];
            }
            out[i * r + j] = acc;
        }
    }
    out
}

/// Every product of the generators, by breadth-first search.
pub fn closure(rank: usize, generators: &[WeylElement], cap: u64) -> Result<Vec<Matrix>> {
    let mut identity = vec![0i64; rank * rank];
    for i in 0..rank {
        identity[i * rank + i] = 1;
    }
    let gens: Vec<&[i64]> = generators.iter().map(|g| g.entries()).collect();
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut queue: VecDeque<Matrix> = VecDeque::new();
    let mut elements = Vec::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = matmul(&w, g, rank);
            if seen.insert(next.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::CapExceeded {
                        order: BigInt::from(seen.len()),
                        cap,
                    });
                }
                queue.push_back(next);
            }
        }
        elements.push(w);
    }
    Ok(elements)
}

/// Polynomial with small integer coefficients, ascending.
type IntPoly = Vec<i64>;

fn poly_mul_add(acc: &mut IntPoly, a: &[i64], b: &[i64], sign: i64) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, 0);
    }
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            acc[i + j] += sign * x * y;
        }
    }
}

/// `det(I + s w)` by cofactor expansion along successive rows. Minors are
/// memoized by the set of columns still available.
pub fn det_one_plus_sw(w: &[i64], rank: usize) -> IntPoly {
    fn minor(
        w: &[i64],
        r: usize,
        row: usize,
        cols: u64,
        memo: &mut HashMap<u64, IntPoly>,
    ) -> IntPoly {
        if row == r {
            return vec![1];
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc: IntPoly = Vec::new();
        // sign of column j among the remaining columns
        let mut position = 0;
        for j in 0..r {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = [i64::from(row == j), w[row * r + j]];
            if entry != [0, 0] {
                let sub = minor(w, r, row + 1, cols & !(1 << j), memo);
                let sign = if position % 2 == 0 { 1 } else { -1 };
                poly_mul_add(&mut acc, &entry, &sub, sign);
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    assert!(rank < 64, "rank too large for the cofactor oracle");
    let all = if rank == 0 {
        0
    } else {
        u64::MAX >> (64 - rank)
    };
    let mut memo = HashMap::new();
    let mut p = minor(w, rank, 0, all, &mut memo);
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Running sum of integer polynomials, kept in `i128` until it would
/// overflow and in `BigInt` from then on.
struct Accumulator {
    small: Vec<i128>,
    big: Vec<BigInt>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            small: Vec::new(),
            big: Vec::new(),
        }
    }

    fn spill(&mut self) {
        if self.big.len() < self.small.len() {
            self.big.resize(self.small.len(), BigInt::zero());
        }
        for (b, s) in self.big.iter_mut().zip(self.small.iter_mut()) {
            *b += BigInt::from(*s);
            *s = 0;
        }
    }

    fn add_small(&mut self, p: &[i128]) {
        if self.small.len() < p.len() {
            self.small.resize(p.len(), 0);
        }
        let fits = self
            .small
            .iter()
            .zip(p)
            .all(|(a, b)| a.checked_add(*b).is_some());
        if !fits {
            self.spill();
        }
        for (a, b) in self.small.iter_mut().zip(p) {
            *a += *b;
        }
    }

    fn add_big(&mut self, p: &[BigInt]) {
        if self.big.len() < p.len() {
            self.big.resize(p.len(), BigInt::zero());
        }
        for (a, b) in self.big.iter_mut().zip(p) {
            *a += b;
        }
    }

    fn total(mut self) -> Vec<BigInt> {
        self.spill();
        self.big
    }
}

fn mul_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(*y)?)?;
        }
    }
    Some(out)
}

fn mul_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1/|W|) Σ_w det(1 + s w)^n` for every `n` in `0..=n_max`, from one pass
/// over the group.
pub fn brute_rep_series_up_to(
    rank: usize,
    generators: &[WeylElement],
    n_max: u32,
    cap: u64,
) -> Result<Vec<UniPoly>> {
    let elements = closure(rank, generators, cap)?;
    let mut accs: Vec<Accumulator> = (0..=n_max).map(|_| Accumulator::new()).collect();
    for w in &elements {
        let det: Vec<i128> = det_one_plus_sw(w, rank)
            .into_iter()
            .map(i128::from)
            .collect();
        let det_big: Vec<BigInt> = det.iter().map(|&c| BigInt::from(c)).collect();
        // det^n, in i128 while it fits and in BigInt afterwards
        let mut small: Option<Vec<i128>> = Some(vec![1]);
        let mut big: Vec<BigInt> = Vec::new();
        for (n, acc) in accs.iter_mut().enumerate() {
            if n > 0 {
                match small.take() {
                    Some(p) => match mul_i128(&p, &det) {
                        Some(next) => small = Some(next),
                        None => {
                            let p_big: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
                            big = mul_big(&p_big, &det_big);
                        }
                    },
                    None => big = mul_big(&big, &det_big),
                }
            }
            match &small {
                Some(p) => acc.add_small(p),
                None => acc.add_big(&big),
            }
        }
    }
    let order = BigInt::from(elements.len());
    Ok(accs
        .into_iter()
        .map(|acc| {
            let coeffs = acc
                .total()
                .into_iter()
                .map(|c| BigRational::new(c, order.clone()))
                .collect();
            UniPoly::new(Var::S, coeffs)
        })
        .collect())
}

/// `(1/|W|) Σ_w det(1 + s w)^n` summed element by element over the closure
/// of `generators` acting on a rank-`rank` lattice.
pub fn brute_rep_series(
    rank: usize,
    generators: &[WeylElement],
    n: u32,
    cap: u64,
) -> Result<UniPoly> {
    Ok(brute_rep_series_up_to(rank, generators, n, cap)?
        .pop()
        .expect("n_max + 1 entries"))
}
