use std::fmt;

use num_bigint::BigInt;

/// An element of the Weyl group acting on the rank-`r` lattice, as an
/// integer matrix in a fixed basis (row-major).
///
/// Entries of any Weyl group element in the bases used here are bounded by
/// the coefficients of the highest root (at most 6), so `i64` storage is
/// exact; products are overflow-checked regardless.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    entries: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        WeylElement { rank, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let rank = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == rank),
            "matrix must be square"
        );
        WeylElement {
            rank,
            entries: rows.concat(),
        }
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let rank = perm.len();
        let mut entries = vec![0; rank * rank];
        for (j, &i) in perm.iter().enumerate() {
            entries[i * rank + j] = 1;
        }
        WeylElement { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.rank + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        // chunks(0) panics, and a rank-0 matrix has no rows anyway
        self.entries.chunks(self.rank.max(1)).take(self.rank)
    }

    pub fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let r = self.rank;
        let mut entries = vec![0i64; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.entries[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    let prod = a
                        .checked_mul(other.entries[k * r + j])
                        .expect("Weyl matrix overflow");
                    entries[i * r + j] = entries[i * r + j]
                        .checked_add(prod)
                        .expect("Weyl matrix overflow");
                }
            }
        }
        WeylElement { rank: r, entries }
    }

    /// Places the blocks along the diagonal.
    pub fn block_diagonal(blocks: &[&WeylElement]) -> WeylElement {
        let rank = blocks.iter().map(|b| b.rank).sum();
        let mut entries = vec![0; rank * rank];
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.rank {
                for j in 0..b.rank {
                    entries[(offset + i) * rank + offset + j] = b.get(i, j);
                }
            }
            offset += b.rank;
        }
        WeylElement { rank, entries }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
