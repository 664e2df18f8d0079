use num_bigint::BigInt;

use super::group::{GroupSpec, WeylType};

/// Characteristic degrees `d_1, …, d_r` of the Weyl group acting on the
/// rank-`r` torus. Central directions contribute degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    group: GroupSpec,
    degrees: Vec<u32>,
}

fn factor_degrees(ty: WeylType) -> Vec<u32> {
    match ty {
        WeylType::Symmetric(k) => (1..=k).collect(),
        WeylType::A(m) => (2..=m + 1).collect(),
        WeylType::B(m) => (1..=m).map(|i| 2 * i).collect(),
        WeylType::D(m) => (1..m).map(|i| 2 * i).chain([m]).collect(),
        WeylType::G2 => vec![2, 6],
        WeylType::F4 => vec![2, 6, 8, 12],
        WeylType::E6 => vec![2, 5, 6, 8, 9, 12],
        WeylType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        WeylType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        WeylType::Torus(k) => vec![1; k as usize],
    }
}

impl DegreeTable {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Sorted ascending.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `Π d_i`, which equals `|W|`.
    pub fn product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// `Σ (2 d_i - 1)`, the dimension of the group.
    pub fn dimension(&self) -> usize {
        self.degrees.iter().map(|&d| 2 * d as usize - 1).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// Characteristic degrees per factor, concatenated and sorted.
pub fn degrees(g: &GroupSpec) -> DegreeTable {
    let mut degrees: Vec<u32> = g.weyl_types().flat_map(factor_degrees).collect();
    degrees.sort_unstable();
    DegreeTable {
        group: g.clone(),
        degrees,
    }
}
