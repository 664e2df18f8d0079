//! Simple reflections for each factor, assembled block-diagonally.
//!
//! Types A and the exceptional types act on the root lattice through their
//! Cartan matrix; `U(k)` permutes coordinates; B/C and D act by signed
//! permutations. Only the characteristic polynomials of the resulting
//! elements matter downstream, and those are basis independent.

use super::element::WeylElement;
use super::group::{GroupSpec, WeylType};

fn cartan_from_edges(rank: usize, edges: &[(usize, usize, i64, i64)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // (i, j, a_ij, a_ji), 1-based Bourbaki labels
    for &(i, j, aij, aji) in edges {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    }
    a
}

/// Cartan matrix `a_ij = <α_i^∨, α_j>` in Bourbaki numbering.
pub fn cartan_matrix(ty: WeylType) -> Option<Vec<Vec<i64>>> {
    let simply_laced = |rank: usize, edges: &[(usize, usize)]| {
        let e: Vec<_> = edges.iter().map(|&(i, j)| (i, j, -1, -1)).collect();
        cartan_from_edges(rank, &e)
    };
    let e_edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    Some(match ty {
        WeylType::A(m) => {
            let m = m as usize;
            let edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
            simply_laced(m, &edges)
        }
        WeylType::G2 => cartan_from_edges(2, &[(1, 2, -1, -3)]),
        WeylType::F4 => cartan_from_edges(4, &[(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]),
        WeylType::E6 => simply_laced(
            6,
            &e_edges[..4]
                .iter()
                .chain(&e_edges[6..])
                .copied()
                .collect::<Vec<_>>(),
        ),
        WeylType::E7 => simply_laced(
            7,
            &e_edges[..5]
                .iter()
                .chain(&e_edges[6..])
                .copied()
                .collect::<Vec<_>>(),
        ),
        WeylType::E8 => simply_laced(8, &e_edges),
        _ => return None,
    })
}

fn identity_rows(r: usize) -> Vec<Vec<i64>> {
    (0..r)
        .map(|k| (0..r).map(|j| i64::from(k == j)).collect())
        .collect()
}

/// Simple reflection `s_i(α_j) = α_j - a_ij α_i` in the simple-root basis.
fn root_reflection(cartan: &[Vec<i64>], i: usize) -> WeylElement {
    let r = cartan.len();
    let mut rows = identity_rows(r);
    for j in 0..r {
        rows[i][j] = i64::from(i == j) - cartan[i][j];
    }
    WeylElement::from_rows(&rows)
}

fn transposition(rank: usize, i: usize) -> WeylElement {
    let mut perm: Vec<usize> = (0..rank).collect();
    perm.swap(i, i + 1);
    WeylElement::permutation(&perm)
}

/// Generators of one factor's Weyl group on its own rank-`r` block.
pub fn factor_generators(ty: WeylType) -> Vec<WeylElement> {
    match ty {
        WeylType::Symmetric(k) => (0..(k as usize).saturating_sub(1))
            .map(|i| transposition(k as usize, i))
            .collect(),
        WeylType::B(m) => {
            let m = m as usize;
            let mut gens: Vec<_> = (0..m - 1).map(|i| transposition(m, i)).collect();
            let mut rows = identity_rows(m);
            rows[m - 1][m - 1] = -1;
            gens.push(WeylElement::from_rows(&rows));
            gens
        }
        WeylType::D(m) => {
            let m = m as usize;
            let mut gens: Vec<_> = (0..m - 1).map(|i| transposition(m, i)).collect();
            // e_{m-1} <-> -e_m
            let mut rows = identity_rows(m);
            rows[m - 2][m - 2] = 0;
            rows[m - 1][m - 1] = 0;
            rows[m - 2][m - 1] = -1;
            rows[m - 1][m - 2] = -1;
            gens.push(WeylElement::from_rows(&rows));
            gens
        }
        WeylType::Torus(_) => Vec::new(),
        _ => {
            let cartan = cartan_matrix(ty).expect("Cartan type");
            (0..cartan.len())
                .map(|i| root_reflection(&cartan, i))
                .collect()
        }
    }
}

/// Simple reflections of the whole group, each acting on the full rank-`r`
/// lattice as a block-diagonal matrix (identity on the other factors).
pub fn reflection_generators(g: &GroupSpec) -> Vec<WeylElement> {
    let types: Vec<WeylType> = g.weyl_types().collect();
    let identities: Vec<WeylElement> = types
        .iter()
        .map(|t| WeylElement::identity(t.rank()))
        .collect();
    let mut gens = Vec::new();
    for (idx, ty) in types.iter().enumerate() {
        for local in factor_generators(*ty) {
            let blocks: Vec<&WeylElement> = (0..types.len())
                .map(|j| if j == idx { &local } else { &identities[j] })
                .collect();
            gens.push(WeylElement::block_diagonal(&blocks));
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylcore::group::parse_group;

    fn gens(s: &str) -> Vec<WeylElement> {
        reflection_generators(&parse_group(s).unwrap())
    }

    #[test]
    fn su2_is_minus_one() {
        assert_eq!(gens("SU(2)"), vec![WeylElement::from_rows(&[vec![-1]])]);
    }

    #[test]
    fn u2_is_the_swap() {
        assert_eq!(
            gens("U(2)"),
            vec![WeylElement::from_rows(&[vec![0, 1], vec![1, 0]])]
        );
    }

    #[test]
    fn torus_has_no_generators() {
        assert!(gens("T^3").is_empty());
        assert!(gens("U(1)").is_empty());
    }

    #[test]
    fn generators_are_involutions_with_determinant_minus_one() {
        for spec in [
            "SU(4)",
            "U(3)",
            "Sp(3)",
            "SO(8)",
            "G2",
            "F4",
            "E6",
            "E7",
            "E8",
            "SU(2)xG2xT^1",
        ] {
            let g = parse_group(spec).unwrap();
            let gs = reflection_generators(&g);
            for s in &gs {
                assert_eq!(s.rank(), g.rank());
                assert!(
                    s.mul(s).is_identity(),
                    "{spec}: generator not an involution"
                );
                // a reflection fixes a hyperplane: trace = r - 2
                let trace: i64 = (0..s.rank()).map(|i| s.get(i, i)).sum();
                assert_eq!(trace, g.rank() as i64 - 2, "{spec}");
            }
        }
    }

    #[test]
    fn g2_rotation_has_order_six() {
        let gs = gens("G2");
        let t = gs[0].mul(&gs[1]);
        let mut p = t.clone();
        let mut order = 1;
        while !p.is_identity() {
            p = p.mul(&t);
            order += 1;
        }
        assert_eq!(order, 6);
    }

    #[test]
    fn block_diagonal_layout() {
        let gs = gens("SU(2)xU(2)");
        assert_eq!(gs.len(), 2);
        assert_eq!(
            gs[1],
            WeylElement::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]])
        );
    }
}
