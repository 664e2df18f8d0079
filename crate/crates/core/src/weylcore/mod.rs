//! Weyl groups of compact connected Lie groups and their
//! characteristic-polynomial distributions.

mod combinatorial;
mod degrees;
mod element;
mod enumerate;
mod generators;
mod group;
mod table;

pub use combinatorial::{combinatorial_class_table, partitions};
pub use degrees::{degrees, DegreeTable};
pub use element::WeylElement;
pub use enumerate::{enum_cap_from_env, enumerate_class_table, DEFAULT_ENUM_CAP, ENUM_CAP_VAR};
pub use generators::{cartan_matrix, factor_generators, reflection_generators};
pub use group::{parse_group, CartanFactor, GroupSpec, ParseError, WeylType};
pub use table::{ClassRecord, ClassTable};

use crate::error::Result;

/// The class table the series formulas consume.
///
/// Classical factors use the cycle-type tables; exceptional factors are
/// enumerated one at a time (each subject to `cap`) and the results are
/// combined as a direct product.
pub fn class_table(g: &GroupSpec, cap: u64) -> Result<ClassTable> {
    if g.is_classical() {
        return combinatorial_class_table(g);
    }
    let mut table = ClassTable::trivial(g.clone());
    for factor in g.factors() {
        let single = GroupSpec::from_factors(vec![*factor]);
        let part = if factor.weyl_type().is_classical() {
            combinatorial_class_table(&single)?
        } else {
            enumerate_class_table(&single, cap)?
        };
        table = ClassTable::product(g.clone(), &table, &part);
    }
    Ok(table)
}
