use std::fmt::Write as _;

use serde::Serialize;

use super::brute::brute_rep_series_up_to;
use crate::error::Result;
use crate::exactpoly::TruncatedSeries;
use crate::series::{
    comm_hilbert_series, group_poincare_polynomial, hom_series, is_betti_sequence,
    recombined_rep_series, rep_series, smash_series,
};
use crate::weylcore::{
    class_table, combinatorial_class_table, degrees, enumerate_class_table, reflection_generators,
    GroupSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub check: String,
    pub parameter: Option<u32>,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`cross_check`], one entry per comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub group: String,
    pub weyl_order: String,
    pub checks: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("cross-check {} (|W| = {})\n", self.group, self.weyl_order);
        for c in &self.checks {
            let param = c.parameter.map(|p| format!("[{p}]")).unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} {}{}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.check,
                param,
                c.detail
            );
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    fn push(&mut self, check: &str, parameter: Option<u32>, passed: bool, detail: String) {
        self.checks.push(CheckEntry {
            check: check.into(),
            parameter,
            passed,
            detail,
        });
    }
}

/// Compares the fast paths against the brute-force oracle and against each
/// other, for every `n ≤ n_max` and `k ≤ k_max`:
///
/// - cycle-type class table vs enumerated class table (classical groups), or
///   enumerated order vs the known `|W|` (exceptional factors);
/// - `rep_series` vs element-by-element summation;
/// - binomial recombination of the smash series;
/// - smash series integrality and the comm-series graded parts;
/// - `hom_series(·, 1)` vs the Poincaré polynomial of `G`.
pub fn cross_check(g: &GroupSpec, n_max: u32, k_max: u32, cap: u64) -> Result<CheckReport> {
    let enumerated = enumerate_class_table(g, cap)?;
    let table = class_table(g, cap)?;
    let mut report = CheckReport {
        group: g.canonical_name().to_string(),
        weyl_order: g.weyl_order().to_string(),
        checks: Vec::new(),
    };

    match enumerated.validate() {
        Ok(()) => report.push(
            "enumeration",
            None,
            true,
            format!("closure has {} elements", enumerated.weyl_order()),
        ),
        Err(e) => report.push("enumeration", None, false, e),
    }
    if g.is_classical() {
        let comb = combinatorial_class_table(g)?;
        let same = comb == enumerated;
        report.push(
            "class_table",
            None,
            same,
            format!(
                "cycle-type table ({} buckets) {} enumeration",
                comb.records().len(),
                if same { "equals" } else { "differs from" }
            ),
        );
    } else {
        let same = table == enumerated;
        report.push(
            "class_table",
            None,
            same,
            format!(
                "factorwise table {} enumeration",
                if same { "equals" } else { "differs from" }
            ),
        );
    }

    let brute = brute_rep_series_up_to(g.rank(), &reflection_generators(g), n_max, cap)?;
    for (n, expected) in (0..=n_max).zip(&brute) {
        let fast = rep_series(&table, n);
        let ok = &fast == expected;
        let detail = if ok {
            fast.to_string()
        } else {
            format!("fast {fast} vs brute {expected}")
        };
        report.push("rep_vs_brute", Some(n), ok, detail);
    }

    for n in 0..=n_max {
        let rep = rep_series(&table, n);
        let recombined = recombined_rep_series(&table, n);
        let ok = rep == recombined;
        report.push(
            "smash_recombination",
            Some(n),
            ok,
            format!("sum_k C({n},k) smash(k) = {recombined}"),
        );
    }

    let s_order = (k_max as usize).max(1) * g.rank().max(1);
    let comm = comm_hilbert_series(&table, s_order)?;
    for k in 0..=k_max {
        let smash = smash_series(&table, k);
        let low_ok = smash.low_degree().is_none_or(|d| d >= k as usize);
        let ok = is_betti_sequence(&smash) && low_ok;
        report.push("smash_betti", Some(k), ok, smash.to_string());
        let part_ok = comm.part(k as usize) == TruncatedSeries::from_poly(&smash, s_order);
        report.push(
            "comm_part",
            Some(k),
            part_ok,
            format!("t^{k} part to order {s_order}"),
        );
    }

    let degree_table = degrees(g);
    let hom = hom_series(&table, &degree_table, 1)?;
    let expected = group_poincare_polynomial(&degree_table);
    report.push(
        "hom_one",
        Some(1),
        hom == expected,
        format!("{hom} vs {expected}"),
    );
    let product_ok = degree_table.product() == g.weyl_order();
    report.push(
        "degree_product",
        None,
        product_ok,
        format!("prod d_i = {}", degree_table.product()),
    );
    Ok(report)
}
