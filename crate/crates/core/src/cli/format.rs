//! Text, LaTeX and JSON emitters.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactpoly::{BigRational, UniPoly, Var};
use crate::oracle::CheckReport;
use crate::series::{SeriesResult, SeriesValue};
use crate::weylcore::{ClassTable, DegreeTable, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

/// Anything the CLI can print.
#[derive(Debug, Clone)]
pub enum Document {
    Series(SeriesResult),
    Classes(ClassTable),
    Degrees(DegreeTable),
    Check(CheckReport),
}

impl Document {
    /// The rendered document, newline-terminated. `None` when the format
    /// does not apply to this kind of document.
    pub fn render(&self, format: OutputFormat) -> Option<String> {
        let mut out = match (self, format) {
            (Document::Series(r), OutputFormat::Text) => r.value.to_string(),
            (Document::Series(r), OutputFormat::Latex) => format!("${}$", latex_value(&r.value)),
            (Document::Series(r), OutputFormat::Json) => to_json(&SeriesJson::new(r)),
            (Document::Classes(t), OutputFormat::Text) => classes_text(t),
            (Document::Classes(t), OutputFormat::Latex) => classes_latex(t),
            (Document::Classes(t), OutputFormat::Json) => to_json(&ClassesJson::new(t)),
            (Document::Degrees(d), OutputFormat::Text) => degrees_text(d),
            (Document::Degrees(d), OutputFormat::Latex) => degrees_latex(d),
            (Document::Degrees(d), OutputFormat::Json) => to_json(&DegreesJson::new(d)),
            (Document::Check(r), OutputFormat::Text) => r.to_text(),
            (Document::Check(r), OutputFormat::Json) => r.to_json(),
            (Document::Check(_), OutputFormat::Latex) => return None,
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Some(out)
    }
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn strings(coeffs: &[BigRational]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct TPart {
    t_degree: usize,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    formula: &'static str,
    group: &'a str,
    rank: usize,
    weyl_order: String,
    parameter: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    variable: Option<&'static str>,
    /// Truncation order, for series known only modulo `s^(order+1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_parts: Option<Vec<TPart>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

impl<'a> SeriesJson<'a> {
    fn new(r: &'a SeriesResult) -> Self {
        let mut json = SeriesJson {
            formula: r.formula.as_str(),
            group: r.group.canonical_name(),
            rank: r.group.rank(),
            weyl_order: r.group.weyl_order().to_string(),
            parameter: r.parameter,
            variable: None,
            order: None,
            coefficients: None,
            t_parts: None,
            value: None,
        };
        match &r.value {
            SeriesValue::Poly(p) => {
                json.variable = Some(p.var().symbol());
                json.coefficients = Some(strings(p.coeffs()));
            }
            SeriesValue::Series(p) => {
                json.variable = Some(p.var().symbol());
                json.order = Some(p.order());
                json.coefficients = Some(strings(p.coeffs()));
            }
            SeriesValue::BiPoly(p) => {
                json.variable = Some(Var::S.symbol());
                json.coefficients = Some(strings(p.collapse().coeffs()));
                json.t_parts = Some(
                    p.entries()
                        .iter()
                        .map(|(k, part)| TPart {
                            t_degree: *k,
                            coefficients: strings(part.coeffs()),
                        })
                        .collect(),
                );
            }
            SeriesValue::BiSeries(p) => {
                json.variable = Some(Var::S.symbol());
                json.order = Some(p.order());
                json.coefficients = Some(strings(p.collapse().coeffs()));
                json.t_parts = Some(
                    p.entries()
                        .iter()
                        .map(|(k, part)| TPart {
                            t_degree: *k,
                            coefficients: strings(part.coeffs()),
                        })
                        .collect(),
                );
            }
            SeriesValue::Scalar(x) => json.value = Some(x.to_string()),
        }
        json
    }
}

#[derive(Serialize)]
struct RecordJson {
    size: String,
    char_poly: Vec<String>,
    det_one_plus_sw: Vec<String>,
}

#[derive(Serialize)]
struct ClassesJson<'a> {
    group: &'a str,
    rank: usize,
    weyl_order: String,
    records: Vec<RecordJson>,
}

impl<'a> ClassesJson<'a> {
    fn new(t: &'a ClassTable) -> Self {
        ClassesJson {
            group: t.group().canonical_name(),
            rank: t.rank(),
            weyl_order: t.weyl_order().to_string(),
            records: t
                .records()
                .iter()
                .map(|r| RecordJson {
                    size: r.size.to_string(),
                    char_poly: strings(r.char_poly.coeffs()),
                    det_one_plus_sw: strings(r.det_one_plus_sw.coeffs()),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct DegreesJson<'a> {
    group: &'a str,
    rank: usize,
    weyl_order: String,
    dimension: usize,
    degrees: &'a [u32],
}

impl<'a> DegreesJson<'a> {
    fn new(d: &'a DegreeTable) -> Self {
        DegreesJson {
            group: d.group().canonical_name(),
            rank: d.group().rank(),
            weyl_order: d.group().weyl_order().to_string(),
            dimension: d.dimension(),
            degrees: d.degrees(),
        }
    }
}

fn header(g: &GroupSpec) -> String {
    format!(
        "{}: rank {}, |W| = {}",
        g.canonical_name(),
        g.rank(),
        g.weyl_order()
    )
}

fn classes_text(t: &ClassTable) -> String {
    let mut out = format!(
        "{}, {} characteristic polynomials\n",
        header(t.group()),
        t.records().len()
    );
    let width = t
        .records()
        .iter()
        .map(|r| r.size.to_string().len())
        .max()
        .unwrap_or(1);
    for r in t.records() {
        let _ = writeln!(
            out,
            "{:>width$}  det(x - w) = {}  det(1 + sw) = {}",
            r.size, r.char_poly, r.det_one_plus_sw
        );
    }
    out
}

fn classes_latex(t: &ClassTable) -> String {
    let mut out = String::from("\\begin{tabular}{rll}\n");
    out.push_str("size & $\\det(x - w)$ & $\\det(1 + sw)$ \\\\\n\\hline\n");
    for r in t.records() {
        let _ = writeln!(
            out,
            "{} & ${}$ & ${}$ \\\\",
            r.size,
            latex_poly(&r.char_poly),
            latex_poly(&r.det_one_plus_sw)
        );
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn degrees_text(d: &DegreeTable) -> String {
    let list: Vec<String> = d.degrees().iter().map(ToString::to_string).collect();
    format!(
        "{}, dim {}\ndegrees: {}\n",
        header(d.group()),
        d.dimension(),
        list.join(" ")
    )
}

fn degrees_latex(d: &DegreeTable) -> String {
    let list: Vec<String> = d.degrees().iter().map(ToString::to_string).collect();
    format!("$d_i = {}$\n", list.join(", "))
}

/// A monomial `c · s^i t^k` in LaTeX, without its sign.
fn latex_term(mag: &BigRational, vars: &[(&str, usize)]) -> String {
    let mut out = String::new();
    let has_vars = vars.iter().any(|&(_, e)| e > 0);
    if !mag.is_one() || !has_vars {
        if mag.is_integer() {
            out.push_str(&mag.numer().to_string());
        } else {
            let _ = write!(out, "\\frac{{{}}}{{{}}}", mag.numer(), mag.denom());
        }
    }
    for &(symbol, e) in vars {
        match e {
            0 => {}
            1 => out.push_str(symbol),
            _ => {
                let _ = write!(out, "{symbol}^{{{e}}}");
            }
        }
    }
    out
}

/// Joins signed terms into `a + b - c`.
fn latex_sum(terms: impl IntoIterator<Item = (BigRational, String)>) -> String {
    let mut out = String::new();
    for (c, body) in terms {
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Nonzero terms of `Σ c_i var^i · t^k`; `t_degree` is `None` outside the
/// bigraded case.
fn terms(var: Var, coeffs: &[BigRational], t_degree: Option<usize>) -> Vec<(BigRational, String)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut vars = vec![(var.symbol(), i)];
            if let Some(k) = t_degree {
                vars.push(("t", k));
            }
            (c.clone(), latex_term(&c.abs(), &vars))
        })
        .collect()
}

fn or_zero(s: String) -> String {
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn latex_poly(p: &UniPoly) -> String {
    or_zero(latex_sum(terms(p.var(), p.coeffs(), None)))
}

fn with_tail(body: String, var: Var, order: usize) -> String {
    let tail = format!("O({}^{{{}}})", var.symbol(), order + 1);
    if body.is_empty() {
        tail
    } else {
        format!("{body} + {tail}")
    }
}

/// The value as a LaTeX math expression, without delimiters.
pub fn latex_value(value: &SeriesValue) -> String {
    match value {
        SeriesValue::Poly(p) => latex_poly(p),
        SeriesValue::Series(p) => with_tail(
            latex_sum(terms(p.var(), p.coeffs(), None)),
            p.var(),
            p.order(),
        ),
        SeriesValue::BiPoly(p) => or_zero(latex_sum(
            p.entries()
                .iter()
                .flat_map(|(k, part)| terms(Var::S, part.coeffs(), Some(*k))),
        )),
        SeriesValue::BiSeries(p) => with_tail(
            latex_sum(
                p.entries()
                    .iter()
                    .flat_map(|(k, part)| terms(Var::S, part.coeffs(), Some(*k))),
            ),
            Var::S,
            p.order(),
        ),
        SeriesValue::Scalar(x) => {
            let body = latex_term(&x.abs(), &[]);
            if x.is_negative() {
                format!("-{body}")
            } else {
                body
            }
        }
    }
}
