//! Rendering of finished reports. Every subcommand computes its full report
//! first and only then serializes it here, so output never interleaves with
//! work and identical runs produce identical bytes.

use num::ToPrimitive;
use pscbound::{
    render_expansion, render_ring_elt, BoundReport, BoundTerm, CoeffClass, CycRingElt,
    FundClassExpansion, SuiteReport,
};
use serde_json::{json, Value};

use crate::config::Format;

pub const MODULE_LABELS: [&str; 3] = ["F0", "F1", "F0_0"];

pub struct ComputeReport {
    pub group_label: String,
    pub bc_status: &'static str,
    pub rows: Vec<BoundReport>,
    /// Per-row surjectivity annotation; absent for class-data input, where
    /// the homological dimension of the torsion-free part is unknown.
    pub surjectivity: Option<Vec<String>>,
}

pub struct HomologyReport {
    pub group_label: String,
    /// Rows in MODULE_LABELS order, columns H_0, H_1, H_2.
    pub grid: [[u64; 3]; 3],
}

pub struct MattheyReport {
    pub raw: FundClassExpansion,
    pub collapsed: FundClassExpansion,
    pub verified: bool,
}

pub struct VerifyReport {
    pub max_modulus: u64,
    pub suites: Vec<SuiteReport>,
    pub ok: bool,
}

/// Left-aligned columns separated by two spaces.
fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

fn module_label(q: u8, zero_at_identity: bool) -> &'static str {
    match (q, zero_at_identity) {
        (0, true) => "F0_0",
        (0, false) => "F0",
        _ => "F1",
    }
}

/// `H0(F0)=2+H2(F1)=1`; single token so table rows stay machine-splittable.
fn terms_label(terms: &[BoundTerm]) -> String {
    if terms.is_empty() {
        return "-".to_string();
    }
    terms
        .iter()
        .map(|t| {
            format!(
                "H{}({})={}",
                t.p,
                module_label(t.q, t.zero_at_identity),
                t.dim
            )
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn term_json(t: &BoundTerm) -> Value {
    json!({
        "p": t.p,
        "q": t.q,
        "zero_at_identity": t.zero_at_identity,
        "dim": t.dim,
    })
}

/// Exact rational as a `[numerator, denominator]` pair; decimal strings only
/// if a value ever outgrows i64 (none of the emitted coefficients do).
fn rat_pair(r: &num::BigRational) -> Value {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => json!([n, d]),
        _ => json!([r.numer().to_string(), r.denom().to_string()]),
    }
}

fn ring_elt_json(x: &CycRingElt) -> Value {
    Value::Array(x.coeffs().iter().map(rat_pair).collect())
}

fn json_doc(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("report is valid json");
    s.push('\n');
    s
}

pub fn render_compute(r: &ComputeReport, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = format!("group: {}\n", r.group_label);
            out.push_str(&format!("bc-status: {}\n", r.bc_status));
            if let Some(first) = r.rows.first() {
                for a in &first.assumptions {
                    out.push_str(&format!("assumption: {a}\n"));
                }
            }
            out.push('\n');
            let mut rows = vec![vec![
                "n".to_string(),
                "mod4".to_string(),
                "rel_rank(n)".to_string(),
                "psc_rank(n-1)".to_string(),
                "rel_terms".to_string(),
                "psc_terms".to_string(),
            ]];
            for b in &r.rows {
                rows.push(vec![
                    b.n.to_string(),
                    b.residue.to_string(),
                    b.bound_r.to_string(),
                    b.bound_pos.to_string(),
                    terms_label(&b.r_terms),
                    terms_label(&b.pos_terms),
                ]);
            }
            out.push_str(&render_table(&rows));
            if let Some(lines) = &r.surjectivity {
                out.push_str("\nsurjectivity:\n");
                for (b, line) in r.rows.iter().zip(lines) {
                    out.push_str(&format!("  n={}: {}\n", b.n, line));
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let mut row = json!({
                        "n": b.n,
                        "residue": b.residue,
                        "rel_rank": b.bound_r,
                        "psc_rank": b.bound_pos,
                        "rel_terms": b.r_terms.iter().map(term_json).collect::<Vec<_>>(),
                        "psc_terms": b.pos_terms.iter().map(term_json).collect::<Vec<_>>(),
                    });
                    if let Some(lines) = &r.surjectivity {
                        row["surjectivity"] = Value::String(lines[i].clone());
                    }
                    row
                })
                .collect();
            let assumptions: Vec<&str> = r
                .rows
                .first()
                .map(|b| b.assumptions.iter().map(String::as_str).collect())
                .unwrap_or_default();
            json_doc(json!({
                "schema": 1,
                "command": "compute",
                "group": r.group_label,
                "bc_status": r.bc_status,
                "assumptions": assumptions,
                "rows": rows,
            }))
        }
        Format::Csv => {
            let mut out = csv_line(&[
                "n".into(),
                "mod4".into(),
                "rel_rank".into(),
                "psc_rank".into(),
                "rel_terms".into(),
                "psc_terms".into(),
            ]);
            for b in &r.rows {
                out.push_str(&csv_line(&[
                    b.n.to_string(),
                    b.residue.to_string(),
                    b.bound_r.to_string(),
                    b.bound_pos.to_string(),
                    terms_label(&b.r_terms),
                    terms_label(&b.pos_terms),
                ]));
            }
            out
        }
    }
}

pub fn render_homology(r: &HomologyReport, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = format!("group: {}\n\n", r.group_label);
            let mut rows = vec![vec![
                "module".to_string(),
                "H0".to_string(),
                "H1".to_string(),
                "H2".to_string(),
            ]];
            for (label, dims) in MODULE_LABELS.iter().zip(r.grid.iter()) {
                let mut row = vec![label.to_string()];
                row.extend(dims.iter().map(u64::to_string));
                rows.push(row);
            }
            out.push_str(&render_table(&rows));
            out
        }
        Format::Json => {
            let modules: Vec<Value> = MODULE_LABELS
                .iter()
                .zip(r.grid.iter())
                .map(|(label, dims)| json!({ "module": label, "dims": dims }))
                .collect();
            json_doc(json!({
                "schema": 1,
                "command": "homology",
                "group": r.group_label,
                "modules": modules,
            }))
        }
        Format::Csv => {
            let mut out = csv_line(&["module".into(), "H0".into(), "H1".into(), "H2".into()]);
            for (label, dims) in MODULE_LABELS.iter().zip(r.grid.iter()) {
                let mut row = vec![label.to_string()];
                row.extend(dims.iter().map(u64::to_string));
                out.push_str(&csv_line(&row));
            }
            out
        }
    }
}

fn coeff_part(c: &CoeffClass) -> &'static str {
    match c {
        CoeffClass::Re(_) => "Re",
        CoeffClass::Im(_) => "Im",
    }
}

fn expansion_json(e: &FundClassExpansion) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|t| {
            json!({
                "l": t.l,
                "part": coeff_part(&t.coefficient),
                "coefficient": ring_elt_json(t.coefficient.as_elt()),
                "scalar": ring_elt_json(&t.scalar),
            })
        })
        .collect();
    json!({ "num_terms": e.terms.len(), "terms": terms })
}

pub fn render_matthey(r: &MattheyReport, format: Format) -> String {
    let verdict = if r.verified {
        "verified: raw and collapsed expansions are equal as tensors"
    } else {
        "MISMATCH: raw and collapsed expansions differ"
    };
    match format {
        Format::Table => {
            let mut out = format!(
                "fundamental class: {} for Z/{}, q={}, KO-degree {}\n\n",
                r.raw.geometric_factor, r.raw.m, r.raw.q, r.raw.ko_degree
            );
            out.push_str(&format!("raw ({} terms):\n", r.raw.terms.len()));
            out.push_str(&render_expansion(&r.raw));
            out.push_str(&format!("\ncollapsed ({} terms):\n", r.collapsed.terms.len()));
            out.push_str(&render_expansion(&r.collapsed));
            out.push('\n');
            out.push_str(verdict);
            out.push('\n');
            out
        }
        Format::Json => json_doc(json!({
            "schema": 1,
            "command": "matthey",
            "p": r.raw.p,
            "m": r.raw.m,
            "q": r.raw.q,
            "ko_degree": r.raw.ko_degree,
            "geometric_factor": r.raw.geometric_factor.to_string(),
            "raw": expansion_json(&r.raw),
            "collapsed": expansion_json(&r.collapsed),
            "verified": r.verified,
        })),
        Format::Csv => {
            let mut out = csv_line(&[
                "stage".into(),
                "l".into(),
                "part".into(),
                "coefficient".into(),
                "scalar".into(),
            ]);
            for (stage, e) in [("raw", &r.raw), ("collapsed", &r.collapsed)] {
                for t in &e.terms {
                    out.push_str(&csv_line(&[
                        stage.to_string(),
                        t.l.to_string(),
                        coeff_part(&t.coefficient).to_string(),
                        render_ring_elt(t.coefficient.as_elt()),
                        render_ring_elt(&t.scalar),
                    ]));
                }
            }
            out
        }
    }
}

pub fn render_verify(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Table => {
            let mut rows = vec![vec![
                "suite".to_string(),
                "passed".to_string(),
                "failed".to_string(),
            ]];
            for s in &r.suites {
                rows.push(vec![
                    s.name.to_string(),
                    s.passed.to_string(),
                    s.failed.to_string(),
                ]);
            }
            let mut out = render_table(&rows);
            for s in &r.suites {
                for f in &s.failures {
                    out.push_str(&format!("  [{}] {}\n", s.name, f));
                }
            }
            out.push('\n');
            if r.ok {
                out.push_str(&format!(
                    "all suites passed (max modulus {})\n",
                    r.max_modulus
                ));
            } else {
                out.push_str(&format!(
                    "VERIFICATION FAILED (max modulus {})\n",
                    r.max_modulus
                ));
            }
            out
        }
        Format::Json => {
            let suites: Vec<Value> = r
                .suites
                .iter()
                .map(|s| {
                    json!({
                        "name": s.name,
                        "passed": s.passed,
                        "failed": s.failed,
                        "failures": s.failures,
                    })
                })
                .collect();
            json_doc(json!({
                "schema": 1,
                "command": "verify",
                "max_modulus": r.max_modulus,
                "ok": r.ok,
                "suites": suites,
            }))
        }
        Format::Csv => {
            let mut out = csv_line(&["suite".into(), "passed".into(), "failed".into()]);
            for s in &r.suites {
                out.push_str(&csv_line(&[
                    s.name.to_string(),
                    s.passed.to_string(),
                    s.failed.to_string(),
                ]));
            }
            out
        }
    }
}
