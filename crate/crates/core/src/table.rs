//! Serializable parameter rows and their json, csv and markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code_builder::{classical_params_range, ClassicalCodeParams};
use crate::cosets::CodeFrame;
use crate::error::Result;
use crate::formulas::{delta_max, FormulaReport};
use crate::reference::comparisons_for;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeTriple {
    pub n: u64,
    pub k: u64,
    pub d_lower: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    #[serde(rename = "N")]
    pub script_n: u64,
    #[serde(rename = "N1")]
    pub n1: u64,
    #[serde(rename = "N2")]
    pub n2: u64,
    pub i_star: u64,
    pub delta_max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub schema_version: String,
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub delta: u64,
    pub classical: CodeTriple,
    pub quantum: CodeTriple,
    pub counts: Counts,
    pub branch: String,
    pub dual_containing: bool,
}

impl TableRow {
    pub fn new(report: &FormulaReport, params: &ClassicalCodeParams) -> Self {
        let quantum = params.quantum();
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            q: params.q,
            m: params.m,
            n: params.n,
            delta: params.delta,
            classical: CodeTriple {
                n: params.n,
                k: params.k,
                d_lower: params.delta,
            },
            quantum: CodeTriple {
                n: quantum.n,
                k: quantum.k,
                d_lower: quantum.delta,
            },
            counts: Counts {
                script_n: report.script_n,
                n1: report.n1,
                n2: report.n2,
                i_star: report.i_star,
                delta_max: report.delta_max,
            },
            branch: report.branch_label(),
            dual_containing: params.dual_containing,
        }
    }

    /// `[[n,k,≥δ]]_q`.
    pub fn quantum_label(&self) -> String {
        format!(
            "[[{},{},≥{}]]_{}",
            self.quantum.n, self.quantum.k, self.quantum.d_lower, self.q
        )
    }

    /// `[n,k,≥δ]_{q²}`.
    pub fn classical_label(&self) -> String {
        format!(
            "[{},{},≥{}]_{}",
            self.classical.n,
            self.classical.k,
            self.classical.d_lower,
            self.q * self.q
        )
    }
}

pub fn row(frame: &CodeFrame, delta: u64) -> Result<TableRow> {
    Ok(rows(frame, delta, delta)?.remove(0))
}

pub fn rows(frame: &CodeFrame, lo: u64, hi: u64) -> Result<Vec<TableRow>> {
    Ok(classical_params_range(frame, lo, hi)?
        .iter()
        .map(|(report, params)| TableRow::new(report, params))
        .collect())
}

/// Every row from `δ = 2` to `δ^max`.
pub fn full_table(frame: &CodeFrame) -> Result<Vec<TableRow>> {
    rows(frame, 2, delta_max(frame)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(format!("unknown format '{other}' (expected json, csv or markdown)")),
        }
    }
}

pub const CSV_HEADER: &str = "schema_version,q,m,n,delta,classical_n,classical_k,classical_d_lower,\
quantum_n,quantum_k,quantum_d_lower,N,N1,N2,i_star,delta_max,branch,dual_containing";

fn csv_line(r: &TableRow) -> String {
    let c = &r.counts;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.schema_version,
        r.q,
        r.m,
        r.n,
        r.delta,
        r.classical.n,
        r.classical.k,
        r.classical.d_lower,
        r.quantum.n,
        r.quantum.k,
        r.quantum.d_lower,
        c.script_n,
        c.n1,
        c.n2,
        c.i_star,
        c.delta_max,
        r.branch,
        r.dual_containing
    )
}

fn markdown(rows: &[TableRow]) -> String {
    let mut out = String::from(
        "| m, q, δ | quantum code | classical code | N | branch | other constructions |\n\
         |---|---|---|---|---|---|\n",
    );
    for r in rows {
        let others: Vec<String> = comparisons_for(r.q, r.m, r.delta)
            .map(|c| format!("{} ({})", c.code, c.source.label()))
            .collect();
        let _ = writeln!(
            out,
            "| m={}, q={}, δ={} | {} | {} | {} | {} | {} |",
            r.m,
            r.q,
            r.delta,
            r.quantum_label(),
            r.classical_label(),
            r.counts.script_n,
            r.branch,
            if others.is_empty() { "-".to_string() } else { others.join("; ") }
        );
    }
    out
}

/// A single row: a json object, or a csv/markdown table with one data line.
pub fn render_row(row: &TableRow, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(row).expect("rows serialize") + "\n",
        _ => render_rows(std::slice::from_ref(row), format),
    }
}

/// All rows: a json array, or a csv/markdown table.
pub fn render_rows(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&csv_line(r));
                out.push('\n');
            }
            out
        }
        Format::Markdown => markdown(rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::make_frame;

    #[test]
    fn json_round_trip_and_schema() {
        let r = row(&make_frame(5, 2).unwrap(), 19).unwrap();
        assert_eq!(r.quantum_label(), "[[104,40,≥19]]_5");
        let text = render_row(&r, Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["counts"]["N"], 32);
        assert_eq!(v["counts"]["i_star"], 13);
        assert_eq!(v["quantum"]["k"], 40);
        assert_eq!(v["branch"], "m2q5+/b3/c3");
        let back: TableRow = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_columns_line_up() {
        let rs = full_table(&make_frame(3, 2).unwrap()).unwrap();
        let text = render_rows(&rs, Format::Csv);
        let width = CSV_HEADER.split(',').count();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), rs.len() + 1);
        assert!(lines.iter().all(|l| l.split(',').count() == width));
    }

    #[test]
    fn markdown_shows_comparisons() {
        let rs = rows(&make_frame(7, 2).unwrap(), 39, 39).unwrap();
        let text = render_rows(&rs, Format::Markdown);
        assert!(text.contains("[[300,160,≥39]]_7"));
        assert!(text.contains("[[300,156,≥38]]_7 (prior constacyclic BCH)"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
