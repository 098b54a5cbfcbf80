//! Rendering of weight reports and tables as JSON, CSV or markdown.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::{Mismatch, Provenance, TableRow, WeightReport, WeightStatus};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Compact JSON followed by a newline.
pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct JsonVerdict {
    weight: i64,
    a1: i64,
    status: WeightStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    split: Option<crate::classify::SplitWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple: Option<JsonMn>,
}

#[derive(Serialize)]
struct JsonMn {
    a2: i64,
    delta_z: String,
    delta_2adic: String,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    m: u32,
    #[serde(rename = "I")]
    i: [i64; 2],
    #[serde(rename = "J")]
    j: [i64; 2],
    provenance: Provenance,
    outside_j: Vec<i64>,
    verdicts: Vec<JsonVerdict>,
    mismatches: &'a [Mismatch],
}

/// One CSV row per verdict.
#[derive(Debug, Serialize)]
pub struct CsvVerdictRow {
    pub m: u32,
    pub weight: i64,
    pub status: &'static str,
    pub a1: i64,
    pub a2: Option<i64>,
    pub delta: Option<String>,
    pub witness_prime: Option<u64>,
}

pub fn csv_rows(report: &WeightReport) -> Vec<CsvVerdictRow> {
    report
        .verdicts
        .iter()
        .map(|v| CsvVerdictRow {
            m: report.m,
            weight: v.weight,
            status: v.status.as_str(),
            a1: v.a1,
            a2: v.simple.map(|w| w.a2),
            delta: v.simple.map(|w| w.delta_z.to_string()),
            witness_prime: v.split.map(|w| w.prime),
        })
        .collect()
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn render_weight_report(report: &WeightReport, format: Format) -> Result<String> {
    let iv = report.intervals;
    match format {
        Format::Json => to_json_line(&JsonReport {
            m: report.m,
            i: [iv.i_lo, iv.i_hi],
            j: [iv.j_lo, iv.j_hi],
            provenance: report.provenance,
            outside_j: report.occurring_outside_j(),
            verdicts: report
                .verdicts
                .iter()
                .map(|v| JsonVerdict {
                    weight: v.weight,
                    a1: v.a1,
                    status: v.status,
                    split: v.split,
                    simple: v.simple.map(|w| JsonMn {
                        a2: w.a2,
                        delta_z: w.delta_z.to_string(),
                        delta_2adic: w.delta_2adic.to_string(),
                    }),
                })
                .collect(),
            mismatches: &report.mismatches,
        }),
        Format::Csv => to_csv(&csv_rows(report)),
        Format::Markdown => {
            let mut s = String::new();
            writeln!(
                s,
                "q = 2^{}, I = [{}, {}], J = [{}, {}]",
                report.m, iv.i_lo, iv.i_hi, iv.j_lo, iv.j_hi
            )
            .ok();
            s.push('\n');
            s.push_str("| weight | a1 | status | a2 | delta | witness prime |\n");
            s.push_str("|---|---|---|---|---|---|\n");
            for r in csv_rows(report) {
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.weight,
                    r.a1,
                    r.status,
                    opt(r.a2),
                    r.delta.unwrap_or_default(),
                    opt(r.witness_prime)
                )
                .ok();
            }
            if !report.mismatches.is_empty() {
                s.push('\n');
                for x in &report.mismatches {
                    writeln!(
                        s,
                        "mismatch: weight {} predicted={} observed={}",
                        x.weight, x.predicted, x.observed
                    )
                    .ok();
                }
            }
            Ok(s)
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn extras_text(extras: &[i64]) -> String {
    if extras.is_empty() {
        "none".to_string()
    } else {
        extras
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Serialize)]
struct CsvTableRow {
    m: u32,
    i_lo: i64,
    i_hi: i64,
    j_lo: i64,
    j_hi: i64,
    extras: String,
}

fn markdown_block(rows: &[&TableRow]) -> String {
    let mut s = String::new();
    let cells = |f: &dyn Fn(&TableRow) -> String| {
        rows.iter()
            .map(|r| format!(" {} |", f(r)))
            .collect::<String>()
    };
    writeln!(s, "| q |{}", cells(&|r| format!("2^{}", r.m))).ok();
    writeln!(s, "|---|{}", "---|".repeat(rows.len())).ok();
    writeln!(s, "| I |{}", cells(&|r| format!("[{},{}]", r.i[0], r.i[1]))).ok();
    writeln!(s, "| J |{}", cells(&|r| format!("[{},{}]", r.j[0], r.j[1]))).ok();
    writeln!(
        s,
        "| weights in I\\J |{}",
        cells(&|r| extras_text(&r.extras))
    )
    .ok();
    s
}

/// Even `m` and odd `m` as two transposed tables, one column per `q`.
pub fn render_tables(rows: &[TableRow], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json_line(&rows),
        Format::Csv => to_csv(
            &rows
                .iter()
                .map(|r| CsvTableRow {
                    m: r.m,
                    i_lo: r.i[0],
                    i_hi: r.i[1],
                    j_lo: r.j[0],
                    j_hi: r.j[1],
                    extras: r
                        .extras
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Markdown => {
            let even: Vec<&TableRow> = rows.iter().filter(|r| r.m % 2 == 0).collect();
            let odd: Vec<&TableRow> = rows.iter().filter(|r| r.m % 2 == 1).collect();
            let mut s = markdown_block(&even);
            if !odd.is_empty() {
                s.push('\n');
                s.push_str(&markdown_block(&odd));
            }
            Ok(s)
        }
    }
}

/// Human-readable differences between expected and computed rows.
pub fn table_diff(expected: &[TableRow], actual: &[TableRow]) -> Vec<String> {
    let mut out = Vec::new();
    for e in expected {
        match actual.iter().find(|a| a.m == e.m) {
            None => out.push(format!("m={}: missing row", e.m)),
            Some(a) if a != e => out.push(format!(
                "m={}: expected I={:?} J={:?} extras={}, got I={:?} J={:?} extras={}",
                e.m,
                e.i,
                e.j,
                extras_text(&e.extras),
                a.i,
                a.j,
                extras_text(&a.extras)
            )),
            Some(_) => {}
        }
    }
    for a in actual {
        if !expected.iter().any(|e| e.m == a.m) {
            out.push(format!("m={}: unexpected row", a.m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{expected_table_rows, predict_weight_set};

    #[test]
    fn markdown_tables_layout() {
        let s = render_tables(&expected_table_rows(), Format::Markdown).unwrap();
        assert!(s.contains("| q | 2^6 | 2^8 | 2^10 | 2^12 |"));
        assert!(s.contains("| weights in I\\J | none | none | 452 | 1924 |"));
        assert!(
            s.contains("| weights in I\\J | 46,82,84 | 216,218,294,296 | 938,942,944,1104,1106 |")
        );
    }

    #[test]
    fn csv_report_columns() {
        let r = predict_weight_set(10).unwrap();
        let s = render_weight_report(&r, Format::Csv).unwrap();
        let mut lines = s.lines();
        assert_eq!(
            lines.next().unwrap(),
            "m,weight,status,a1,a2,delta,witness_prime"
        );
        assert!(s
            .lines()
            .any(|l| l.starts_with("10,452,split,119,") && l.ends_with(",3")));
        assert_eq!(s.lines().count(), 1 + r.verdicts.len());
    }

    #[test]
    fn diff_detects_change() {
        let good = expected_table_rows();
        let mut bad = good.clone();
        bad[3].extras.pop();
        assert!(table_diff(&good, &good).is_empty());
        assert_eq!(table_diff(&good, &bad).len(), 1);
    }

    #[test]
    fn format_parse() {
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
