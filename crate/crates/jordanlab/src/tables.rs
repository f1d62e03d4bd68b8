//! Table and report rendering in machine and human formats.
//!
//! Every number printed anywhere is an exact decimal integer; values that
//! can exceed 64 bits are emitted as decimal strings in JSON. Rendering is
//! a pure function of its inputs, so repeated runs over equal data produce
//! byte-identical output.

use std::collections::BTreeMap;

use clap::ValueEnum;
use jordan_core::char_ring::CharClass;
use jordan_core::closed;
use jordan_core::conjecture::{tables_to_json, ConjectureTables};
use jordan_core::dims::DimTable;
use jordan_core::partitions::{closed_dim_m, closed_dim_md, Partition, VirtualSymClass};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::{ReportSummary, VerificationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

/// Which basis a character table is printed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharBasisArg {
    Schur,
    Monomial,
}

/// Formats a coefficient map over diagrams, e.g. `[2] + 2[1,1]`.
pub fn format_diagram_map(map: &BTreeMap<Partition, BigInt>) -> String {
    if map.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (p, v) in map {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if *v != BigInt::from(1) {
            out.push_str(&v.to_string());
        }
        out.push('[');
        out.push_str(&p.to_string());
        out.push(']');
    }
    out
}

/// Formats a virtual symmetric-group class in the same diagram notation.
pub fn format_class(c: &VirtualSymClass) -> String {
    let map: BTreeMap<Partition, BigInt> =
        c.terms().map(|(p, v)| (p.clone(), v.clone())).collect();
    format_diagram_map(&map)
}

/// Formats a comma-joined sequence, e.g. `1, 3, 9, 26`.
pub fn format_seq<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> String {
    xs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn md_row(cells: &[String]) -> String {
    format!("| {} |", cells.join(" | "))
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&md_row(
        &header.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    ));
    out.push('\n');
    out.push_str(&md_row(
        &header.iter().map(|_| "---".to_string()).collect::<Vec<_>>(),
    ));
    out.push('\n');
    for row in rows {
        out.push_str(&md_row(row));
        out.push('\n');
    }
    out
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Renders a solved dimension table. The weakest form solves only the
/// `a`-sequence; its `b`-column is printed as `-`.
pub fn render_dim_table(tbl: &DimTable, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            let b: Value = if tbl.b.is_empty() {
                Value::Null
            } else {
                json!(tbl.b.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            };
            let v = json!({
                "D": tbl.d,
                "N": tbl.n_max,
                "a": tbl.a.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "b": b,
            });
            format!("{:#}\n", v)
        }
        OutputFormat::Csv | OutputFormat::Md => {
            let rows: Vec<Vec<String>> = (1..=tbl.n_max)
                .map(|n| {
                    let b = if tbl.b.is_empty() {
                        "-".to_string()
                    } else {
                        tbl.b_at(n).to_string()
                    };
                    vec![n.to_string(), tbl.a_at(n).to_string(), b]
                })
                .collect();
            let header = ["n", "a_n", "b_n"];
            match fmt {
                OutputFormat::Csv => csv_table(&header, &rows),
                _ => md_table(&header, &rows),
            }
        }
    }
}

fn degree_map(
    class: &CharClass,
    n: u64,
    basis: CharBasisArg,
) -> Result<BTreeMap<Partition, BigInt>, jordan_core::char_ring::CharError> {
    // Solved tables are free of the string variable, so the t-exponent in
    // every key is zero and can be dropped.
    let part = class.degree_part(n);
    Ok(match basis {
        CharBasisArg::Schur => part
            .schur_decompose()?
            .into_iter()
            .map(|((p, _), v)| (p, v))
            .collect(),
        CharBasisArg::Monomial => part
            .terms()
            .map(|((p, _), v)| (p.clone(), v.clone()))
            .collect(),
    })
}

/// Renders solved character tables degree by degree, with the dimension of
/// each side as a check column.
pub fn render_char_tables(
    tables: &ConjectureTables,
    basis: CharBasisArg,
    fmt: OutputFormat,
) -> anyhow::Result<String> {
    if fmt == OutputFormat::Json && basis == CharBasisArg::Schur {
        return Ok(format!("{:#}\n", tables_to_json(tables)?));
    }
    let (da, db) = tables.specialize()?;
    let mut rows_md: Vec<Vec<String>> = Vec::new();
    let mut rows_csv: Vec<Vec<String>> = Vec::new();
    let mut degrees_json = Vec::new();
    for n in 1..=tables.n_max() as u64 {
        let a = degree_map(tables.a_class(), n, basis)?;
        let b = degree_map(tables.b_class(), n, basis)?;
        rows_md.push(vec![
            n.to_string(),
            format_diagram_map(&a),
            format_diagram_map(&b),
            da.coeff(n as usize).to_string(),
            db.coeff(n as usize).to_string(),
        ]);
        for (side, map) in [("A", &a), ("B", &b)] {
            for (p, v) in map {
                rows_csv.push(vec![
                    n.to_string(),
                    side.to_string(),
                    p.to_string(),
                    v.to_string(),
                ]);
            }
        }
        let render_side = |map: &BTreeMap<Partition, BigInt>| {
            let mut obj = serde_json::Map::new();
            for (p, v) in map {
                obj.insert(p.to_string(), json!(v.to_string()));
            }
            Value::Object(obj)
        };
        degrees_json.push(json!({
            "degree": n,
            "A": render_side(&a),
            "B": render_side(&b),
        }));
    }
    Ok(match fmt {
        OutputFormat::Json => {
            let v = json!({
                "D": tables.d(),
                "N": tables.n_max(),
                "basis": "monomial",
                "degrees": degrees_json,
            });
            format!("{:#}\n", v)
        }
        OutputFormat::Csv => csv_table(&["n", "table", "diagram", "coeff"], &rows_csv),
        OutputFormat::Md => md_table(&["n", "A", "B", "dim A", "dim B"], &rows_md),
    })
}

/// Renders the closed counting formulas: bracelets `s_n`, oriented pairs
/// `r_n`, necklace combination `c_n`, and where the formulas exist, the
/// tetrad cokernel and inner-derivation gap dimensions.
pub fn render_closed_table(d: u32, n_max: usize, fmt: OutputFormat) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows = Vec::new();
    for n in 1..=n_max {
        let nn = n as u32;
        let s = closed::s(nn, d);
        let r = closed::r(nn, d);
        let c = closed::c(nn, d);
        let m = closed_dim_m(nn, d).ok();
        let md = closed_dim_md(nn, d).ok();
        let opt = |v: &Option<BigInt>| v.as_ref().map_or("-".to_string(), |x| x.to_string());
        rows.push(vec![
            n.to_string(),
            s.to_string(),
            r.to_string(),
            c.to_string(),
            opt(&m),
            opt(&md),
        ]);
        let opt_json = |v: &Option<BigInt>| -> Value {
            v.as_ref().map_or(Value::Null, |x| json!(x.to_string()))
        };
        json_rows.push(json!({
            "n": n,
            "s": s.to_string(),
            "r": r.to_string(),
            "c": c.to_string(),
            "dim_m": opt_json(&m),
            "dim_md": opt_json(&md),
        }));
    }
    let header = ["n", "s_n", "r_n", "c_n", "dim M_n", "dim MD_n"];
    match fmt {
        OutputFormat::Json => format!("{:#}\n", json!({ "D": d, "rows": json_rows })),
        OutputFormat::Csv => csv_table(&header, &rows),
        OutputFormat::Md => md_table(&header, &rows),
    }
}

/// One row of computed span ranks at a fixed degree.
#[derive(Debug, Clone)]
pub struct OracleRow {
    pub n: usize,
    pub words: usize,
    pub cj: usize,
    pub sj: usize,
    pub inner_cj: usize,
    pub inner_sj: usize,
}

pub fn render_oracle_table(d: u32, rows: &[OracleRow], fmt: OutputFormat) -> String {
    let header = ["n", "words", "dim CJ", "dim SJ", "dim inner CJ", "dim inner SJ"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.words.to_string(),
                r.cj.to_string(),
                r.sj.to_string(),
                r.inner_cj.to_string(),
                r.inner_sj.to_string(),
            ]
        })
        .collect();
    match fmt {
        OutputFormat::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "words": r.words,
                        "cj": r.cj,
                        "sj": r.sj,
                        "inner_cj": r.inner_cj,
                        "inner_sj": r.inner_sj,
                    })
                })
                .collect();
            format!("{:#}\n", json!({ "D": d, "rows": json_rows }))
        }
        OutputFormat::Csv => csv_table(&header, &cells),
        OutputFormat::Md => md_table(&header, &cells),
    }
}

/// Renders a verification report with a trailing summary.
pub fn render_report(results: &[VerificationResult], fmt: OutputFormat) -> String {
    let summary = ReportSummary::of(results);
    let header = ["suite", "case", "expected", "computed", "provenance", "status"];
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            vec![
                r.suite.to_string(),
                r.case.clone(),
                r.expected.clone(),
                r.computed.clone(),
                r.provenance.to_string(),
                r.status.to_string(),
            ]
        })
        .collect();
    match fmt {
        OutputFormat::Json => {
            let json_rows: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "case": r.case,
                        "expected": r.expected,
                        "computed": r.computed,
                        "provenance": r.provenance.to_string(),
                        "status": r.status.to_string(),
                    })
                })
                .collect();
            let v = json!({
                "results": json_rows,
                "summary": {
                    "pass": summary.pass,
                    "fail": summary.fail,
                    "report_only": summary.report_only,
                },
            });
            format!("{:#}\n", v)
        }
        OutputFormat::Csv => csv_table(&header, &rows),
        OutputFormat::Md => {
            let mut out = md_table(&header, &rows);
            out.push('\n');
            out.push_str(&summary.to_string());
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Provenance;
    use jordan_core::dims::solve_weak;

    #[test]
    fn diagram_map_formatting() {
        let mut m = BTreeMap::new();
        assert_eq!(format_diagram_map(&m), "0");
        m.insert(Partition::of(&[2]), BigInt::from(1));
        m.insert(Partition::of(&[1, 1]), BigInt::from(2));
        assert_eq!(format_diagram_map(&m), "2[1,1] + [2]");
    }

    #[test]
    fn csv_escaping_quotes_commas() {
        assert_eq!(csv_escape("2,1"), "\"2,1\"");
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a\"b"), "\"a\"\"b\"");
    }

    #[test]
    fn dim_table_renders_every_format() {
        let tbl = solve_weak(2, 4).unwrap();
        let md = render_dim_table(&tbl, OutputFormat::Md);
        assert!(md.contains("| 4 | 10 | "));
        let csv = render_dim_table(&tbl, OutputFormat::Csv);
        assert!(csv.lines().count() == 5);
        assert!(csv.contains("4,10,"));
        let v: Value = serde_json::from_str(&render_dim_table(&tbl, OutputFormat::Json)).unwrap();
        assert_eq!(v["a"][3], json!("10"));
    }

    #[test]
    fn report_renders_and_summarizes() {
        let rs = vec![VerificationResult::check(
            "demo",
            "case with, comma",
            Provenance::Trivial,
            "1",
            "1",
        )];
        let md = render_report(&rs, OutputFormat::Md);
        assert!(md.contains("passed 1, failed 0, report-only 0"));
        let csv = render_report(&rs, OutputFormat::Csv);
        assert!(csv.contains("\"case with, comma\""));
        let v: Value = serde_json::from_str(&render_report(&rs, OutputFormat::Json)).unwrap();
        assert_eq!(v["summary"]["pass"], json!(1));
    }
}
