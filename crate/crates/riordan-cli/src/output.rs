//! Rendering for matrices, series, and identity reports. All numeric output
//! is exact-rational text; csv and jsonl never contain floats.

use riordan::identities::{IdentityCase, IdentityReport};
use riordan::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

/// Renders a lower-triangular matrix in the selected format. The csv header
/// is fixed as `n,k,value`.
pub fn matrix(rows: &[Vec<Rat>], format: Format) -> String {
    match format {
        Format::Table => {
            let cols = rows.last().map_or(0, |r| r.len());
            let mut widths = vec![0usize; cols];
            let rendered: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(Rat::to_string).collect())
                .collect();
            for row in &rendered {
                for (k, cell) in row.iter().enumerate() {
                    widths[k] = widths[k].max(cell.len());
                }
            }
            let mut out = String::new();
            for row in &rendered {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(k, cell)| format!("{cell:>width$}", width = widths[k]))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (n, row) in rows.iter().enumerate() {
                for (k, cell) in row.iter().enumerate() {
                    out.push_str(&format!("{n},{k},{cell}\n"));
                }
            }
            out
        }
        Format::Jsonl => {
            let mut out = String::new();
            for (n, row) in rows.iter().enumerate() {
                for (k, cell) in row.iter().enumerate() {
                    let record = serde_json::json!({
                        "n": n,
                        "k": k,
                        "value": cell.to_string(),
                    });
                    out.push_str(&record.to_string());
                    out.push('\n');
                }
            }
            out
        }
    }
}

fn case_json(suite: &str, case: &IdentityCase) -> serde_json::Value {
    let params: serde_json::Map<String, serde_json::Value> = case
        .params
        .iter()
        .map(|(k, v)| ((*k).to_owned(), serde_json::Value::String(v.clone())))
        .collect();
    serde_json::json!({
        "suite": suite,
        "name": case.name,
        "params": params,
        "lhs": case.lhs.to_string(),
        "rhs": case.rhs.to_string(),
        "pass": case.pass,
    })
}

/// Renders identity reports; `verbose` additionally emits one record per
/// evaluated grid point (jsonl) or per failing case (table).
pub fn reports(reports: &[IdentityReport], format: Format, verbose: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            for rep in reports {
                let status = if rep.all_passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status}  {name}: {total} cases, {passed} passed, {failed} failed, {skipped} skipped  [{grid}]\n",
                    name = rep.name,
                    total = rep.total,
                    passed = rep.passed,
                    failed = rep.failed,
                    skipped = rep.skipped,
                    grid = rep.grid,
                ));
                if let Some(fail) = &rep.first_failure {
                    out.push_str(&format!(
                        "      first counterexample: {} {} lhs={} rhs={}\n",
                        fail.name,
                        fail.params_string(),
                        fail.lhs,
                        fail.rhs
                    ));
                }
                if verbose {
                    for case in &rep.cases {
                        out.push_str(&format!(
                            "      {} {} lhs={} rhs={} {}\n",
                            case.name,
                            case.params_string(),
                            case.lhs,
                            case.rhs,
                            if case.pass { "ok" } else { "FAIL" }
                        ));
                    }
                }
            }
        }
        Format::Csv => {
            out.push_str("suite,total,passed,failed,skipped,pass\n");
            for rep in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    rep.name,
                    rep.total,
                    rep.passed,
                    rep.failed,
                    rep.skipped,
                    rep.all_passed()
                ));
            }
        }
        Format::Jsonl => {
            for rep in reports {
                if verbose {
                    for case in &rep.cases {
                        out.push_str(&case_json(&rep.name, case).to_string());
                        out.push('\n');
                    }
                } else {
                    let record = serde_json::json!({
                        "suite": rep.name,
                        "grid": rep.grid,
                        "total": rep.total,
                        "passed": rep.passed,
                        "failed": rep.failed,
                        "skipped": rep.skipped,
                        "pass": rep.all_passed(),
                        "first_failure": rep.first_failure.as_ref().map(|c| case_json(&rep.name, c)),
                    });
                    out.push_str(&record.to_string());
                    out.push('\n');
                }
            }
        }
    }
    out
}
