use serde::Serialize;
use serde_json::Value;
use su21_core::report::CheckResult;
use su21_oracle::checks::NumericCheck;

use crate::args::Format;

/// One line of a report, exact or numeric.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rel_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl From<CheckResult> for Row {
    fn from(r: CheckResult) -> Self {
        Self { check: r.check, params: r.params, pass: r.pass, max_rel_err: None, tol: None, detail: r.detail }
    }
}

impl From<NumericCheck> for Row {
    fn from(r: NumericCheck) -> Self {
        Self {
            check: r.check,
            params: r.params,
            pass: r.pass,
            max_rel_err: Some(r.max_rel_err),
            tol: Some(r.tol),
            detail: String::new(),
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    pass: bool,
    results: &'a [Row],
    #[serde(skip_serializing_if = "Value::is_null")]
    extra: Value,
}

/// Prints the rows and returns whether all passed.
pub fn emit(command: &str, rows: &[Row], extra: Value, format: Format) -> bool {
    let pass = rows.iter().all(|r| r.pass);
    match format {
        Format::Structured => {
            let report = Report { command, pass, results: rows, extra };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        Format::Text => {
            for r in rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let mut line = format!("{status}  {:<36} {}", r.check, r.params);
                if let (Some(e), Some(t)) = (r.max_rel_err, r.tol) {
                    line.push_str(&format!("  max_rel_err={e:.3e} tol={t:.0e}"));
                }
                if !r.detail.is_empty() && !r.pass {
                    line.push_str(&format!("  {}", r.detail));
                }
                println!("{line}");
            }
            if !extra.is_null() {
                println!("{extra}");
            }
            let failed = rows.iter().filter(|r| !r.pass).count();
            println!("{command}: {} checks, {failed} failed", rows.len());
        }
    }
    pass
}
