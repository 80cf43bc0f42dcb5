//! Output records and their markdown / JSON / CSV renderings.
//!
//! Every computation is exact; rationals serialize to JSON as
//! `{"num": "...", "den": "..."}` strings so nothing is lost. Rendering is
//! deterministic: identical inputs produce byte-identical output.

use clap::ValueEnum;
use ehrmagic_core::poly::Rat;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Json,
    Csv,
}

pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// One command's result: the machine-readable record plus the human layout.
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub lines: Vec<(String, String)>,
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            result: Value::Null,
            warnings: Vec::new(),
            lines: Vec::new(),
            table: None,
        }
    }

    pub fn line(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let record = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "result": self.result,
                    "warnings": self.warnings,
                    "exact": true,
                });
                let mut s = serde_json::to_string_pretty(&record).expect("serializable record");
                s.push('\n');
                s
            }
            Format::Markdown => {
                let mut out = String::new();
                for (k, v) in &self.lines {
                    out.push_str(&format!("{k}: {v}\n"));
                }
                if let Some(t) = &self.table {
                    if !self.lines.is_empty() {
                        out.push('\n');
                    }
                    out.push_str(&format!("| {} |\n", t.headers.join(" | ")));
                    out.push_str(&format!(
                        "|{}\n",
                        t.headers.iter().map(|_| " --- |").collect::<String>()
                    ));
                    for row in &t.rows {
                        out.push_str(&format!("| {} |\n", row.join(" | ")));
                    }
                }
                for w in &self.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                out
            }
            Format::Csv => {
                let mut out = String::new();
                match &self.table {
                    Some(t) => {
                        out.push_str(&csv_row(&t.headers));
                        for row in &t.rows {
                            out.push_str(&csv_row(row));
                        }
                    }
                    None => {
                        out.push_str("key,value\n");
                        for (k, v) in &self.lines {
                            out.push_str(&csv_row(&[k.clone(), v.clone()]));
                        }
                    }
                }
                out
            }
        }
    }
}

fn csv_row<S: AsRef<str>>(cells: &[S]) -> String {
    let escaped: Vec<String> = cells
        .iter()
        .map(|c| {
            let c = c.as_ref();
            if c.contains(',') || c.contains('"') || c.contains('\n') {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.to_string()
            }
        })
        .collect();
    format!("{}\n", escaped.join(","))
}

/// A rational as lossless JSON.
pub fn json_rat(r: &Rat) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn json_bigint(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

/// Decimal rendering for the `--approx` column; explicitly inexact.
pub fn approx_str(r: &Rat) -> String {
    match r.to_f64() {
        Some(f) => format!("{f:.6}"),
        None => "overflow".to_string(),
    }
}
