//! Rendering of command results as JSON, TSV or plain text.

use std::fmt::Write as _;

use clap::ValueEnum;
use liedual_core::charalg::group_dimension;
use liedual_core::report::Check;
use liedual_core::FormalCharacter;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

/// Everything a command prints. `rows` feeds the TSV form, `lines` the
/// pretty form; JSON uses `inputs`, `result` and `checks`.
pub struct Output {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub lines: Vec<String>,
}

impl Output {
    pub fn new(command: &str, inputs: Value) -> Self {
        Output {
            command: command.to_string(),
            inputs,
            result: Value::Null,
            checks: Vec::new(),
            header: Vec::new(),
            rows: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| !c.passed())
    }

    pub fn summary(&self) -> Option<String> {
        if self.checks.is_empty() {
            return None;
        }
        let pass = self.checks.iter().filter(|c| c.passed()).count();
        let total = self.checks.len();
        Some(if pass == total {
            format!("PASS {pass}/{total}")
        } else {
            format!("FAIL {}/{total}", total - pass)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "status": c.status.to_string(),
                "expected": c.expected,
                "actual": c.actual,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Json => {
                s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
            }
            Format::Tsv => {
                if !self.header.is_empty() {
                    writeln!(s, "{}", self.header.join("\t")).unwrap();
                }
                for r in &self.rows {
                    writeln!(s, "{}", r.join("\t")).unwrap();
                }
                for c in &self.checks {
                    writeln!(s, "{}\t{}\t{}\t{}", c.status, c.name, c.expected, c.actual).unwrap();
                }
                if let Some(sum) = self.summary() {
                    writeln!(s, "{sum}").unwrap();
                }
            }
            Format::Pretty => {
                for l in &self.lines {
                    writeln!(s, "{l}").unwrap();
                }
                for c in self.checks.iter().filter(|c| !c.passed()) {
                    writeln!(
                        s,
                        "FAIL {}: expected {}, got {}",
                        c.name, c.expected, c.actual
                    )
                    .unwrap();
                }
                if let Some(sum) = self.summary() {
                    writeln!(s, "{sum}").unwrap();
                }
            }
        }
        s
    }
}

fn dimension_value(c: &FormalCharacter, w: &liedual_core::Weight) -> Value {
    let d = group_dimension(&c.group, w).expect("stored weights are valid");
    match u64::try_from(&d) {
        Ok(v) => json!(v),
        Err(_) => json!(d.to_string()),
    }
}

/// Terms in sorted weight order.
pub fn character_json(c: &FormalCharacter) -> Value {
    let terms: Vec<Value> = c
        .terms
        .iter()
        .map(|(w, m)| {
            json!({
                "weight": w.to_string(),
                "multiplicity": m,
                "dimension": dimension_value(c, w),
            })
        })
        .collect();
    json!({
        "group": c.group.to_string(),
        "terms": terms,
        "total_dimension": c.total_dimension().to_string(),
    })
}

pub fn character_rows(c: &FormalCharacter, prefix: &[String]) -> Vec<Vec<String>> {
    c.terms
        .iter()
        .map(|(w, m)| {
            let mut r = prefix.to_vec();
            r.push(w.to_string());
            r.push(m.to_string());
            r.push(group_dimension(&c.group, w).expect("valid").to_string());
            r
        })
        .collect()
}
