use std::fmt::Write as _;

use num_traits::ToPrimitive;
use schurweyl::young::rational_to_f64;
use schurweyl::Rational;
use serde_json::{json, Value};

pub const SCHEMA: &str = "1";

/// Process exit status of a command.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailure = 1,
    UsageError = 2,
}

/// Rendered output of one command in both formats.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, mut body: Value, text: String) -> Self {
        let mut json = json!({ "schema": SCHEMA, "command": command });
        if let Value::Object(fields) = &mut body {
            json.as_object_mut()
                .expect("object literal")
                .extend(std::mem::take(fields));
        }
        Self {
            json,
            text,
            status: Status::Success,
        }
    }

    pub fn render(&self, format: crate::args::Format) -> String {
        match format {
            crate::args::Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
                s.push('\n');
                s
            }
            crate::args::Format::Text => self.text.clone(),
        }
    }
}

pub fn rational(r: &Rational) -> Value {
    json!({ "exact": r.to_string(), "value": rational_to_f64(r) })
}

/// Integers that fit in `u64` become JSON numbers, larger ones strings.
pub fn big(x: &num_bigint::BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}
