//! Output rows. Every format is rendered from the certificate's JSON value,
//! which is also what the cache stores.

use std::fmt::Write as _;

use anyhow::{Context, Result};
use num_bigint::BigInt;
use serde_json::Value;

pub const CSV_COLUMNS: [&str; 12] = [
    "fraction", "cf", "winding", "tb", "rot", "sl", "grading", "k0", "delta_k0", "rank", "bound", "path",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cf_text(v: &Value) -> String {
    match v {
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", parts.join(" "))
        }
        _ => String::new(),
    }
}

pub fn csv_fields(cert: &Value) -> Vec<String> {
    vec![
        scalar(&cert["input"]),
        cf_text(&cert["cf"]),
        scalar(&cert["winding"]),
        scalar(&cert["tb"]),
        scalar(&cert["rot"]),
        scalar(&cert["sl"]),
        scalar(&cert["alexander_grading"]),
        scalar(&cert["k0"]),
        scalar(&cert["delta_k0"]),
        scalar(&cert["rank_r"]),
        scalar(&cert["bound_n"]),
        scalar(&cert["path"]),
    ]
}

pub fn text_line(cert: &Value) -> String {
    let mut s = format!("{} {}", scalar(&cert["input"]), cf_text(&cert["cf"]));
    let fields = [
        ("w", "winding"),
        ("tb", "tb"),
        ("rot", "rot"),
        ("sl", "sl"),
        ("A", "alexander_grading"),
        ("K0", "k0"),
        ("r", "rank_r"),
        ("N", "bound_n"),
    ];
    for (label, key) in fields {
        if !cert[key].is_null() {
            let _ = write!(s, " {label}={}", scalar(&cert[key]));
        }
    }
    let _ = write!(s, " {} {}", scalar(&cert["path"]), scalar(&cert["verdict"]));
    s
}

/// Renders a batch of certificates. CSV gets a header even when empty.
pub fn render(certs: &[Value], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = String::new();
            for c in certs {
                out.push_str(&serde_json::to_string(c)?);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS)?;
            for c in certs {
                w.write_record(csv_fields(c))?;
            }
            let bytes = w.into_inner().context("flushing csv")?;
            Ok(String::from_utf8(bytes)?)
        }
        Format::Text => Ok(certs.iter().map(|c| text_line(c) + "\n").collect()),
    }
}

/// `bound_n` as an integer, if present.
pub fn bound_of(cert: &Value) -> Option<BigInt> {
    match &cert["bound_n"] {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}

pub fn verdict_of(cert: &Value) -> &str {
    cert["verdict"].as_str().unwrap_or("")
}
