use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use dunkl::Error;

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    Usage(String),
    Precondition(String),
    Verification(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Precondition(_) | Failure::Io(_) => 3,
            Failure::Verification(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

/// A finished command: the JSON document, its TSV rendering, and an optional
/// verification failure to report after the output is written.
pub struct Output {
    pub json: Value,
    pub tsv: String,
    pub failure: Option<Failure>,
}

impl Output {
    /// Wraps a result with the schema version, the command and its parameters.
    pub fn new(command: &str, params: Value, result: Value, tsv: String) -> Self {
        let json = json!({
            "schema": SCHEMA,
            "command": command,
            "params": params,
            "result": result,
        });
        Output { json, tsv, failure: None }
    }
}

pub fn emit(out: &Output, format: Format, path: Option<&Path>) -> Result<(), Failure> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => out.tsv.clone(),
    };
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}"))),
    }
}

/// Tab-joined rows with a trailing newline.
pub fn tsv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

/// A JSON scalar as TSV text: strings unquoted, numbers as rendered.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(parts) if parts.len() == 2 => format!("{}{}{}i", cell(&parts[0]), sign_prefix(&parts[1]), cell(&parts[1])),
        other => other.to_string(),
    }
}

fn sign_prefix(v: &Value) -> &'static str {
    if v.to_string().starts_with('-') {
        ""
    } else {
        "+"
    }
}
