use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A flat table for CSV output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// The result of one job: pass/fail, a JSON body and its tabular form.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub body: Value,
    pub table: Table,
}

#[derive(Serialize)]
pub struct Header<'a> {
    pub command: &'a str,
    pub group: &'a str,
    pub tau: String,
    pub truncation: usize,
    pub seed: u64,
}

pub fn render(header: &Header<'_>, outcome: &Outcome, format: Format) -> std::io::Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(header).expect("serializable");
            v["status"] = json!(if outcome.passed { "pass" } else { "fail" });
            v["result"] = outcome.body.clone();
            let mut out = serde_json::to_vec_pretty(&v).expect("serializable");
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&outcome.table.header)?;
            for row in &outcome.table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
            w.into_inner().map_err(|e| e.into_error())
        }
    }
}

pub fn emit(bytes: &[u8], out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => std::io::stdout().write_all(bytes),
    }
}
