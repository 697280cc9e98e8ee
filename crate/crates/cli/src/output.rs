//! Rendering of command reports in human, JSON and CSV form.
//!
//! JSON records (schema 1) always carry
//! `{schema, command, inputs, result, exact, elapsed_ms, version}`.
//! CSV output is a header row followed by one row per result line.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Found, exact, or verified.
    Ok = 0,
    /// A stated result failed on a concrete instance.
    Finding = 1,
    Usage = 2,
    /// The predicate asked about is false.
    False = 10,
    /// The budget ran out first.
    Partial = 11,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub exact: bool,
    pub elapsed_ms: u64,
    pub human: String,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub status: Status,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "exact": self.exact,
            "elapsed_ms": self.elapsed_ms,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> anyhow::Result<()> {
        match format {
            Format::Human => {
                write!(out, "{}", self.human)?;
                if !self.human.ends_with('\n') {
                    writeln!(out)?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.csv_header)?;
                for row in &self.csv_rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
