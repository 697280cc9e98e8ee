//! Append-only results cache: one JSON object per line.
//!
//! Lookups return the most recent exact record for `(kind, n, k)` written by
//! the running tool version; older versions and partial results are ignored.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{ExtremalKind, ExtremalResult};
use crate::zmod::Seq;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub kind: ExtremalKind,
    pub n: u32,
    pub k: u32,
    pub value: u32,
    /// Witness in multiplicity text form, e.g. `n=5;m=4,4,0,0,0`.
    pub witness: Option<String>,
    pub exact: bool,
    pub sequences_examined: u64,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

impl CacheRecord {
    pub fn from_result(r: &ExtremalResult) -> Self {
        CacheRecord {
            kind: r.kind,
            n: r.n,
            k: r.k,
            value: r.value,
            witness: r.witness.as_ref().map(Seq::to_mult_text),
            exact: r.exact,
            sequences_examined: r.sequences_examined,
            elapsed_ms: r.elapsed_ms,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_result(&self) -> Result<ExtremalResult> {
        let witness = match &self.witness {
            Some(text) => Some(Seq::parse(text, Some(self.n))?),
            None => None,
        };
        Ok(ExtremalResult {
            kind: self.kind,
            n: self.n,
            k: self.k,
            value: self.value,
            witness,
            exact: self.exact,
            sequences_examined: self.sequences_examined,
            elapsed_ms: self.elapsed_ms,
        })
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Cache(format!("bad record: {e}")))
    }
}

#[derive(Clone, Debug)]
pub struct ResultsCache {
    path: PathBuf,
}

impl ResultsCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ResultsCache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All records in file order; a missing file is an empty cache.
    pub fn load(&self) -> Result<Vec<CacheRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(io_error(&self.path, e)),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| io_error(&self.path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = CacheRecord::from_line(&line)
                .map_err(|e| Error::Cache(format!("{}:{}: {e}", self.path.display(), i + 1)))?;
            out.push(rec);
        }
        Ok(out)
    }

    pub fn lookup(&self, kind: ExtremalKind, n: u32, k: u32) -> Result<Option<CacheRecord>> {
        Ok(self.load()?.into_iter().rev().find(|r| {
            r.kind == kind && r.n == n && r.k == k && r.exact && r.tool_version == TOOL_VERSION
        }))
    }

    pub fn append(&self, record: &CacheRecord) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| io_error(&self.path, e))?;
        writeln!(file, "{}", record.to_line()).map_err(|e| io_error(&self.path, e))
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}
