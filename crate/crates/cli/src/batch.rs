//! Batch classification of a directory of documents or a manifest.
//!
//! A manifest is a text file with one entry per line: a path to a tensor
//! document (relative to the manifest's directory) or `family <name> [params…]`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::document::{FieldArg, TensorSource};
use crate::error::CliError;
use crate::report::{classify, ClassifyOptions, ReportDocument};

#[derive(Clone, Debug)]
pub struct BatchEntry {
    pub label: String,
    pub source: TensorSource,
}

pub fn read_entries(input: &Path) -> Result<Vec<BatchEntry>, CliError> {
    let io = |source| CliError::Io {
        path: input.to_path_buf(),
        source,
    };
    if input.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(input)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        return Ok(files
            .into_iter()
            .map(|p| BatchEntry {
                label: p.file_name().unwrap().to_string_lossy().into_owned(),
                source: TensorSource::File(p),
            })
            .collect());
    }
    let text = std::fs::read_to_string(input).map_err(io)?;
    let base = input.parent().unwrap_or(Path::new("."));
    let mut entries = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let words: Vec<String> = line.split_whitespace().map(String::from).collect();
        let source = if words[0] == "family" {
            TensorSource::family(&words[1..])?
        } else {
            TensorSource::File(base.join(line))
        };
        entries.push(BatchEntry {
            label: line.to_string(),
            source,
        });
    }
    Ok(entries)
}

#[derive(Clone, Debug, Serialize)]
pub struct SummaryRow {
    pub entry: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// `null` means infinitely many.
    pub one_dimensional: Option<usize>,
    pub two_dimensional: Option<usize>,
    pub type_i: bool,
    pub type_ii: Option<usize>,
    pub type_iii: Option<usize>,
    pub type_iv: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchSummary {
    pub entries: usize,
    pub failed: usize,
    pub rows: Vec<SummaryRow>,
}

fn count_of(kind: &str, n: usize) -> Option<usize> {
    (kind != "all" && kind != "infinite").then_some(n)
}

fn row(label: &str, result: &Result<ReportDocument, CliError>) -> SummaryRow {
    match result {
        Ok(r) => {
            let td = &r.two_dimensional;
            SummaryRow {
                entry: label.to_string(),
                status: "ok".into(),
                error: None,
                one_dimensional: r.one_dimensional.count,
                two_dimensional: td.total,
                type_i: td.type_i,
                type_ii: count_of(&td.type_ii.kind, td.type_ii.values.len()),
                type_iii: count_of(&td.type_iii.kind, td.type_iii.values.len()),
                type_iv: count_of(&td.type_iv.kind, td.type_iv.points.len()),
            }
        }
        Err(e) => SummaryRow {
            entry: label.to_string(),
            status: "failed".into(),
            error: Some(e.to_string()),
            one_dimensional: None,
            two_dimensional: None,
            type_i: false,
            type_ii: None,
            type_iii: None,
            type_iv: None,
        },
    }
}

/// Classify every entry (in parallel) and return the reports in entry order.
pub fn run(
    entries: &[BatchEntry],
    field: Option<FieldArg>,
    opts: &ClassifyOptions,
) -> (BatchSummary, Vec<Result<ReportDocument, CliError>>) {
    let results: Vec<Result<ReportDocument, CliError>> = entries
        .par_iter()
        .map(|e| {
            let (t, doc) = e.source.load(field)?;
            classify(&t, doc, opts)
        })
        .collect();
    let rows: Vec<SummaryRow> = entries.iter().zip(&results).map(|(e, r)| row(&e.label, r)).collect();
    let failed = rows.iter().filter(|r| r.status != "ok").count();
    (
        BatchSummary {
            entries: rows.len(),
            failed,
            rows,
        },
        results,
    )
}

fn cell(n: Option<usize>) -> String {
    n.map_or("inf".into(), |n| n.to_string())
}

pub fn render_text(s: &BatchSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<32} {:>6} {:>4} {:>4} {:>3} {:>3} {:>4} {:>3}", "entry", "status", "1D", "2D", "I", "II", "III", "IV");
    for r in &s.rows {
        if r.status == "ok" {
            let _ = writeln!(
                out,
                "{:<32} {:>6} {:>4} {:>4} {:>3} {:>3} {:>4} {:>3}",
                r.entry,
                r.status,
                cell(r.one_dimensional),
                cell(r.two_dimensional),
                u8::from(r.type_i),
                cell(r.type_ii),
                cell(r.type_iii),
                cell(r.type_iv)
            );
        } else {
            let _ = writeln!(out, "{:<32} {:>6}  {}", r.entry, r.status, r.error.as_deref().unwrap_or(""));
        }
    }
    let _ = writeln!(out, "{} entries, {} failed", s.entries, s.failed);
    out
}
