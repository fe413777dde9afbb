//! Rendering of evaluations, comparisons and convergence tables.

use std::io::Write;

use serde::Serialize;
use slater_core::Complex;

use crate::error::CliResult;
use crate::eval::{Evaluation, Reference};
use crate::format::fmt_sig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Output shape of `eval` and `compare`; `None` means aligned text.
pub type KvFormat = Option<Format>;

pub fn fmt_complex(z: Complex, digits: usize) -> String {
    if z.im == 0.0 {
        return fmt_sig(z.re, digits);
    }
    let im = fmt_sig(z.im, digits);
    let sign = if im.starts_with('-') { "" } else { "+" };
    if z.re == 0.0 {
        format!("{im}i")
    } else {
        format!("{}{sign}{im}i", fmt_sig(z.re, digits))
    }
}

/// |a − b| and the same relative to |b| (absolute when b = 0).
pub fn errors(value: Complex, reference: Complex) -> (f64, f64) {
    let abs = (value - reference).norm();
    let scale = reference.norm();
    (abs, if scale == 0.0 { abs } else { abs / scale })
}

/// Ordered key/value lines; keys may repeat (one `warning` per warning).
#[derive(Debug, Default)]
pub struct KvReport {
    pairs: Vec<(String, String)>,
}

impl KvReport {
    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.pairs.push((key.to_string(), value.into()));
    }

    pub fn write(&self, format: KvFormat, out: &mut dyn Write) -> CliResult<()> {
        match format {
            None => {
                let width = self.pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.pairs {
                    writeln!(out, "{k:width$}  {v}").map_err(stdout_err)?;
                }
            }
            Some(Format::Csv) => {
                let mut w = csv_writer(out);
                w.write_record(["key", "value"])?;
                for (k, v) in &self.pairs {
                    w.write_record([k, v])?;
                }
                w.flush().map_err(stdout_err)?;
            }
            Some(Format::Json) => {
                let mut obj = serde_json::Map::new();
                for (k, v) in &self.pairs {
                    let value = serde_json::Value::String(v.clone());
                    match obj.get_mut(k) {
                        Some(serde_json::Value::Array(list)) => list.push(value),
                        Some(first) => *first = serde_json::Value::Array(vec![first.take(), value]),
                        None => {
                            obj.insert(k.clone(), value);
                        }
                    }
                }
                serde_json::to_writer_pretty(&mut *out, &obj)?;
                writeln!(out).map_err(stdout_err)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn stdout_err(source: std::io::Error) -> crate::error::CliError {
    crate::error::CliError::Io {
        path: "<output>".into(),
        source,
    }
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn eval_report(e: &Evaluation, digits: usize) -> KvReport {
    let mut r = KvReport::default();
    r.push("target", e.target.name());
    r.push("value", fmt_complex(e.value, digits));
    r.push("terms_used", e.terms_used.to_string());
    r.push("converged", e.converged.to_string());
    for (k, v) in &e.extras {
        r.push(k, v.clone());
    }
    for w in &e.warnings {
        r.push("warning", w.clone());
    }
    r
}

pub fn compare_report(e: &Evaluation, reference: &Reference, tol: f64, digits: usize) -> (KvReport, bool) {
    let (abs, rel) = errors(e.value, reference.value);
    let within = rel <= tol;
    let mut r = eval_report(e, digits);
    r.push("reference", reference.name.clone());
    r.push("reference_value", fmt_complex(reference.value, digits));
    r.push("abs_err", fmt_sig(abs, digits));
    r.push("rel_err", fmt_sig(rel, digits));
    r.push("tol", fmt_sig(tol, digits));
    r.push("within_tol", within.to_string());
    (r, within)
}

/// One table line. Reference fields are absent when the target has none.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub index: usize,
    pub term_re: f64,
    pub term_im: f64,
    pub partial_re: f64,
    pub partial_im: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_im: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<f64>,
}

/// Rows in accumulation order; the reference is compared with each partial sum.
pub fn table_rows(e: &Evaluation, reference: Option<&Reference>) -> Vec<ReportRow> {
    e.rows
        .iter()
        .map(|row| {
            let errs = reference.map(|r| errors(row.partial, r.value));
            ReportRow {
                index: row.index,
                term_re: row.term.re,
                term_im: row.term.im,
                partial_re: row.partial.re,
                partial_im: row.partial.im,
                ref_re: reference.map(|r| r.value.re),
                ref_im: reference.map(|r| r.value.im),
                abs_err: errs.map(|(a, _)| a),
                rel_err: errs.map(|(_, r)| r),
            }
        })
        .collect()
}

const BASE_COLUMNS: [&str; 5] = ["index", "term_re", "term_im", "partial_re", "partial_im"];
const REF_COLUMNS: [&str; 4] = ["ref_re", "ref_im", "abs_err", "rel_err"];

fn rounded(x: f64, digits: usize) -> f64 {
    fmt_sig(x, digits).parse().unwrap_or(x)
}

pub fn write_table(
    rows: &[ReportRow],
    with_ref: bool,
    format: Format,
    digits: usize,
    out: &mut dyn Write,
) -> CliResult<()> {
    match format {
        Format::Csv => {
            let mut w = csv_writer(out);
            let mut header: Vec<&str> = BASE_COLUMNS.to_vec();
            if with_ref {
                header.extend(REF_COLUMNS);
            }
            w.write_record(&header)?;
            for r in rows {
                let mut rec = vec![r.index.to_string()];
                let mut cells = vec![r.term_re, r.term_im, r.partial_re, r.partial_im];
                if with_ref {
                    cells.extend([r.ref_re, r.ref_im, r.abs_err, r.rel_err].map(|v| v.unwrap_or(f64::NAN)));
                }
                rec.extend(cells.into_iter().map(|v| fmt_sig(v, digits)));
                w.write_record(&rec)?;
            }
            w.flush().map_err(stdout_err)?;
        }
        Format::Json => {
            let shown: Vec<ReportRow> = rows
                .iter()
                .map(|r| ReportRow {
                    index: r.index,
                    term_re: rounded(r.term_re, digits),
                    term_im: rounded(r.term_im, digits),
                    partial_re: rounded(r.partial_re, digits),
                    partial_im: rounded(r.partial_im, digits),
                    ref_re: r.ref_re.map(|v| rounded(v, digits)),
                    ref_im: r.ref_im.map(|v| rounded(v, digits)),
                    abs_err: r.abs_err.map(|v| rounded(v, digits)),
                    rel_err: r.rel_err.map(|v| rounded(v, digits)),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &shown)?;
            writeln!(out).map_err(stdout_err)?;
        }
    }
    Ok(())
}
