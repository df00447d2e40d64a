use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::Failure;

pub const SCHEMA: &str = "klmov-v1";

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command result in every format it supports.
pub struct Rendered {
    pub text: String,
    pub json: Value,
    pub csv: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Rendered {
    pub fn new(kind: &str, text: String, mut json: Value) -> Self {
        if let Value::Object(m) = &mut json {
            m.insert("schema".into(), json!(SCHEMA));
            m.insert("kind".into(), json!(kind));
        }
        Self { text, json, csv: None }
    }

    pub fn with_csv(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.csv = Some((header, rows));
        self
    }
}

fn csv_bytes(header: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::Usage(format!("csv: {e}"));
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    w.into_inner().map_err(|e| Failure::Usage(format!("csv: {e}")))
}

pub fn emit(r: &Rendered, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let bytes = match format {
        Format::Text => {
            let mut s = r.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s.into_bytes()
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r.json).map_err(|e| Failure::Usage(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => match &r.csv {
            Some((h, rows)) => csv_bytes(h, rows)?,
            None => return Err(Failure::Usage("this command has no CSV form; use --format text or json".into())),
        },
    };
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes).and_then(|_| stdout.flush()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

/// Left-aligned first column, right-aligned rest.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .map(|r| r.get(j).map_or(0, |c| c.chars().count()))
                .chain([header[j].chars().count()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |r: &[String]| -> String {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let pad = width[j] - c.chars().count();
                if j == 0 {
                    format!("{c}{}", " ".repeat(pad))
                } else {
                    format!("{}{c}", " ".repeat(pad))
                }
            })
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header)];
    out.extend(rows.iter().map(|r| line(r)));
    out.join("\n")
}
