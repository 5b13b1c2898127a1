//! CSV in and out.
//!
//! Samples use the header `time,status`; evaluated step functions use
//! `t,value,left_limit`. Numbers are written in the shortest decimal form that
//! parses back to the same `f64`.

use std::io::{Read, Write};

use serde::Serialize;
use thiserror::Error;

use crate::data::{validate_sample, CensoredSample};
use crate::error::SampleError;
use crate::step::StepFunction;

pub const SAMPLE_HEADER: [&str; 2] = ["time", "status"];
pub const TABLE_HEADER: [&str; 3] = ["t", "value", "left_limit"];

#[derive(Debug, Error)]
pub enum InputError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("expected header `time,status`, found `{0}`")]
    BadHeader(String),
    #[error("row {row}: {message}")]
    Malformed { row: usize, message: String },
    #[error(transparent)]
    Sample(#[from] SampleError),
}

impl InputError {
    /// Zero-based data row the error refers to, if any.
    pub fn row(&self) -> Option<usize> {
        match self {
            InputError::Malformed { row, .. } => Some(*row),
            InputError::Sample(
                SampleError::NonPositiveTime(i)
                | SampleError::NonFiniteTime(i)
                | SampleError::InvalidStatus(i),
            ) => Some(*i),
            _ => None,
        }
    }
}

/// Reads raw `(time, status)` pairs without validating their values.
pub fn read_raw_pairs<R: Read>(reader: R) -> Result<Vec<(f64, i64)>, InputError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = csv.headers().map_err(|e| malformed(0, e))?.clone();
    if header.is_empty() {
        return Ok(Vec::new());
    }
    if header.iter().ne(SAMPLE_HEADER) {
        return Err(InputError::BadHeader(
            header.iter().collect::<Vec<_>>().join(","),
        ));
    }
    csv.records()
        .enumerate()
        .map(|(row, record)| {
            let record = record.map_err(|e| malformed(row, e))?;
            if record.len() != 2 {
                return Err(malformed(
                    row,
                    format!("expected 2 fields, found {}", record.len()),
                ));
            }
            let time = record[0]
                .parse::<f64>()
                .map_err(|e| malformed(row, format!("time `{}`: {e}", &record[0])))?;
            let status = record[1]
                .parse::<i64>()
                .map_err(|e| malformed(row, format!("status `{}`: {e}", &record[1])))?;
            Ok((time, status))
        })
        .collect()
}

fn malformed(row: usize, e: impl ToString) -> InputError {
    InputError::Malformed {
        row,
        message: e.to_string(),
    }
}

pub fn read_sample<R: Read>(reader: R) -> Result<CensoredSample, InputError> {
    Ok(validate_sample(&read_raw_pairs(reader)?)?)
}

pub fn write_sample<W: Write>(writer: W, sample: &CensoredSample) -> std::io::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(SAMPLE_HEADER)?;
    for obs in sample.iter() {
        csv.write_record([fmt_f64(obs.time()), obs.status().to_string()])?;
    }
    csv.flush()
}

/// Shortest round-trip decimal representation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

/// One evaluated point of a step function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub t: f64,
    pub value: f64,
    pub left_limit: f64,
}

/// Evaluates `f` at each point. At `t = 0` the left limit is reported as the
/// initial value, the function being constant on `[0, first jump)`.
pub fn tabulate(f: &StepFunction, points: &[f64]) -> Vec<TableRow> {
    points
        .iter()
        .map(|&t| TableRow {
            t,
            value: f.eval(t),
            left_limit: if t > 0.0 { f.left_limit(t) } else { f.eval(t) },
        })
        .collect()
}

pub fn write_table<W: Write>(writer: W, rows: &[TableRow]) -> std::io::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(TABLE_HEADER)?;
    for row in rows {
        csv.write_record([fmt_f64(row.t), fmt_f64(row.value), fmt_f64(row.left_limit)])?;
    }
    csv.flush()
}

/// Parses a `t,value,left_limit` table back.
pub fn read_table<R: Read>(reader: R) -> Result<Vec<TableRow>, InputError> {
    let mut csv = csv::Reader::from_reader(reader);
    csv.records()
        .enumerate()
        .map(|(row, record)| {
            let record = record.map_err(|e| malformed(row, e))?;
            let field = |i: usize| -> Result<f64, InputError> {
                record
                    .get(i)
                    .ok_or_else(|| malformed(row, "missing field"))?
                    .parse::<f64>()
                    .map_err(|e| malformed(row, e))
            };
            Ok(TableRow {
                t: field(0)?,
                value: field(1)?,
                left_limit: field(2)?,
            })
        })
        .collect()
}
