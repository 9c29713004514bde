//! Flat CSV form of a sweep table.

use std::fs;
use std::path::Path;

use super::{ModelKind, ScanRow};
use crate::error::{Error, Result};
use crate::xy::Separation;

pub const HEADER: &str = "model,gamma,h,B,J,T,R,mz,txx,tyy,tzz,concurrence,eof,discord,cc,mutual_info,chsh,argmin_alpha,argmin_beta,flags";
pub const COLUMNS: usize = 20;

/// Shortest decimal form of `x` after rounding to 12 significant digits;
/// plain notation for moderate magnitudes, exponent notation otherwise.
pub fn format_value(x: f64) -> String {
    let q = super::quantize(x);
    if q == 0.0 {
        return "0".into();
    }
    if !q.is_finite() {
        return if q.is_nan() {
            "nan".into()
        } else if q > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let a = q.abs();
    if (1e-5..1e12).contains(&a) {
        format!("{q}")
    } else {
        format!("{q:e}")
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_value).unwrap_or_default()
}

fn record(row: &ScanRow) -> [String; COLUMNS] {
    [
        row.model.to_string(),
        opt(row.gamma),
        opt(row.h),
        opt(row.b),
        opt(row.j),
        format_value(row.temperature),
        row.separation.map(|s| s.to_string()).unwrap_or_default(),
        opt(row.mz),
        opt(row.txx),
        opt(row.tyy),
        opt(row.tzz),
        opt(row.concurrence),
        opt(row.eof),
        opt(row.discord),
        opt(row.cc),
        opt(row.mutual_info),
        opt(row.chsh),
        opt(row.argmin_alpha),
        opt(row.argmin_beta),
        row.flags.join(";"),
    ]
}

pub fn to_csv_string(rows: &[ScanRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::with_capacity(64 * (rows.len() + 1)));
    let fail = |e: csv::Error| -> ! { panic!("writing CSV to memory cannot fail: {e}") };
    w.write_record(HEADER.split(',')).unwrap_or_else(|e| fail(e));
    for row in rows {
        w.write_record(record(row)).unwrap_or_else(|e| fail(e));
    }
    let bytes = w.into_inner().unwrap_or_else(|e| panic!("flushing CSV buffer: {e}"));
    String::from_utf8(bytes).expect("CSV fields are ASCII")
}

pub fn emit_csv(rows: &[ScanRow], path: &Path) -> Result<()> {
    fs::write(path, to_csv_string(rows)).map_err(|e| Error::io(path, e))
}

fn parse_f64(field: &str, line: u64) -> Result<f64> {
    match field {
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => field
            .parse()
            .map_err(|_| Error::Parse(format!("line {line}: `{field}` is not a number"))),
    }
}

fn parse_opt(field: &str, line: u64) -> Result<Option<f64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        parse_f64(field, line).map(Some)
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<ScanRow>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut records = reader.records();
    match records.next() {
        Some(Ok(h)) if h.iter().eq(HEADER.split(',')) => {}
        Some(Ok(h)) => return Err(Error::Parse(format!("unexpected header `{}`", h.iter().collect::<Vec<_>>().join(",")))),
        Some(Err(e)) => return Err(Error::Parse(e.to_string())),
        None => return Err(Error::Parse("missing header".into())),
    }
    let mut rows = Vec::new();
    for record in records {
        let f = record.map_err(|e| Error::Parse(e.to_string()))?;
        let n = f.position().map_or(0, |p| p.line());
        let field = |k: usize| f.get(k).unwrap_or("");
        let separation = if field(6).is_empty() {
            None
        } else {
            Some(
                field(6)
                    .parse::<Separation>()
                    .map_err(|_| Error::Parse(format!("line {n}: bad separation `{}`", field(6))))?,
            )
        };
        rows.push(ScanRow {
            model: field(0).parse::<ModelKind>()?,
            gamma: parse_opt(field(1), n)?,
            h: parse_opt(field(2), n)?,
            b: parse_opt(field(3), n)?,
            j: parse_opt(field(4), n)?,
            temperature: parse_f64(field(5), n)?,
            separation,
            mz: parse_opt(field(7), n)?,
            txx: parse_opt(field(8), n)?,
            tyy: parse_opt(field(9), n)?,
            tzz: parse_opt(field(10), n)?,
            concurrence: parse_opt(field(11), n)?,
            eof: parse_opt(field(12), n)?,
            discord: parse_opt(field(13), n)?,
            cc: parse_opt(field(14), n)?,
            mutual_info: parse_opt(field(15), n)?,
            chsh: parse_opt(field(16), n)?,
            argmin_alpha: parse_opt(field(17), n)?,
            argmin_beta: parse_opt(field(18), n)?,
            flags: if field(19).is_empty() {
                Vec::new()
            } else {
                field(19).split(';').map(str::to_string).collect()
            },
        });
    }
    Ok(rows)
}

pub fn read_csv(path: &Path) -> Result<Vec<ScanRow>> {
    parse_csv(&fs::read_to_string(path).map_err(|e| Error::io(path, e))?)
}
