//! State files and sweep reports.
//!
//! A state file is either JSON,
//!
//! ```text
//! {"n": 2, "cm": [16 reals, row-major], "displacement": [4 reals]}
//! ```
//!
//! where `cm` may also be given as an array of rows and `displacement` is
//! optional, or plain text: the mode count on the first line followed by
//! `2n` rows of `2n` whitespace-separated reals. Blank lines and lines
//! starting with `#` are ignored. Writers emit 17 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::monogamy::SweepReport;
use crate::state::GaussianState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Column order of the sweep CSV.
pub const CSV_COLUMNS: [&str; 7] = [
    "sample_index",
    "seed",
    "n_modes",
    "pivot",
    "lhs",
    "sum_rhs",
    "residual",
];

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses a state from JSON or text, choosing by the first non-blank byte.
pub fn parse_state(contents: &str) -> Result<GaussianState> {
    if contents.trim_start().starts_with('{') {
        parse_json_state(contents)
    } else {
        parse_text_state(contents)
    }
}

pub fn load_state(path: impl AsRef<Path>) -> Result<GaussianState> {
    let contents = fs::read_to_string(path.as_ref())?;
    parse_state(&contents)
}

fn json_reals(value: &Value, field: &str) -> Result<Vec<f64>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::parse(format!("field `{field}`"), "expected an array"))?;
    let mut out = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        match item {
            Value::Array(_) => out.extend(json_reals(item, &format!("{field}[{i}]"))?),
            _ => out.push(item.as_f64().ok_or_else(|| {
                Error::parse(format!("field `{field}[{i}]`"), "expected a number")
            })?),
        }
    }
    Ok(out)
}

fn parse_json_state(contents: &str) -> Result<GaussianState> {
    let doc: Value = serde_json::from_str(contents).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("field `n`", "expected a positive integer"))?
        as usize;
    if n == 0 {
        return Err(Error::parse("field `n`", "mode count must be positive"));
    }
    let dim = 2 * n;
    let cm_value = doc
        .get("cm")
        .ok_or_else(|| Error::parse("field `cm`", "missing"))?;
    if let Some(rows) = cm_value.as_array() {
        if rows.iter().any(Value::is_array) {
            if rows.len() != dim {
                return Err(Error::parse(
                    "field `cm`",
                    format!("expected {dim} rows, got {}", rows.len()),
                ));
            }
            for (i, row) in rows.iter().enumerate() {
                let len = row.as_array().map_or(0, Vec::len);
                if len != dim {
                    return Err(Error::parse(
                        format!("field `cm[{i}]`"),
                        format!("expected {dim} entries, got {len}"),
                    ));
                }
            }
        }
    }
    let cm = json_reals(cm_value, "cm")?;
    if cm.len() != dim * dim {
        return Err(Error::parse(
            "field `cm`",
            format!("expected {} entries for n = {n}, got {}", dim * dim, cm.len()),
        ));
    }
    let displacement = match doc.get("displacement") {
        None | Some(Value::Null) => vec![0.0; dim],
        Some(v) => {
            let d = json_reals(v, "displacement")?;
            if d.len() != dim {
                return Err(Error::parse(
                    "field `displacement`",
                    format!("expected {dim} entries, got {}", d.len()),
                ));
            }
            d
        }
    };
    GaussianState::new(
        DMatrix::from_row_slice(dim, dim, &cm),
        DVector::from_vec(displacement),
    )
}

fn parse_text_state(contents: &str) -> Result<GaussianState> {
    let mut lines = contents
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "empty state file"))?;
    let n: usize = header.parse().map_err(|_| {
        Error::parse(
            format!("line {first_line}"),
            format!("expected the mode count, got `{header}`"),
        )
    })?;
    if n == 0 {
        return Err(Error::parse(format!("line {first_line}"), "mode count must be positive"));
    }
    let dim = 2 * n;
    let mut cm = Vec::with_capacity(dim * dim);
    for row in 0..dim {
        let (line_no, line) = lines.next().ok_or_else(|| {
            Error::parse("end of file", format!("expected {dim} matrix rows, got {row}"))
        })?;
        let values: Vec<&str> = line.split_whitespace().collect();
        if values.len() != dim {
            return Err(Error::parse(
                format!("line {line_no}"),
                format!("expected {dim} entries, got {}", values.len()),
            ));
        }
        for (col, token) in values.iter().enumerate() {
            let x: f64 = token.parse().map_err(|_| {
                Error::parse(
                    format!("line {line_no}, field {}", col + 1),
                    format!("`{token}` is not a number"),
                )
            })?;
            cm.push(x);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(format!("line {line_no}"), "unexpected trailing content"));
    }
    GaussianState::from_cm(DMatrix::from_row_slice(dim, dim, &cm))
}

pub fn state_to_json(state: &GaussianState) -> String {
    let cm = state.cm();
    let dim = cm.nrows();
    let entries: Vec<String> = (0..dim)
        .flat_map(|r| (0..dim).map(move |c| (r, c)))
        .map(|(r, c)| fmt_real(cm[(r, c)]))
        .collect();
    let disp: Vec<String> = state.displacement().iter().map(|&x| fmt_real(x)).collect();
    format!(
        "{{\"n\": {}, \"cm\": [{}], \"displacement\": [{}]}}\n",
        state.modes(),
        entries.join(", "),
        disp.join(", ")
    )
}

pub fn state_to_text(state: &GaussianState) -> String {
    let cm = state.cm();
    let mut out = format!("{}\n", state.modes());
    for r in 0..cm.nrows() {
        let row: Vec<String> = (0..cm.ncols()).map(|c| fmt_real(cm[(r, c)])).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn save_state(state: &GaussianState, path: impl AsRef<Path>, format: StateFormat) -> Result<()> {
    let body = match format {
        StateFormat::Json => state_to_json(state),
        StateFormat::Text => state_to_text(state),
    };
    fs::write(path, body)?;
    Ok(())
}

/// Writes one CSV row per retained (sample, pivot) record.
pub fn write_csv<W: Write>(report: &SweepReport, writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    w.write_record(CSV_COLUMNS).map_err(csv_error)?;
    for rec in &report.records {
        w.serialize(rec).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::InvalidInput(format!("csv: {other:?}")),
    }
}

pub fn report_to_json(report: &SweepReport) -> Result<String> {
    serde_json::to_string_pretty(report).map_err(|e| Error::InvalidInput(e.to_string()))
}

pub fn save_report(report: &SweepReport, path: impl AsRef<Path>, format: ReportFormat) -> Result<()> {
    match format {
        ReportFormat::Json => fs::write(path, report_to_json(report)? + "\n")?,
        ReportFormat::Csv => {
            let file = fs::File::create(path)?;
            write_csv(report, std::io::BufWriter::new(file))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_vacuum() {
        let s = parse_state(r#"{"n": 1, "cm": [1, 0, 0, 1]}"#).unwrap();
        assert_eq!(s, GaussianState::vacuum(1).unwrap());
    }

    #[test]
    fn json_nested_rows_and_displacement() {
        let s = parse_state(r#"{"n": 1, "cm": [[2, 0], [0, 0.5]], "displacement": [1.5, -2]}"#)
            .unwrap();
        assert_eq!(s.cm()[(1, 1)], 0.5);
        assert_eq!(s.displacement()[1], -2.0);
    }

    #[test]
    fn text_and_json_agree() {
        let text = "# thermal squeezed\n1\n3 0.5\n0.5 2\n";
        let json = r#"{"n": 1, "cm": [3, 0.5, 0.5, 2]}"#;
        assert_eq!(parse_state(text).unwrap(), parse_state(json).unwrap());
    }

    #[test]
    fn unphysical_file_is_rejected() {
        let err = parse_state("1\n0.5 0\n0 0.5\n").unwrap_err();
        assert!(err.to_string().contains("violates γ + iJ ≥ 0"), "{err}");
    }

    #[test]
    fn parse_errors_name_location() {
        let err = parse_state("1\n1 0\n0 x\n").unwrap_err();
        assert!(err.to_string().contains("line 3, field 2"), "{err}");
        let err = parse_state("1\n1 0 0\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = parse_state(r#"{"n": 1, "cm": [1, 0, 0]}"#).unwrap_err();
        assert!(err.to_string().contains("field `cm`"), "{err}");
        let err = parse_state(r#"{"n": 1, "cm": [1, 0, 0, "a"]}"#).unwrap_err();
        assert!(err.to_string().contains("cm[3]"), "{err}");
        let err = parse_state(r#"{"cm": [1]}"#).unwrap_err();
        assert!(err.to_string().contains("field `n`"), "{err}");
        let err = parse_state("{\"n\": 1,\n \"cm\": [1, 0, 0, 1").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn writers_use_seventeen_digits() {
        let s = GaussianState::random_pure(2, 1.0, 3).unwrap();
        let text = state_to_text(&s);
        let first = text.lines().nth(1).unwrap().split_whitespace().next().unwrap();
        let mantissa = first.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
    }
}
