//! Row serialization: CSV with a fixed header and 12-significant-digit
//! floats, or JSON with the same keys and the same rounding.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Number, Value};

use crate::error::CliError;
use crate::sweep::SweepRow;

/// The exact CSV header line, column order fixed.
pub const CSV_HEADER: &str = "model,j,delta,dm,t,lqu,omega1,omega3,log_partition,branch,method";

/// Output format for sweep and figure data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Csv,
    Json,
}

impl std::str::FromStr for DataFormat {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(DataFormat::Csv),
            "json" => Ok(DataFormat::Json),
            other => Err(CliError::validation(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

impl std::fmt::Display for DataFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DataFormat::Csv => "csv",
            DataFormat::Json => "json",
        })
    }
}

impl DataFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            DataFormat::Csv => "csv",
            DataFormat::Json => "json",
        }
    }
}

/// A float rendered with 12 significant digits (scientific notation), the
/// precision every emitted number carries in both formats.
pub fn format_float(v: f64) -> String {
    format!("{v:.11e}")
}

/// The same 12-significant-digit rounding as a value: what a reader parsing
/// the emitted text will see.
fn rounded(v: f64) -> f64 {
    format_float(v).parse().unwrap_or(f64::NAN)
}

/// Render rows as CSV: header, one line per row, trailing newline.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.model,
            format_float(r.j),
            format_float(r.delta),
            format_float(r.dm),
            format_float(r.t),
            format_float(r.lqu),
            format_float(r.omega1),
            format_float(r.omega3),
            format_float(r.log_partition),
            r.branch,
            r.method,
        ));
    }
    out
}

fn json_number(v: f64) -> Value {
    // NaN (failed rows) has no JSON number representation; emit null.
    Number::from_f64(rounded(v)).map_or(Value::Null, Value::Number)
}

/// Render rows as a JSON array of objects with the CSV's keys, floats
/// rounded identically, trailing newline.
pub fn to_json(rows: &[SweepRow]) -> String {
    let array: Vec<Value> = rows
        .iter()
        .map(|r| {
            // Keys in CSV column order (maps preserve insertion order).
            let mut obj = Map::new();
            obj.insert("model".into(), json!(r.model));
            obj.insert("j".into(), json_number(r.j));
            obj.insert("delta".into(), json_number(r.delta));
            obj.insert("dm".into(), json_number(r.dm));
            obj.insert("t".into(), json_number(r.t));
            obj.insert("lqu".into(), json_number(r.lqu));
            obj.insert("omega1".into(), json_number(r.omega1));
            obj.insert("omega3".into(), json_number(r.omega3));
            obj.insert("log_partition".into(), json_number(r.log_partition));
            obj.insert("branch".into(), json!(r.branch));
            obj.insert("method".into(), json!(r.method));
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(array)).expect("plain data");
    s.push('\n');
    s
}

/// Render rows in the requested format.
pub fn render(rows: &[SweepRow], format: DataFormat) -> String {
    match format {
        DataFormat::Csv => to_csv(rows),
        DataFormat::Json => to_json(rows),
    }
}

/// Write rendered rows to a file, or to stdout when no path is given.
pub fn emit(rows: &[SweepRow], format: DataFormat, path: Option<&Path>) -> Result<(), CliError> {
    let text = render(rows, format);
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", p.display()))),
        None => {
            // Flush explicitly: stdout is buffered, and the drop-time flush
            // swallows errors, so a consumer that closed the pipe (or a full
            // disk behind a redirect) would otherwise go unnoticed.
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(CliError::from_stdout_write)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row() -> SweepRow {
        SweepRow {
            model: "z-dm".into(),
            j: 1.0,
            delta: 0.5,
            dm: 1.0,
            t: 2.0,
            lqu: 0.123456789012345,
            omega1: 0.876543210987654,
            omega3: 0.5,
            log_partition: 1.833,
            branch: "omega1".into(),
            method: "closed".into(),
        }
    }

    fn failed_row() -> SweepRow {
        SweepRow {
            model: "x-dm".into(),
            j: 0.0,
            delta: 0.5,
            dm: 1.0,
            t: 2.0,
            lqu: f64::NAN,
            omega1: f64::NAN,
            omega3: f64::NAN,
            log_partition: f64::NAN,
            branch: "-".into(),
            method: "failed".into(),
        }
    }

    #[test]
    fn csv_header_is_frozen() {
        assert_eq!(
            CSV_HEADER,
            "model,j,delta,dm,t,lqu,omega1,omega3,log_partition,branch,method"
        );
        let text = to_csv(&[]);
        assert_eq!(text, format!("{CSV_HEADER}\n"), "empty sweep is header only");
    }

    #[test]
    fn csv_has_one_line_per_row_plus_header_and_trailing_newline() {
        let rows = vec![sample_row(), sample_row(), sample_row()];
        let text = to_csv(&rows);
        assert_eq!(text.lines().count(), 4);
        assert!(text.ends_with('\n'));
        assert!(!text.ends_with("\n\n"));
    }

    #[test]
    fn floats_carry_twelve_significant_digits() {
        assert_eq!(format_float(0.123456789012345), "1.23456789012e-1");
        assert_eq!(format_float(1.0), "1.00000000000e0");
        assert_eq!(format_float(-273.15), "-2.73150000000e2");
        let text = to_csv(&[sample_row()]);
        assert!(text.contains("1.23456789012e-1"));
        assert!(text.contains("8.76543210988e-1"), "rounds, not truncates");
    }

    #[test]
    fn failed_rows_serialize_as_nan_and_null() {
        let text = to_csv(&[failed_row()]);
        assert!(text.contains(",NaN,"));
        assert!(text.contains(",-,failed"));

        let json = to_json(&[failed_row()]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v[0]["lqu"].is_null());
        assert_eq!(v[0]["method"], "failed");
    }

    #[test]
    fn json_round_trips_to_identical_rows() {
        let rows = vec![sample_row(), failed_row()];
        let text = to_json(&rows);
        assert!(text.ends_with('\n'));
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut rendered = serde_json::to_string_pretty(&parsed).unwrap();
        rendered.push('\n');
        assert_eq!(text, rendered, "parse + re-render is the identity");
        assert_eq!(parsed.as_array().unwrap().len(), 2);
        assert_eq!(parsed[0]["model"], "z-dm");
        assert_eq!(parsed[0]["lqu"].as_f64().unwrap(), 0.123456789012);
    }

    #[test]
    fn json_and_csv_agree_on_values() {
        let rows = vec![sample_row()];
        let json: serde_json::Value = serde_json::from_str(&to_json(&rows)).unwrap();
        let csv = to_csv(&rows);
        let line = csv.lines().nth(1).unwrap();
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[0], json[0]["model"].as_str().unwrap());
        let lqu_csv: f64 = cells[5].parse().unwrap();
        assert_eq!(lqu_csv, json[0]["lqu"].as_f64().unwrap());
    }

    #[test]
    fn emit_writes_files_and_reports_io_failures() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rows.csv");
        emit(&[sample_row()], DataFormat::Csv, Some(&path)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(CSV_HEADER));

        let bad = dir.path().join("no-such-dir").join("rows.csv");
        let err = emit(&[sample_row()], DataFormat::Csv, Some(&bad)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
