#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

pub fn cyldelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyldelta"))
        .args(args)
        .output()
        .expect("spawn cyldelta")
}

pub fn stdout_of(args: &[&str]) -> String {
    let out = cyldelta(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "cyldelta {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

/// Header and rows of a CSV table. Cells here never contain commas.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    assert!(!text.contains('\r'), "CSV must use LF line endings");
    let mut lines = text.lines();
    let header = lines
        .next()
        .expect("header row")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

/// Whether a CSV cell and a JSON value carry the same datum.
pub fn cell_matches(cell: &str, value: &Value) -> bool {
    match value {
        Value::Null => cell.is_empty(),
        Value::String(s) => cell == s,
        Value::Number(n) => {
            let a: f64 = cell.parse().expect("numeric cell");
            a == n.as_f64().unwrap()
        }
        other => cell.parse::<Value>().ok().as_ref() == Some(other),
    }
}

/// Checks every cell of a CSV run against the JSON rows of the same run.
pub fn csv_agrees_with_json(csv: &str, json: &str) -> Result<(), String> {
    let (header, rows) = parse_csv(csv);
    let doc: Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let jrows = doc["rows"].as_array().ok_or("JSON has no rows array")?;
    if jrows.len() != rows.len() {
        return Err(format!(
            "{} CSV rows vs {} JSON rows",
            rows.len(),
            jrows.len()
        ));
    }
    for (i, (row, jrow)) in rows.iter().zip(jrows).enumerate() {
        let obj = jrow.as_object().ok_or("row is not an object")?;
        let keys: Vec<&String> = obj.keys().collect();
        if keys != header.iter().collect::<Vec<_>>() {
            return Err(format!("row {i}: JSON keys {keys:?} vs header {header:?}"));
        }
        for (col, cell) in header.iter().zip(row) {
            if !cell_matches(cell, &obj[col]) {
                return Err(format!(
                    "row {i} column {col}: CSV {cell:?} vs JSON {}",
                    obj[col]
                ));
            }
        }
    }
    Ok(())
}
