//! CSV and JSON rendering of result tables.
//!
//! Numbers go through `serde_json` in both encodings, so a CSV cell and the
//! matching JSON value are the same shortest round-trip decimal.

use serde_json::{Map, Value};

use crate::config::OutputFormat;

/// A rectangular table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    /// Panics if the row width does not match the header.
    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    fn row_object(&self, row: &[Value]) -> Value {
        let map: Map<String, Value> = self
            .columns
            .iter()
            .zip(row)
            .map(|(k, v)| ((*k).to_string(), v.clone()))
            .collect();
        Value::Object(map)
    }
}

/// Everything one command writes.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    /// Echo of the resolved configuration.
    pub config: Map<String, Value>,
    pub table: Table,
    /// Extra top-level JSON members. Not part of the CSV.
    pub summary: Map<String, Value>,
}

/// Non-finite floats have no JSON form; they become `null`.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn csv_cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => quote_csv(s),
        other => other.to_string(),
    }
}

fn quote_csv(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_csv(table: &Table) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(csv_cell).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(report: &Report) -> String {
    let mut top = Map::new();
    top.insert("config".into(), Value::Object(report.config.clone()));
    let rows = report
        .table
        .rows
        .iter()
        .map(|r| report.table.row_object(r))
        .collect();
    top.insert("rows".into(), Value::Array(rows));
    for (k, v) in &report.summary {
        top.insert(k.clone(), v.clone());
    }
    let mut text =
        serde_json::to_string_pretty(&Value::Object(top)).expect("JSON values always serialize");
    text.push('\n');
    text
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(&report.table),
        OutputFormat::Json => render_json(report),
    }
}
