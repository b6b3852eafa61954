//! Tabular report documents and their CSV / JSON / Markdown encodings.

use serde_json::{json, Map, Value};

use crate::config::OutputFormat;

/// Significant digits used by the text encodings (CSV and Markdown).
pub const SIGNIFICANT_DIGITS: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Number(f64),
    Flag(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Number(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    /// Machine name, used in CSV headers and JSON keys.
    pub key: &'static str,
    /// Display heading for Markdown.
    pub heading: &'static str,
}

pub const fn col(key: &'static str, heading: &'static str) -> Column {
    Column { key, heading }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
    /// Echo of the configuration sections the command read.
    pub inputs: Value,
}

impl Report {
    pub fn column_index(&self, key: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.key == key)
    }

    /// Numeric value of `key` in row `row`, if present.
    pub fn number(&self, row: usize, key: &str) -> Option<f64> {
        match self.rows.get(row)?.get(self.column_index(key)?)? {
            Cell::Number(v) => Some(*v),
            _ => None,
        }
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] and prints the shortest decimal form.
pub fn format_significant(v: f64) -> String {
    if !v.is_finite() {
        return String::new();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v)
        .parse()
        .expect("scientific notation round-trips");
    format!("{rounded}")
}

fn cell_text(cell: &Cell) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Number(v) => format_significant(*v),
        Cell::Flag(b) => b.to_string(),
        Cell::Missing => String::new(),
    }
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Number(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
        Cell::Flag(b) => Value::Bool(*b),
        Cell::Missing => Value::Null,
    }
}

pub fn to_json_value(r: &Report) -> Value {
    let columns: Vec<Value> = r
        .columns
        .iter()
        .map(|c| json!({ "key": c.key, "heading": c.heading }))
        .collect();
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = r
                .columns
                .iter()
                .zip(row)
                .map(|(c, cell)| (c.key.to_string(), cell_json(cell)))
                .collect();
            Value::Object(obj)
        })
        .collect();
    json!({
        "command": r.command,
        "title": r.title,
        "columns": columns,
        "rows": rows,
        "notes": r.notes,
        "inputs": r.inputs,
    })
}

fn to_csv(r: &Report) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(r.columns.iter().map(|c| c.key))
        .expect("writing to memory");
    for row in &r.rows {
        w.write_record(row.iter().map(cell_text))
            .expect("writing to memory");
    }
    w.into_inner().expect("flush to memory")
}

fn to_markdown(r: &Report) -> Vec<u8> {
    let escape = |s: String| s.replace('|', "\\|");
    let mut out = format!("## {}\n\n", r.title);
    out += &format!(
        "| {} |\n",
        r.columns
            .iter()
            .map(|c| c.heading)
            .collect::<Vec<_>>()
            .join(" | ")
    );
    out += &format!(
        "|{}\n",
        r.columns
            .iter()
            .enumerate()
            .map(|(i, _)| if i == 0 { ":---|" } else { "---:|" })
            .collect::<String>()
    );
    for row in &r.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Missing => "n/a".to_string(),
                other => escape(cell_text(other)),
            })
            .collect();
        out += &format!("| {} |\n", cells.join(" | "));
    }
    if !r.notes.is_empty() {
        out += "\nNotes:\n\n";
        for n in &r.notes {
            out += &format!("- {n}\n");
        }
    }
    out += "\nInputs:\n\n```json\n";
    out += &serde_json::to_string_pretty(&r.inputs).expect("inputs serialise");
    out += "\n```\n";
    out.into_bytes()
}

pub fn emit_report(r: &Report, fmt: OutputFormat) -> Vec<u8> {
    match fmt {
        OutputFormat::Csv => to_csv(r),
        OutputFormat::Json => {
            let mut bytes =
                serde_json::to_vec_pretty(&to_json_value(r)).expect("report serialises");
            bytes.push(b'\n');
            bytes
        }
        OutputFormat::Markdown => to_markdown(r),
    }
}

/// Like [`emit_report`] but takes the format by name.
pub fn emit_report_named(r: &Report, fmt: &str) -> Result<Vec<u8>, String> {
    Ok(emit_report(r, fmt.parse()?))
}
