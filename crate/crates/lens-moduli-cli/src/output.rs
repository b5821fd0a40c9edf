//! Output envelope assembly and rendering.
//!
//! Every invocation emits a single `{command, inputs, result, schema_version}`
//! document. JSON mode relies on `serde_json`'s sorted map keys and shortest
//! float formatting, so identical invocations are byte-identical. Table mode
//! renders the same tree for humans.

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

pub fn envelope(command: &str, inputs: Value, result: Value) -> Value {
    let mut map = Map::new();
    map.insert("command".into(), Value::String(command.into()));
    map.insert("inputs".into(), inputs);
    map.insert("result".into(), result);
    map.insert(
        "schema_version".into(),
        Value::String(SCHEMA_VERSION.into()),
    );
    Value::Object(map)
}

pub fn render(envelope: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(envelope).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => render_table(envelope),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_table(envelope: &Value) -> String {
    let mut out = String::new();
    let obj = envelope.as_object().expect("envelope is an object");
    out.push_str(&format!("command: {}\n", scalar(&obj["command"])));
    out.push_str(&format!("inputs: {}\n", obj["inputs"]));
    render_value(&obj["result"], "", &mut out);
    out
}

fn render_value(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, val) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                render_value(val, &path, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| i.is_object()) && !items.is_empty() => {
            out.push_str(&format!("{prefix}:\n"));
            out.push_str(&render_rows(items));
        }
        other => {
            out.push_str(&format!("{prefix}: {}\n", scalar(other)));
        }
    }
}

fn render_rows(items: &[Value]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for key in item.as_object().unwrap().keys() {
            if !columns.contains(key) {
                columns.push(key.clone());
            }
        }
    }
    columns.sort();
    let mut widths: Vec<usize> = columns.iter().map(String::len).collect();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for item in items {
        let obj = item.as_object().unwrap();
        let row: Vec<String> = columns
            .iter()
            .map(|c| obj.get(c).map(scalar).unwrap_or_default())
            .collect();
        for (w, cell) in widths.iter_mut().zip(&row) {
            *w = (*w).max(cell.len());
        }
        rows.push(row);
    }
    let mut out = String::new();
    let header: Vec<String> = columns
        .iter()
        .zip(&widths)
        .map(|(c, w)| format!("{c:>w$}"))
        .collect();
    out.push_str(&format!("  {}\n", header.join("  ")));
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(&format!("  {}\n", line.join("  ")));
    }
    out
}
