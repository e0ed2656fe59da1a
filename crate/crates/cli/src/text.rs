//! Plain-text rendering of reports: aligned key/value lines and tables.

use serde_json::{Map, Value};

use crate::report::{Failure, Report};

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) if items.iter().all(is_scalar) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_scalar),
        Value::Object(_) => false,
        _ => true,
    }
}

fn table(rows: &[Value], indent: usize, out: &mut String) {
    let Some(Value::Object(first)) = rows.first() else {
        return;
    };
    let columns: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| r.get(c.as_str()).map_or_else(String::new, scalar))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].len())
                .max()
                .unwrap_or(0)
                .max(c.len())
        })
        .collect();
    let line = |items: Vec<String>| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{}{}\n", " ".repeat(indent), padded.join("  ").trim_end())
    };
    out.push_str(&line(columns.iter().map(|c| c.to_string()).collect()));
    for row in cells {
        out.push_str(&line(row));
    }
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let width = map
        .iter()
        .filter(|(_, v)| inline(v))
        .map(|(k, _)| k.len())
        .max()
        .unwrap_or(0);
    let pad = " ".repeat(indent);
    for (key, value) in map {
        match value {
            v if inline(v) => out.push_str(&format!("{pad}{key:<width$}  {}\n", scalar(v))),
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{key}:\n"));
                object(inner, indent + 2, out);
            }
            Value::Array(items) if items.iter().all(Value::is_object) => {
                out.push_str(&format!("{pad}{key}:\n"));
                table(items, indent + 2, out);
            }
            Value::Array(items) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    out.push_str(&format!("{pad}  {}\n", scalar(item)));
                }
            }
            _ => unreachable!("scalars are inline"),
        }
    }
}

pub fn render(report: &Report, wall_time_ms: Option<u128>) -> String {
    let mut out = String::new();
    let json = report.to_json();
    let Value::Object(map) = json else {
        unreachable!("reports are objects")
    };
    object(&map, 0, &mut out);
    if let Some(ms) = wall_time_ms {
        out.push_str(&format!("wall time  {ms} ms\n"));
    }
    out
}

pub fn render_error(failure: &Failure) -> String {
    format!("error ({}): {}\n", failure.kind(), failure.message())
}
