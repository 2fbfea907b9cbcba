//! Deterministic rendering: canonical JSON (sorted keys, stable number
//! formatting) or an aligned two-column table. Identical inputs produce
//! byte-identical output.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        // serde_json maps are BTree-backed, so serialization is key-sorted
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).unwrap()),
        Format::Table => {
            let mut out = String::new();
            render_table(v, "", &mut out);
            out
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar_text).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_table(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            let width = map
                .keys()
                .map(|k| prefix.len() + k.len())
                .max()
                .unwrap_or(0);
            for (k, val) in map {
                let key = format!("{prefix}{k}");
                if let Some(text) = scalar_text(val) {
                    out.push_str(&format!("{key:<width$}  {text}\n"));
                } else {
                    out.push_str(&format!("{key}:\n"));
                    render_table(val, &format!("{prefix}  "), out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(text) = scalar_text(item) {
                    out.push_str(&format!("{prefix}- {text}\n"));
                } else {
                    out.push_str(&format!("{prefix}-\n"));
                    render_table(item, &format!("{prefix}  "), out);
                }
            }
        }
        other => {
            if let Some(text) = scalar_text(other) {
                out.push_str(&format!("{prefix}{text}\n"));
            }
        }
    }
}
