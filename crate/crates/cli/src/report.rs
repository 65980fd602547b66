//! Ordered key/value output, rendered either as `key=value` lines or as one
//! JSON object.

use serde_json::{Map, Value};

#[derive(Debug, Default)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_owned(), value.into());
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string(&self.fields).expect("plain values serialize");
            s.push('\n');
            return s;
        }
        let mut lines = Vec::new();
        for (key, value) in &self.fields {
            flatten(key, value, &mut lines);
        }
        lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

/// Arrays of scalars become comma lists; nested arrays and objects get
/// `.index` / `.field` suffixes.
fn flatten(key: &str, value: &Value, out: &mut Vec<String>) {
    match value {
        Value::Array(items) if items.iter().all(is_scalar) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{key}={}", joined.join(",")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{key}.{i}"), item, out);
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{key}.{k}"), v, out);
            }
        }
        other => out.push(format!("{key}={}", scalar(other))),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
