//! Plain-text rendering of command results.

use serde_json::Value;

/// One `key  value` line per top-level field, keys padded to a common width.
pub fn text(v: &Value) -> String {
    let Value::Object(map) = v else {
        return scalar(v);
    };
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    map.iter()
        .map(|(k, v)| format!("{k:width$}  {}", scalar(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
