//! Aligned `key  value` text for JSON reports.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        out.push((prefix.to_string(), s));
        return;
    }
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        _ => unreachable!(),
    }
}

pub fn text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, x) in rows {
        let pad = width - k.chars().count();
        s.push_str(&k);
        s.push_str(&" ".repeat(pad + 2));
        s.push_str(&x);
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_keys_align() {
        let v = serde_json::json!({"g": "sl2", "degrees": {"2": {"H": 0}}, "ok": true});
        assert_eq!(text(&v), "g            sl2\ndegrees.2.H  0\nok           true\n");
    }
}
