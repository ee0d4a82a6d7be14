//! Plain-text rendering of JSON results.

use serde_json::Value;

pub fn human(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("none".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(xs) if xs.iter().all(|x| scalar(x).is_some() && !x.is_array()) => {
            Some(format!(
                "[{}]",
                xs.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
            ))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, val, indent + 1);
                    }
                }
            }
        }
        Value::Array(xs) => {
            if xs.is_empty() {
                out.push_str(&format!("{pad}(none)\n"));
            }
            for (i, x) in xs.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        write_value(out, x, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_rendering() {
        let v = json!({"cases": [{"A": "0.1", "tag": "EvenPair"}], "m": 2, "empty": []});
        assert_eq!(
            human(&v),
            "cases:\n  [0]\n    A: 0.1\n    tag: EvenPair\nempty: []\nm: 2\n"
        );
    }
}
