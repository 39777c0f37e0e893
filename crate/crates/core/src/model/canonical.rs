//! Canonical JSON: sorted object keys, no insignificant whitespace, integers only.

use serde_json::Value;

use crate::error::{Error, Result};

/// Writes `value` canonically. Fails on floating-point numbers.
pub fn to_canonical_string(value: &Value) -> Result<String> {
    let mut out = String::new();
    write_value(value, &mut out)?;
    Ok(out)
}

fn write_value(value: &Value, out: &mut String) -> Result<()> {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                return Err(Error::SchemaViolation(format!("non-integer number {n}")));
            }
            out.push_str(&n.to_string());
        }
        Value::String(s) => out.push_str(&serde_json::to_string(s)?),
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out)?;
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, key) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(key)?);
                out.push(':');
                write_value(&map[key], out)?;
            }
            out.push('}');
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_sorted_and_compact() {
        let v = json!({"b": [1, {"z": true, "a": null}], "a": "x\"y"});
        assert_eq!(to_canonical_string(&v).unwrap(), r#"{"a":"x\"y","b":[1,{"a":null,"z":true}]}"#);
    }

    #[test]
    fn floats_rejected() {
        assert!(to_canonical_string(&json!({"a": 0.5})).is_err());
        assert_eq!(to_canonical_string(&json!(-3)).unwrap(), "-3");
    }
}
