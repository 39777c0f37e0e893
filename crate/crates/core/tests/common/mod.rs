//! Helpers shared by integration tests.
#![allow(dead_code)]

use serde_json::{json, Value};

/// Small edits of a solution: flip a bit, bump a number, swap neighbours,
/// drop the last entry, edit a string.
pub fn mutations(v: &Value) -> Vec<Value> {
    let mut out = Vec::new();
    match v {
        Value::Array(items) => {
            for i in 0..items.len() {
                let mut m = items.clone();
                m[i] = bump(&items[i]);
                out.push(Value::Array(m));
                if i + 1 < items.len() {
                    let mut s = items.clone();
                    s.swap(i, i + 1);
                    out.push(Value::Array(s));
                }
            }
            let mut shorter = items.clone();
            shorter.pop();
            out.push(Value::Array(shorter));
        }
        Value::String(s) if !s.is_empty() => {
            out.push(json!(s[1..].to_string()));
            out.push(json!(s.chars().rev().collect::<String>()));
            out.push(json!(s.replacen('0', "1", 1)));
        }
        Value::Number(n) => {
            out.push(json!(n.as_i64().unwrap() + 1));
            out.push(json!(0));
        }
        _ => {}
    }
    out
}

fn bump(v: &Value) -> Value {
    match v {
        Value::Bool(b) => Value::Bool(!b),
        Value::Number(n) => json!(n.as_i64().unwrap() + 1),
        Value::Array(inner) if !inner.is_empty() => {
            let mut m = inner.clone();
            m[0] = bump(&inner[0]);
            Value::Array(m)
        }
        other => other.clone(),
    }
}
