//! Decoding of untrusted candidate solutions.

use serde_json::Value;

use super::{format_error, Rejection};

pub(crate) fn as_int(v: &Value) -> Option<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        _ => None,
    }
}

/// `true`/`false`, or the integers 0 and 1.
pub(crate) fn as_bit(v: &Value) -> Option<bool> {
    match v {
        Value::Bool(b) => Some(*b),
        Value::Number(n) => match n.as_i64() {
            Some(0) => Some(false),
            Some(1) => Some(true),
            _ => None,
        },
        _ => None,
    }
}

pub(crate) fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, Rejection> {
    v.as_array().ok_or_else(|| format_error(format!("{what} must be a list")))
}

pub(crate) fn int_list(v: &Value, what: &str) -> Result<Vec<i64>, Rejection> {
    array(v, what)?
        .iter()
        .map(|x| as_int(x).ok_or_else(|| format_error(format!("{what} must hold integers, found {x}"))))
        .collect()
}

pub(crate) fn bit_list(v: &Value, what: &str) -> Result<Vec<bool>, Rejection> {
    array(v, what)?
        .iter()
        .map(|x| as_bit(x).ok_or_else(|| format_error(format!("{what} must hold booleans, found {x}"))))
        .collect()
}

pub(crate) fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str, Rejection> {
    v.as_str().ok_or_else(|| format_error(format!("{what} must be a string")))
}

/// Index in `0..len`, if `v` is one.
pub(crate) fn index(v: i64, len: usize) -> Option<usize> {
    usize::try_from(v).ok().filter(|&i| i < len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn decoding() {
        assert_eq!(int_list(&json!([1, -2]), "x").unwrap(), vec![1, -2]);
        assert!(int_list(&json!([1.5]), "x").is_err());
        assert!(int_list(&json!("1,2"), "x").is_err());
        assert_eq!(bit_list(&json!([true, 0, 1]), "x").unwrap(), vec![true, false, true]);
        assert!(bit_list(&json!([2]), "x").is_err());
        assert_eq!(index(3, 4), Some(3));
        assert_eq!(index(-1, 4), None);
        assert_eq!(index(4, 4), None);
    }
}
