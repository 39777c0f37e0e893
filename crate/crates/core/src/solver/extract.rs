//! Pulls the `solution` field out of free-form model output.

use std::sync::LazyLock;

use regex::Regex;
use serde_json::Value;

pub const NO_JSON: &str = "No JSON found in the text.";

static FENCED: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?s)```json\n(.*?)\n```").unwrap());
static PREFIXED: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"json\s*(\{[^{}]*\})").unwrap());
static BARE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"\{[^{}]*\}").unwrap());
static LINE_COMMENT: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?m)//.*$").unwrap());
static BLOCK_COMMENT: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"/\*[\s\S]*?\*/").unwrap());

/// Why no solution could be extracted. The reason is the text recorded in trial logs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractError(pub String);

impl std::fmt::Display for ExtractError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ExtractError {}

/// The candidate JSON text: the last match of the first stage that matches
/// (fenced block, then `json {...}`, then any flat `{...}`).
pub fn locate_json(text: &str) -> Option<&str> {
    let last_group = |re: &Regex| re.captures_iter(text).last().map(|c| c.get(1).unwrap().as_str());
    last_group(&FENCED)
        .or_else(|| last_group(&PREFIXED))
        .or_else(|| BARE.find_iter(text).last().map(|m| m.as_str()))
}

pub fn strip_comments(json: &str) -> String {
    let without_line = LINE_COMMENT.replace_all(json, "");
    BLOCK_COMMENT.replace_all(&without_line, "").into_owned()
}

pub fn extract_solution(text: &str) -> Result<Value, ExtractError> {
    let raw = locate_json(text).ok_or_else(|| ExtractError(NO_JSON.into()))?;
    let cleaned = strip_comments(raw);
    let value: Value =
        serde_json::from_str(&cleaned).map_err(|e| ExtractError(format!("Error parsing JSON: {e}")))?;
    match value {
        Value::Object(mut map) => {
            map.remove("solution").ok_or_else(|| ExtractError("Missing \"solution\" field in the JSON object.".into()))
        }
        other => Err(ExtractError(format!("Expected a JSON object, found {}", kind(&other)))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fenced_block_wins_over_later_bare_object() {
        let text = "```json\n{\"solution\": [1]}\n```\nthen {\"solution\": [2]}";
        assert_eq!(extract_solution(text).unwrap(), json!([1]));
    }

    #[test]
    fn last_fenced_block_is_used() {
        let text = "```json\n{\"solution\": 1}\n```\n```json\n{\"solution\": 2}\n```";
        assert_eq!(extract_solution(text).unwrap(), json!(2));
    }

    #[test]
    fn prefixed_and_bare_stages() {
        assert_eq!(extract_solution("json {\"solution\": \"ab\"}").unwrap(), json!("ab"));
        assert_eq!(extract_solution("answer: {\"solution\": true}.").unwrap(), json!(true));
    }

    #[test]
    fn comments_are_removed() {
        let text = "```json\n{\"solution\": [1, /* two */ 2] // done\n}\n```";
        assert_eq!(extract_solution(text).unwrap(), json!([1, 2]));
    }

    #[test]
    fn failures() {
        assert_eq!(extract_solution("I cannot solve this.").unwrap_err().0, NO_JSON);
        assert!(extract_solution("{\"answer\": 1}").unwrap_err().0.contains("solution"));
        assert!(extract_solution("```json\n[1, 2]\n```").is_err());
        assert!(extract_solution("{\"solution\": [1,}").is_err());
    }

    #[test]
    fn nested_objects_fall_back_to_inner_flat_object() {
        // The brace patterns never span nested braces.
        let text = "{\"solution\": {\"x\": 1}}";
        assert!(extract_solution(text).is_err());
    }
}
