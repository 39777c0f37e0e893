use std::fmt;

use serde::{Deserialize, Serialize};

use super::problem::ProblemId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ErrorCategory {
    /// No parsable answer object in the response.
    JsonError,
    /// The answer has the wrong shape or types.
    VerificationError,
    /// The answer is well-formed but violates a problem constraint.
    ProblemError,
}

/// Why a candidate solution was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ErrorCode {
    pub category: ErrorCategory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem_code: Option<u8>,
}

impl ErrorCode {
    pub const JSON: ErrorCode = ErrorCode { category: ErrorCategory::JsonError, problem_code: None };
    pub const VERIFICATION: ErrorCode =
        ErrorCode { category: ErrorCategory::VerificationError, problem_code: None };

    pub fn problem(code: u8) -> Self {
        ErrorCode { category: ErrorCategory::ProblemError, problem_code: Some(code) }
    }

    /// Text form, e.g. `3SAT ERROR 2` or `JSON ERROR`.
    pub fn to_text(self, problem: ProblemId) -> String {
        match (self.category, self.problem_code) {
            (ErrorCategory::ProblemError, Some(n)) => format!("{problem} ERROR {n}"),
            _ => self.to_string(),
        }
    }

    /// Inverse of [`ErrorCode::to_text`]. The problem prefix is returned when present.
    pub fn parse_text(text: &str) -> Result<(Option<ProblemId>, ErrorCode)> {
        let text = text.trim();
        match text {
            "JSON ERROR" => return Ok((None, ErrorCode::JSON)),
            "VERIFICATION ERROR" => return Ok((None, ErrorCode::VERIFICATION)),
            _ => {}
        }
        let bad = || Error::SchemaViolation(format!("unrecognised error code `{text}`"));
        let (prefix, number) = text.rsplit_once("ERROR ").ok_or_else(bad)?;
        let code: u8 = number.parse().map_err(|_| bad())?;
        let prefix = prefix.trim_end();
        let problem = if prefix.is_empty() { None } else { Some(prefix.parse::<ProblemId>()?) };
        if let Some(p) = problem {
            if !p.error_codes().contains(&code) {
                return Err(bad());
            }
        }
        Ok((problem, ErrorCode::problem(code)))
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.category, self.problem_code) {
            (ErrorCategory::JsonError, _) => f.write_str("JSON ERROR"),
            (ErrorCategory::VerificationError, _) => f.write_str("VERIFICATION ERROR"),
            (ErrorCategory::ProblemError, Some(n)) => write!(f, "ERROR {n}"),
            (ErrorCategory::ProblemError, None) => f.write_str("ERROR ?"),
        }
    }
}

/// Result of checking a candidate solution. `ok` holds exactly when `error` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorCode>,
    pub message: String,
}

impl VerifyOutcome {
    pub fn accept() -> Self {
        VerifyOutcome { ok: true, error: None, message: "correct".into() }
    }

    pub fn reject(error: ErrorCode, message: impl Into<String>) -> Self {
        VerifyOutcome { ok: false, error: Some(error), message: message.into() }
    }
}
