//! Chat-completions backend over HTTP.

use std::time::Duration;

use serde_json::{json, Value};

use super::backend::{Backend, BackendReply, Finish, Sampling};
use crate::error::{Error, Result};

pub const ENV_ENDPOINT: &str = "NPBENCH_ENDPOINT";
pub const ENV_API_KEY: &str = "NPBENCH_API_KEY";
pub const ENV_MODEL: &str = "NPBENCH_MODEL";

#[derive(Debug, Clone)]
pub struct HttpBackend {
    endpoint: String,
    model: String,
    api_key: Option<String>,
    concurrency: Option<usize>,
    client: reqwest::blocking::Client,
}

impl HttpBackend {
    /// `endpoint` is the full URL of the chat-completions route.
    pub fn new(endpoint: impl Into<String>, model: impl Into<String>, api_key: Option<String>) -> Result<Self> {
        let endpoint = endpoint.into();
        let model = model.into();
        if endpoint.is_empty() || model.is_empty() {
            return Err(Error::Config("http backend needs an endpoint and a model name".into()));
        }
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(1800))
            .build()
            .map_err(|e| Error::Backend(e.to_string()))?;
        Ok(HttpBackend { endpoint, model, api_key, concurrency: None, client })
    }

    /// Reads the endpoint, model and key from the environment; explicit
    /// arguments take precedence.
    pub fn from_env(endpoint: Option<String>, model: Option<String>) -> Result<Self> {
        let var = |name: &str| std::env::var(name).ok().filter(|v| !v.is_empty());
        let endpoint = endpoint
            .or_else(|| var(ENV_ENDPOINT))
            .ok_or_else(|| Error::Config(format!("no endpoint given and {ENV_ENDPOINT} is not set")))?;
        let model = model
            .or_else(|| var(ENV_MODEL))
            .ok_or_else(|| Error::Config(format!("no model given and {ENV_MODEL} is not set")))?;
        HttpBackend::new(endpoint, model, var(ENV_API_KEY))
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Result<Self> {
        self.client = reqwest::blocking::Client::builder()
            .timeout(timeout)
            .build()
            .map_err(|e| Error::Backend(e.to_string()))?;
        Ok(self)
    }

    pub fn with_max_concurrency(mut self, limit: usize) -> Self {
        self.concurrency = Some(limit.max(1));
        self
    }

    pub fn request_body(&self, prompt: &str, sampling: &Sampling) -> Value {
        let mut body = json!({
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
        });
        if let Some(t) = sampling.temperature {
            body["temperature"] = json!(t);
        }
        if let Some(p) = sampling.top_p {
            body["top_p"] = json!(p);
        }
        if let Some(m) = sampling.max_tokens {
            body["max_tokens"] = json!(m);
        }
        body
    }

    fn send(&self, prompt: &str, sampling: &Sampling) -> std::result::Result<BackendReply, String> {
        let mut request = self.client.post(&self.endpoint).json(&self.request_body(prompt, sampling));
        if let Some(key) = &self.api_key {
            request = request.bearer_auth(key);
        }
        let response = request.send().map_err(|e| e.to_string())?;
        let status = response.status();
        let body = response.text().map_err(|e| e.to_string())?;
        if !status.is_success() {
            return Err(format!("HTTP {status}: {}", body.chars().take(500).collect::<String>()));
        }
        let value: Value = serde_json::from_str(&body).map_err(|e| format!("malformed response body: {e}"))?;
        parse_reply(&value)
    }
}

/// Reads a chat-completions response body.
pub(crate) fn parse_reply(value: &Value) -> std::result::Result<BackendReply, String> {
    let choice = value.pointer("/choices/0").ok_or("response has no choices")?;
    let message = choice.get("message").ok_or("choice has no message")?;
    let text = message.get("content").and_then(Value::as_str).unwrap_or_default().to_string();
    let reasoning_text = message
        .get("reasoning_content")
        .or_else(|| message.get("reasoning"))
        .and_then(Value::as_str)
        .map(str::to_string);
    let finish = match choice.get("finish_reason").and_then(Value::as_str) {
        Some("length") => Finish::LengthCap,
        _ => Finish::Complete,
    };
    let usage = |field: &str| value.pointer(&format!("/usage/{field}")).and_then(Value::as_u64).unwrap_or(0);
    Ok(BackendReply {
        text,
        reasoning_text,
        prompt_tokens: usage("prompt_tokens"),
        completion_tokens: usage("completion_tokens"),
        finish,
    })
}

impl Backend for HttpBackend {
    fn name(&self) -> &str {
        &self.model
    }

    fn complete(&self, prompt: &str, sampling: &Sampling) -> BackendReply {
        self.send(prompt, sampling).unwrap_or_else(BackendReply::transport_error)
    }

    fn max_concurrency(&self) -> Option<usize> {
        self.concurrency
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn body_omits_unset_sampling() {
        let b = HttpBackend::new("http://localhost:1/v1/chat/completions", "m", None).unwrap();
        let body = b.request_body("hi", &Sampling::default());
        assert_eq!(body, json!({"model": "m", "messages": [{"role": "user", "content": "hi"}]}));
        let body = b.request_body("hi", &Sampling::self_hosted());
        assert_eq!(body["max_tokens"], json!(7500));
        assert_eq!(body["top_p"], json!(0.95));
    }

    #[test]
    fn parses_reply_fields() {
        let v = json!({
            "choices": [{"message": {"content": "x", "reasoning_content": "wait"}, "finish_reason": "length"}],
            "usage": {"prompt_tokens": 10, "completion_tokens": 7}
        });
        let r = parse_reply(&v).unwrap();
        assert_eq!((r.prompt_tokens, r.completion_tokens, r.finish), (10, 7, Finish::LengthCap));
        assert_eq!(r.reasoning_text.as_deref(), Some("wait"));
        assert!(parse_reply(&json!({"choices": []})).is_err());
    }

    #[test]
    fn unreachable_endpoint_is_a_transport_error() {
        let b = HttpBackend::new("http://127.0.0.1:9/v1/chat/completions", "m", None).unwrap();
        assert_eq!(b.complete("hi", &Sampling::default()).finish, Finish::TransportError);
    }
}
