//! End-to-end solver runs against in-process and HTTP backends.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use npbench::model::{ErrorCode, ProblemId};
use npbench::solver::{
    append_log, extract_solution, read_log, run_batch, strip_comments, Backend, BackendReply, Finish, FixtureBackend,
    HttpBackend, OracleBackend, RandomBackend, Sampling, SolverConfig,
};
use proptest::prelude::*;
use serde_json::{json, Value};

fn quick(trials: u32) -> SolverConfig {
    SolverConfig { n_trials: trials, seeds: vec![1, 2], retry_backoff: Duration::ZERO, ..SolverConfig::default() }
}

/// Tracks how many calls overlap.
#[derive(Default)]
struct Gauge {
    now: AtomicUsize,
    peak: AtomicUsize,
}

impl Gauge {
    fn enter(&self) {
        let n = self.now.fetch_add(1, Ordering::SeqCst) + 1;
        self.peak.fetch_max(n, Ordering::SeqCst);
    }

    fn leave(&self) {
        self.now.fetch_sub(1, Ordering::SeqCst);
    }
}

struct Slow {
    gauge: Gauge,
    limit: Option<usize>,
}

impl Backend for Slow {
    fn name(&self) -> &str {
        "slow"
    }

    fn complete(&self, _: &str, _: &Sampling) -> BackendReply {
        self.gauge.enter();
        std::thread::sleep(Duration::from_millis(15));
        self.gauge.leave();
        BackendReply::complete("no answer", 1, 1)
    }

    fn max_concurrency(&self) -> Option<usize> {
        self.limit
    }
}

#[test]
fn in_flight_calls_never_exceed_the_cap() {
    for (batch_size, limit, expect_peak) in [(4, None, 4), (10, Some(2), 2), (1, None, 1)] {
        let backend = Slow { gauge: Gauge::default(), limit };
        let config = SolverConfig { batch_size, ..quick(6) };
        let records = run_batch(ProblemId::Partition, &[1], &backend, &config).unwrap();
        assert_eq!(records.len(), 12);
        let peak = backend.gauge.peak.load(Ordering::SeqCst);
        assert!(peak <= expect_peak, "peak {peak} above cap {expect_peak}");
        assert!(expect_peak == 1 || peak > 1, "calls never overlapped");
        assert!(records.iter().all(|r| r.outcome.as_ref().unwrap().error == Some(ErrorCode::JSON)));
    }
}

/// Fails in transport a fixed number of times per prompt, then answers like the oracle.
struct Flaky {
    failures: usize,
    seen: Mutex<std::collections::HashMap<String, usize>>,
}

impl Backend for Flaky {
    fn name(&self) -> &str {
        "flaky"
    }

    fn complete(&self, prompt: &str, sampling: &Sampling) -> BackendReply {
        let mut seen = self.seen.lock().unwrap();
        let n = seen.entry(prompt.to_string()).or_default();
        *n += 1;
        if *n <= self.failures {
            return BackendReply::transport_error("connection reset");
        }
        OracleBackend::default().complete(prompt, sampling)
    }
}

#[test]
fn transport_failures_are_retried_then_recorded() {
    let config = quick(2);
    let ok = Flaky { failures: 2, seen: Mutex::default() };
    let records = run_batch(ProblemId::ThreeSat, &[1], &ok, &config).unwrap();
    assert!(records.iter().all(|r| r.ok() && r.attempts == 3));

    let down = Flaky { failures: 5, seen: Mutex::default() };
    let records = run_batch(ProblemId::ThreeSat, &[1], &down, &config).unwrap();
    assert_eq!(records.len(), 4);
    for r in &records {
        assert_eq!(r.attempts, 3);
        assert_eq!(r.finish, Finish::TransportError);
        assert!(r.outcome.is_none() && r.backend_error.as_deref().unwrap().contains("connection reset"));
    }
}

struct Truncating;

impl Backend for Truncating {
    fn name(&self) -> &str {
        "truncating"
    }

    fn complete(&self, _: &str, _: &Sampling) -> BackendReply {
        BackendReply {
            text: "Let me reason. Wait, first ```json\n{\"solution\": [true, fal".into(),
            reasoning_text: None,
            prompt_tokens: 10,
            completion_tokens: 7500,
            finish: Finish::LengthCap,
        }
    }
}

#[test]
fn truncated_replies_are_json_errors() {
    let records = run_batch(ProblemId::ThreeSat, &[1], &Truncating, &quick(1)).unwrap();
    for r in &records {
        assert_eq!(r.finish, Finish::LengthCap);
        assert_eq!(r.outcome.as_ref().unwrap().error, Some(ErrorCode::JSON));
        assert_eq!(r.extract_error.as_deref(), Some("No JSON found in the text."));
        assert_eq!(r.aha_count, 1);
        assert_eq!(r.attempts, 1);
    }
}

#[test]
fn fixture_replay_reproduces_log_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let original = run_batch(ProblemId::VertexCover, &[1, 2], &RandomBackend { seed: 4 }, &quick(3)).unwrap();
    let first = dir.path().join("first.jsonl");
    append_log(&first, &original).unwrap();

    let fixture = FixtureBackend::from_log("random", &first).unwrap();
    let replayed = run_batch(ProblemId::VertexCover, &[1, 2], &fixture, &quick(3)).unwrap();
    let second = dir.path().join("second.jsonl");
    append_log(&second, &replayed).unwrap();
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    assert_eq!(read_log(&second).unwrap().records, original);
}

#[test]
fn malformed_log_lines_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("log.jsonl");
    let records = run_batch(ProblemId::ThreeSat, &[1], &OracleBackend::default(), &quick(1)).unwrap();
    append_log(&path, &records[..1]).unwrap();
    std::fs::OpenOptions::new().append(true).open(&path).unwrap().write_all(b"{not json\n\n").unwrap();
    append_log(&path, &records[1..]).unwrap();
    let log = read_log(&path).unwrap();
    assert_eq!(log.records, records);
    assert_eq!(log.malformed.len(), 1);
    assert_eq!(log.malformed[0].0, 2);
}

/// A minimal chat-completions server answering with oracle solutions.
struct Stub {
    url: String,
    requests: Arc<Mutex<Vec<(String, Value)>>>,
    gauge: Arc<Gauge>,
}

fn read_request(stream: &mut TcpStream) -> (String, Value) {
    let mut reader = BufReader::new(stream.try_clone().unwrap());
    let (mut auth, mut length) = (String::new(), 0usize);
    loop {
        let mut line = String::new();
        reader.read_line(&mut line).unwrap();
        let line = line.trim_end();
        if line.is_empty() {
            break;
        }
        if let Some((name, value)) = line.split_once(':') {
            match name.to_ascii_lowercase().as_str() {
                "authorization" => auth = value.trim().to_string(),
                "content-length" => length = value.trim().parse().unwrap(),
                _ => {}
            }
        }
    }
    let mut body = vec![0; length];
    reader.read_exact(&mut body).unwrap();
    (auth, serde_json::from_slice(&body).unwrap())
}

fn spawn_stub(fail_first: usize) -> Stub {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/v1/chat/completions", listener.local_addr().unwrap());
    let requests = Arc::new(Mutex::new(Vec::new()));
    let gauge = Arc::new(Gauge::default());
    let served = Arc::new(AtomicUsize::new(0));
    let (reqs, g) = (requests.clone(), gauge.clone());
    std::thread::spawn(move || {
        for stream in listener.incoming() {
            let mut stream = stream.unwrap();
            let (reqs, g, served) = (reqs.clone(), g.clone(), served.clone());
            std::thread::spawn(move || {
                g.enter();
                let (auth, body) = read_request(&mut stream);
                std::thread::sleep(Duration::from_millis(20));
                let prompt = body["messages"][0]["content"].as_str().unwrap().to_string();
                reqs.lock().unwrap().push((auth, body));
                let (status, payload) = if served.fetch_add(1, Ordering::SeqCst) < fail_first {
                    ("503 Service Unavailable", "{\"error\": \"busy\"}".to_string())
                } else {
                    let answer = OracleBackend::default().complete(&prompt, &Sampling::default()).text;
                    let doc = json!({
                        "choices": [{
                            "message": {"role": "assistant", "content": answer, "reasoning_content": "Wait, wait. Done."},
                            "finish_reason": "stop"
                        }],
                        "usage": {"prompt_tokens": 120, "completion_tokens": 30}
                    });
                    ("200 OK", doc.to_string())
                };
                g.leave();
                let response = format!(
                    "HTTP/1.1 {status}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{payload}",
                    payload.len()
                );
                let _ = stream.write_all(response.as_bytes());
            });
        }
    });
    Stub { url, requests, gauge }
}

#[test]
fn http_backend_against_stub_server() {
    let stub = spawn_stub(0);
    let backend = HttpBackend::new(&stub.url, "stub-model", Some("secret".into())).unwrap();
    let config = SolverConfig { batch_size: 3, ..quick(4) };
    let records = run_batch(ProblemId::ThreeSat, &[1], &backend, &config).unwrap();
    assert_eq!(records.len(), 8);
    for r in &records {
        assert!(r.ok(), "{:?}", r.outcome);
        assert_eq!((r.prompt_tokens, r.completion_tokens, r.aha_count), (120, 30, 2));
        assert_eq!(r.model, "stub-model");
    }
    assert!(stub.gauge.peak.load(Ordering::SeqCst) <= 3);
    let requests = stub.requests.lock().unwrap();
    assert_eq!(requests.len(), 8);
    let (auth, body) = &requests[0];
    assert_eq!(auth, "Bearer secret");
    assert_eq!(body["model"], "stub-model");
    assert_eq!(body["temperature"], json!(0.6));
    assert_eq!(body["top_p"], json!(0.95));
    assert_eq!(body["max_tokens"], json!(7500));
    assert_eq!(body["messages"][0]["role"], "user");
}

#[test]
fn http_errors_are_retried() {
    let stub = spawn_stub(2);
    let backend = HttpBackend::new(&stub.url, "stub-model", None).unwrap().with_max_concurrency(1);
    let config = SolverConfig { n_trials: 1, seeds: vec![9], ..quick(1) };
    let records = run_batch(ProblemId::ThreeSat, &[1], &backend, &config).unwrap();
    assert_eq!(records[0].attempts, 3);
    assert!(records[0].ok());
    assert!(stub.requests.lock().unwrap()[0].0.is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_cardinality_and_order(levels in prop::collection::btree_set(1u32..=3, 1..3), trials in 1u32..4, seeds in prop::collection::vec(0u64..100, 1..3)) {
        let levels: Vec<u32> = levels.into_iter().collect();
        let config = SolverConfig { n_trials: trials, seeds: seeds.clone(), batch_size: 4, retry_backoff: Duration::ZERO, ..SolverConfig::default() };
        let records = run_batch(ProblemId::Partition, &levels, &RandomBackend::default(), &config).unwrap();
        prop_assert_eq!(records.len(), levels.len() * seeds.len() * trials as usize);
        let mut expected = Vec::new();
        for &l in &levels {
            for &s in &seeds {
                for t in 0..trials {
                    expected.push((l, s, t));
                }
            }
        }
        let got: Vec<(u32, u64, u32)> = records.iter().map(|r| (r.level, r.seed, r.trial_index)).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn comment_stripping_keeps_plain_strings(s in "[a-zA-Z0-9 _.,:;!?'()\\[\\]-]{0,40}") {
        let doc = json!({"solution": s}).to_string();
        prop_assert_eq!(strip_comments(&doc), doc.clone());
        prop_assert_eq!(extract_solution(&format!("```json\n{doc}\n```")).unwrap(), json!(s));
    }

    #[test]
    fn extraction_never_panics(text in ".{0,200}") {
        let _ = extract_solution(&text);
    }

    #[test]
    fn earliest_stage_wins(a in 0i64..1000, b in 0i64..1000, c in 0i64..1000) {
        let text = format!("{{\"solution\": {c}}} json {{\"solution\": {b}}}\n```json\n{{\"solution\": {a}}}\n```");
        prop_assert_eq!(extract_solution(&text).unwrap(), json!(a));
        let text = format!("{{\"solution\": {c}}} json {{\"solution\": {b}}} {{\"solution\": {a}}}");
        prop_assert_eq!(extract_solution(&text).unwrap(), json!(b));
    }
}
