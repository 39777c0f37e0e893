//! Sends one prompt to an OpenAI-compatible chat endpoint.
//!
//! Run with:
//!   NPBENCH_ENDPOINT=http://localhost:8000/v1/chat/completions \
//!   NPBENCH_MODEL=my-model cargo run --example http_backend
//!
//! `NPBENCH_API_KEY` is sent as a bearer token when set.

use npbench::gym::{descriptor, generate_level, verify_solution};
use npbench::model::{ProblemId, Solution};
use npbench::solver::{extract_solution, render_prompt, Backend, HttpBackend, Sampling};

fn main() -> npbench::Result<()> {
    let backend = HttpBackend::from_env(None, None)?;
    let problem = ProblemId::ThreeSat;
    let example = generate_level(problem, 1, 1)?;
    let target = generate_level(problem, 1, 2)?;
    let prompt = render_prompt(&descriptor(problem), &[example], &target.instance)?;

    let reply = backend.complete(&prompt.text, &Sampling::self_hosted());
    println!("finish: {:?}, tokens: {}/{}", reply.finish, reply.prompt_tokens, reply.completion_tokens);
    println!("{}", reply.text);
    match extract_solution(&reply.text) {
        Ok(v) => println!("verdict: {:?}", verify_solution(&target.instance, &Solution(v))),
        Err(e) => println!("no answer: {e}"),
    }
    Ok(())
}
