//! Runs the answer extractor over some typical model replies.

use npbench::solver::{count_aha, extract_solution};

fn main() {
    let replies = [
        "The cover is {1, 3}.\n```json\n{\"solution\": [1, 3]}\n```",
        "Wait, let me recheck. json {\"solution\": [0, 2] /* fixed */}",
        "First guess {\"solution\": [4]}, final {\"solution\": [5]}",
        "{\"answer\": [1]}",
        "I ran out of time before finishing",
    ];
    for reply in replies {
        let verdict = match extract_solution(reply) {
            Ok(v) => format!("solution {v}"),
            Err(e) => format!("error: {e}"),
        };
        println!("{:<60} -> {verdict} (aha: {})", reply.replace('\n', " "), count_aha(reply));
    }
}
