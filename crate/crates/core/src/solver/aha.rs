//! Counting self-correction cues ("wait") in reasoning text.

use std::sync::LazyLock;

use regex::Regex;

pub const DEFAULT_LEXICON: &[&str] = &["wait"];

static DEFAULT: LazyLock<Regex> = LazyLock::new(|| lexicon_regex(DEFAULT_LEXICON));

fn lexicon_regex(words: &[&str]) -> Regex {
    let alternatives: Vec<String> = words.iter().map(|w| regex::escape(w)).collect();
    Regex::new(&format!(r"(?i)\b(?:{})\b", alternatives.join("|"))).unwrap()
}

/// Case-insensitive whole-word occurrences of "wait".
pub fn count_aha(text: &str) -> u64 {
    DEFAULT.find_iter(text).count() as u64
}

pub fn count_aha_with(text: &str, lexicon: &[&str]) -> u64 {
    if lexicon.is_empty() {
        return 0;
    }
    lexicon_regex(lexicon).find_iter(text).count() as u64
}
