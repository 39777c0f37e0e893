//! String problems: Shortest Common Superstring, Hitting String.

use std::collections::HashSet;

use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::string;
use super::sample::MAX_ATTEMPTS;
use super::{infeasible, problem_error, Check};
use crate::error::Result;
use crate::model::schema::{HittingString, Payload, Superstring};
use crate::model::{GenConfig, ProblemId};

pub(crate) fn generate_superstring(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("n")?;
    let count = cfg.get_usize("k")?;
    if n < 2 {
        return Err(infeasible(ProblemId::Superstring, "the hidden string needs length at least 2"));
    }
    let word: String = (0..n).map(|_| rng.random_range(b'a'..=b'z') as char).collect();
    let max_len = (n / 5).max(3).min(n);
    let mut seen = HashSet::new();
    let mut strings = Vec::with_capacity(count);
    for _ in 0..count {
        let fresh = (0..MAX_ATTEMPTS)
            .map(|_| {
                let len = rng.random_range(2..=max_len);
                let start = rng.random_range(0..=n - len);
                word[start..start + len].to_string()
            })
            .find(|s| !seen.contains(s))
            .ok_or_else(|| infeasible(ProblemId::Superstring, format!("fewer than {count} distinct substrings")))?;
        seen.insert(fresh.clone());
        strings.push(fresh);
    }
    Ok((Payload::Superstring(Superstring { strings, k: n }), Value::from(word)))
}

pub(crate) fn verify_superstring(inst: &Superstring, candidate: &Value) -> Check {
    let s = string(candidate, "superstring").map_err(|r| problem_error(1, r.message))?;
    let len = s.chars().count();
    if len > inst.k {
        return Err(problem_error(2, format!("length {len} exceeds {}", inst.k)));
    }
    if let Some(missing) = inst.strings.iter().find(|t| !s.contains(t.as_str())) {
        return Err(problem_error(3, format!("`{missing}` is not a substring")));
    }
    Ok(())
}

/// A random string of the maximum length over the letters the instance uses.
pub(crate) fn random_superstring(inst: &Superstring, rng: &mut dyn RngCore) -> Value {
    let mut letters: Vec<char> = inst.strings.iter().flat_map(|s| s.chars()).collect();
    letters.sort_unstable();
    letters.dedup();
    if letters.is_empty() {
        letters.push('a');
    }
    Value::from((0..inst.k).map(|_| letters[rng.random_range(0..letters.len())]).collect::<String>())
}

pub(crate) fn generate_hitting_string(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("n")?;
    let m = cfg.get_usize("m")?;
    let hidden: Vec<u8> = (0..n).map(|_| if rng.random_bool(0.5) { b'1' } else { b'0' }).collect();
    let mut seen = HashSet::new();
    let mut strings = Vec::with_capacity(m);
    for _ in 0..m {
        let fresh = (0..MAX_ATTEMPTS)
            .map(|_| {
                let mut s: Vec<u8> = (0..n).map(|_| b"01*"[rng.random_range(0..3)]).collect();
                let i = rng.random_range(0..n);
                s[i] = hidden[i];
                String::from_utf8(s).expect("ascii")
            })
            .find(|s| !seen.contains(s))
            .ok_or_else(|| infeasible(ProblemId::HittingString, format!("fewer than {m} distinct patterns")))?;
        seen.insert(fresh.clone());
        strings.push(fresh);
    }
    let inst = HittingString { n, strings };
    Ok((Payload::HittingString(inst), Value::from(String::from_utf8(hidden).expect("ascii"))))
}

pub(crate) fn verify_hitting_string(inst: &HittingString, candidate: &Value) -> Check {
    let x = string(candidate, "hitting string")?;
    if x.chars().count() != inst.n {
        return Err(problem_error(1, format!("length {} instead of {}", x.chars().count(), inst.n)));
    }
    if let Some(c) = x.chars().find(|c| !matches!(c, '0' | '1')) {
        return Err(problem_error(2, format!("`{c}` is not a binary digit")));
    }
    let x = x.as_bytes();
    if let Some(s) = inst.strings.iter().find(|s| !s.bytes().zip(x).any(|(p, b)| p == *b)) {
        return Err(problem_error(3, format!("`{s}` is not hit")));
    }
    Ok(())
}

pub(crate) fn random_binary_string(n: usize, rng: &mut dyn RngCore) -> Value {
    Value::from((0..n).map(|_| if rng.random_bool(0.5) { '1' } else { '0' }).collect::<String>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ErrorCode;
    use serde_json::json;

    fn code(r: Check) -> Option<ErrorCode> {
        r.err().map(|r| r.code)
    }

    #[test]
    fn superstring_codes() {
        let s = Superstring { strings: vec!["ab".into(), "bc".into()], k: 3 };
        assert_eq!(code(verify_superstring(&s, &json!("abc"))), None);
        assert_eq!(code(verify_superstring(&s, &json!(["abc"]))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_superstring(&s, &json!("abbc"))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_superstring(&s, &json!("abd"))), Some(ErrorCode::problem(3)));
    }

    #[test]
    fn hitting_string_codes() {
        let h = HittingString { n: 3, strings: vec!["1**".into(), "*0*".into()] };
        assert_eq!(code(verify_hitting_string(&h, &json!("101"))), None);
        assert_eq!(code(verify_hitting_string(&h, &json!("11"))), Some(ErrorCode::problem(1)));
        assert_eq!(code(verify_hitting_string(&h, &json!("1*1"))), Some(ErrorCode::problem(2)));
        assert_eq!(code(verify_hitting_string(&h, &json!("011"))), Some(ErrorCode::problem(3)));
        assert_eq!(code(verify_hitting_string(&h, &json!(111))), Some(ErrorCode::VERIFICATION));
    }
}
