//! Difficulty parameters and the published level ladder.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::problem::{ParamKind, ProblemId};
use crate::error::{Error, Result};

const BUILTIN_LADDER: &str = include_str!("../../data/ladder.json");

/// A single difficulty parameter value.
///
/// Probabilities are exact rationals so that configs stay hashable and
/// serialize canonically (`"3/10"`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Int(u64),
    Bool(bool),
    Probability(Ratio<u64>),
}

impl ParamValue {
    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::Bool(b) => Ok(ParamValue::Bool(*b)),
            Value::Number(n) => {
                if let Some(i) = n.as_u64() {
                    Ok(ParamValue::Int(i))
                } else if n.is_f64() {
                    // Shortest round-trip text of the float is the decimal the user wrote.
                    parse_decimal(&n.to_string()).map(ParamValue::Probability)
                } else {
                    Err(Error::SchemaViolation(format!("negative parameter value {n}")))
                }
            }
            Value::String(s) => parse_ratio(s).map(ParamValue::Probability),
            other => Err(Error::SchemaViolation(format!("unsupported parameter value {other}"))),
        }
    }

    fn to_json(self) -> Value {
        match self {
            ParamValue::Int(i) => Value::from(i),
            ParamValue::Bool(b) => Value::Bool(b),
            ParamValue::Probability(r) => Value::String(format!("{}/{}", r.numer(), r.denom())),
        }
    }

    fn kind(self) -> ParamKind {
        match self {
            ParamValue::Int(_) => ParamKind::Int,
            ParamValue::Bool(_) => ParamKind::Bool,
            ParamValue::Probability(_) => ParamKind::Probability,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Bool(b) => write!(f, "{b}"),
            ParamValue::Probability(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::SchemaViolation(format!("invalid probability `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            let d: u64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => parse_decimal(s),
    }
}

fn parse_decimal(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::SchemaViolation(format!("invalid probability `{s}`"));
    let s = s.trim();
    let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
    if frac_part.len() > 18 || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let int: u64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
    let den = 10u64.pow(frac_part.len() as u32);
    let frac: u64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
    let num = int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
    Ok(Ratio::new(num, den))
}

/// Generator parameters for one problem, keyed by parameter name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenConfig {
    params: BTreeMap<String, ParamValue>,
}

impl GenConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn int(self, name: &str, value: u64) -> Self {
        self.with(name, ParamValue::Int(value))
    }

    pub fn flag(self, name: &str, value: bool) -> Self {
        self.with(name, ParamValue::Bool(value))
    }

    pub fn probability(self, name: &str, numer: u64, denom: u64) -> Self {
        self.with(name, ParamValue::Probability(Ratio::new(numer, denom)))
    }

    pub fn params(&self) -> &BTreeMap<String, ParamValue> {
        &self.params
    }

    pub fn get(&self, name: &str) -> Option<ParamValue> {
        self.params.get(name).copied()
    }

    pub fn get_int(&self, name: &str) -> Result<u64> {
        match self.get(name) {
            Some(ParamValue::Int(v)) => Ok(v),
            _ => Err(Error::Config(format!("missing integer parameter `{name}`"))),
        }
    }

    pub fn get_usize(&self, name: &str) -> Result<usize> {
        self.get_int(name).map(|v| v as usize)
    }

    pub fn get_bool(&self, name: &str) -> Result<bool> {
        match self.get(name) {
            Some(ParamValue::Bool(v)) => Ok(v),
            _ => Err(Error::Config(format!("missing boolean parameter `{name}`"))),
        }
    }

    pub fn get_probability(&self, name: &str) -> Result<Ratio<u64>> {
        match self.get(name) {
            Some(ParamValue::Probability(v)) => Ok(v),
            _ => Err(Error::Config(format!("missing probability parameter `{name}`"))),
        }
    }

    /// Checks names, kinds and ranges against the problem's parameter list.
    pub fn validate(&self, problem: ProblemId) -> Result<()> {
        let mismatch = |reason: String| Error::ConfigMismatch { problem: problem.name().into(), reason };
        let expected = problem.params();
        for (name, kind) in expected {
            let value = self.get(name).ok_or_else(|| mismatch(format!("missing `{name}`")))?;
            if value.kind() != *kind {
                return Err(mismatch(format!("`{name}` should be {kind:?}, got {value}")));
            }
            match value {
                ParamValue::Int(0) => return Err(mismatch(format!("`{name}` must be at least 1"))),
                ParamValue::Probability(r)
                    if *r.numer() == 0 || r.numer() > r.denom() =>
                {
                    return Err(mismatch(format!("`{name}` must lie in (0, 1], got {value}")));
                }
                _ => {}
            }
        }
        if let Some(extra) = self.params.keys().find(|k| !expected.iter().any(|(n, _)| n == k)) {
            return Err(mismatch(format!("unexpected parameter `{extra}`")));
        }
        Ok(())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::SchemaViolation("config must be a JSON object".into()))?;
        let mut params = BTreeMap::new();
        for (k, v) in obj {
            params.insert(k.clone(), ParamValue::from_json(v)?);
        }
        Ok(GenConfig { params })
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.params.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }
}

impl fmt::Display for GenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for GenConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        GenConfig::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Published difficulty levels for every problem.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DifficultyLadder {
    levels: BTreeMap<ProblemId, BTreeMap<u32, GenConfig>>,
}

impl DifficultyLadder {
    /// The ladder compiled into the engine.
    pub fn builtin() -> &'static DifficultyLadder {
        static LADDER: OnceLock<DifficultyLadder> = OnceLock::new();
        LADDER.get_or_init(|| {
            DifficultyLadder::from_json_str(BUILTIN_LADDER).expect("builtin ladder is valid")
        })
    }

    /// Parses a ladder document: `{problem name: {level: {param: value}}}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let ladder = Self::parse_levels(text)?;
        ladder.check()?;
        Ok(ladder)
    }

    fn parse_levels(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text)?;
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::InvalidLadder("top level must be an object".into()))?;
        let mut levels: BTreeMap<ProblemId, BTreeMap<u32, GenConfig>> = BTreeMap::new();
        for (name, per_level) in obj {
            let problem: ProblemId = name.parse()?;
            let per_level = per_level
                .as_object()
                .ok_or_else(|| Error::InvalidLadder(format!("{name}: levels must be an object")))?;
            let entry = levels.entry(problem).or_default();
            for (level, cfg) in per_level {
                let level: u32 = level
                    .parse()
                    .map_err(|_| Error::InvalidLadder(format!("{name}: bad level key `{level}`")))?;
                let cfg = GenConfig::from_json(cfg)?;
                cfg.validate(problem)?;
                entry.insert(level, cfg);
            }
        }
        Ok(DifficultyLadder { levels })
    }

    fn check(&self) -> Result<()> {
        for problem in ProblemId::ALL {
            let Some(levels) = self.levels.get(&problem) else {
                if problem.is_core() {
                    return Err(Error::InvalidLadder(format!("{problem}: no levels")));
                }
                continue;
            };
            for (expected, level) in (1u32..).zip(levels.keys()) {
                if *level != expected {
                    return Err(Error::InvalidLadder(format!(
                        "{problem}: levels must be contiguous from 1, found {level} where {expected} was expected"
                    )));
                }
            }
            if problem.is_core() && levels.len() < 10 {
                return Err(Error::InvalidLadder(format!("{problem}: core problems need levels 1..=10")));
            }
        }
        Ok(())
    }

    /// Returns a copy of this ladder with levels from `text` added or replaced.
    pub fn with_overrides(&self, text: &str) -> Result<Self> {
        let extra = Self::parse_levels(text)?;
        let mut merged = self.clone();
        for (problem, levels) in extra.levels {
            merged.levels.entry(problem).or_default().extend(levels);
        }
        merged.check()?;
        Ok(merged)
    }

    pub fn levels(&self, problem: ProblemId) -> impl Iterator<Item = (u32, &GenConfig)> {
        self.levels.get(&problem).into_iter().flat_map(|m| m.iter().map(|(l, c)| (*l, c)))
    }

    pub fn max_level(&self, problem: ProblemId) -> u32 {
        self.levels.get(&problem).and_then(|m| m.keys().next_back().copied()).unwrap_or(0)
    }

    pub fn level_config(&self, problem: ProblemId, level: u32) -> Result<&GenConfig> {
        self.levels.get(&problem).and_then(|m| m.get(&level)).ok_or_else(|| Error::UnknownLevel {
            problem: problem.name().into(),
            level,
            min: 1,
            max: self.max_level(problem),
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.levels
                .iter()
                .map(|(p, levels)| {
                    let inner = levels.iter().map(|(l, c)| (l.to_string(), c.to_json())).collect();
                    (p.name().to_string(), Value::Object(inner))
                })
                .collect(),
        )
    }
}

/// Looks up a published level in the builtin ladder.
pub fn level_config(problem: &str, level: u32) -> Result<GenConfig> {
    let problem: ProblemId = problem.parse()?;
    DifficultyLadder::builtin().level_config(problem, level).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        let cfg = level_config("3SAT", 1).unwrap();
        assert_eq!(cfg, GenConfig::new().int("num_variables", 5).int("num_clauses", 5));
        let cfg = level_config("TSP", 10).unwrap();
        assert_eq!(cfg, GenConfig::new().int("num_cities", 40).int("target_length", 300));
        let ds = level_config("Dominating Set", 7).unwrap();
        assert_eq!(ds.get_probability("edge_prob").unwrap(), Ratio::new(1, 5));
        assert_eq!(level_config("Clique", 13).unwrap().get_int("clique_size").unwrap(), 20);
        assert!(!level_config("Hamiltonian Cycle", 3).unwrap().get_bool("directed").unwrap());
    }

    #[test]
    fn unknown_level_reports_range() {
        match level_config("3SAT", 0) {
            Err(Error::UnknownLevel { min: 1, max: 10, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(level_config("Clique", 14), Err(Error::UnknownLevel { max: 13, .. })));
        assert!(matches!(level_config("Knapsack", 1), Err(Error::UnknownProblem(_))));
    }

    #[test]
    fn builtin_ladder_shape() {
        let ladder = DifficultyLadder::builtin();
        for p in ProblemId::ALL {
            let n = ladder.levels(p).count();
            assert!(n >= 6, "{p}");
            if p.is_core() {
                assert!(n >= 10, "{p}");
            }
        }
        assert_eq!(ladder.max_level(ProblemId::MinimumCover), 16);
        assert_eq!(ladder.max_level(ProblemId::Betweenness), 6);
    }

    #[test]
    fn probabilities_are_exact() {
        assert_eq!(parse_ratio("0.3").unwrap(), Ratio::new(3, 10));
        assert_eq!(parse_ratio("3/10").unwrap(), Ratio::new(3, 10));
        assert_eq!(parse_ratio("1").unwrap(), Ratio::new(1, 1));
        assert!(parse_ratio("1/0").is_err());
        let v = ParamValue::from_json(&serde_json::json!(0.2)).unwrap();
        assert_eq!(v.to_json(), serde_json::json!("1/5"));
    }

    #[test]
    fn validation_rejects_wrong_names_and_ranges() {
        let p = ProblemId::ThreeSat;
        assert!(GenConfig::new().int("num_variables", 5).validate(p).is_err());
        assert!(GenConfig::new().int("num_variables", 5).int("num_clauses", 0).validate(p).is_err());
        let extra = GenConfig::new().int("num_variables", 5).int("num_clauses", 5).int("x", 1);
        assert!(extra.validate(p).is_err());
        let ds = GenConfig::new().int("num_nodes", 5).int("k", 2).probability("edge_prob", 3, 2);
        assert!(ds.validate(ProblemId::DominatingSet).is_err());
    }

    #[test]
    fn overrides_append_levels() {
        let base = DifficultyLadder::builtin();
        let merged = base
            .with_overrides(r#"{"3-Satisfiability (3-SAT)": {"11": {"num_variables": 90, "num_clauses": 90}}}"#)
            .unwrap();
        assert_eq!(merged.max_level(ProblemId::ThreeSat), 11);
        assert!(base
            .with_overrides(r#"{"3SAT": {"13": {"num_variables": 90, "num_clauses": 90}}}"#)
            .is_err());
    }
}
