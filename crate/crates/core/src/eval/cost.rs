//! Token cost accounting in exact decimal arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::solver::TrialRecord;

pub type Money = Ratio<u128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Currency {
    #[serde(rename = "USD")]
    Usd,
    #[serde(rename = "RMB")]
    Rmb,
}

impl fmt::Display for Currency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Currency::Usd => "USD",
            Currency::Rmb => "RMB",
        })
    }
}

/// Prices per million tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Price {
    pub prompt_per_million: Money,
    pub completion_per_million: Money,
    pub currency: Currency,
}

impl Price {
    /// Prices given as decimal strings, e.g. `"0.15"`.
    pub fn new(prompt: &str, completion: &str, currency: Currency) -> Result<Self> {
        Ok(Price {
            prompt_per_million: parse_decimal(prompt)?,
            completion_per_million: parse_decimal(completion)?,
            currency,
        })
    }

    pub fn cost(&self, prompt_tokens: u64, completion_tokens: u64) -> Money {
        let million = Money::from_integer(1_000_000);
        (self.prompt_per_million * u128::from(prompt_tokens)
            + self.completion_per_million * u128::from(completion_tokens))
            / million
    }
}

/// Parses a nonnegative decimal such as `2`, `0.15` or `1.10` exactly.
pub fn parse_decimal(text: &str) -> Result<Money> {
    let bad = || Error::InvalidPrice(format!("`{text}` is not a nonnegative decimal"));
    let (whole, frac) = text.trim().split_once('.').unwrap_or((text.trim(), ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
        || frac.len() > 18
    {
        return Err(bad());
    }
    let digits: u128 = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    Ok(Money::new(digits, 10u128.pow(frac.len() as u32)))
}

/// Rounds half up to cents and prints with two decimals.
pub fn format_money(amount: Money) -> String {
    let cents = (amount * 100u128 + Money::new(1, 2)).floor().to_integer();
    format!("{}.{:02}", cents / 100, cents % 100)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PriceTable {
    pub models: BTreeMap<String, Price>,
}

impl PriceTable {
    /// Reads `{"model": {"prompt": 0.15, "completion": 0.6, "currency": "USD"}, ...}`.
    /// Prices may be JSON numbers or decimal strings.
    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::InvalidPrice("price table must be an object".into()))?;
        let mut models = BTreeMap::new();
        for (model, entry) in obj {
            let field = |name: &str| -> Result<String> {
                match entry.get(name) {
                    Some(Value::Number(n)) => Ok(n.to_string()),
                    Some(Value::String(s)) => Ok(s.clone()),
                    _ => Err(Error::InvalidPrice(format!("{model}: missing `{name}` price"))),
                }
            };
            let currency: Currency = serde_json::from_value(entry.get("currency").cloned().unwrap_or(Value::Null))
                .map_err(|_| Error::InvalidPrice(format!("{model}: currency must be USD or RMB")))?;
            models.insert(model.clone(), Price::new(&field("prompt")?, &field("completion")?, currency)?);
        }
        Ok(PriceTable { models })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostLine {
    pub model: String,
    pub currency: Currency,
    pub prompt_tokens: u64,
    pub completion_tokens: u64,
    pub total: Money,
}

impl CostLine {
    pub fn display_total(&self) -> String {
        format_money(self.total)
    }
}

/// Money spent per model, from the token counts in the records.
pub fn cost_report(records: &[TrialRecord], prices: &PriceTable) -> Result<Vec<CostLine>> {
    let mut tokens: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    for r in records {
        let t = tokens.entry(&r.model).or_default();
        t.0 += r.prompt_tokens;
        t.1 += r.completion_tokens;
    }
    tokens
        .into_iter()
        .map(|(model, (p, c))| {
            let price = prices.models.get(model).ok_or_else(|| Error::UnpricedModel(model.to_string()))?;
            Ok(CostLine {
                model: model.to_string(),
                currency: price.currency,
                prompt_tokens: p,
                completion_tokens: c,
                total: price.cost(p, c),
            })
        })
        .collect()
}
