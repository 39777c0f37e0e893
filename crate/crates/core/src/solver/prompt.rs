//! Prompt rendering, plus the inverse parsing used by offline backends.

use crate::error::{Error, Result};
use crate::gym::{GeneratedPair, ProblemDescriptor};
use crate::model::{Instance, ProblemId};

const PROBLEM_TO_SOLVE: &str = "# Problem to Solve: \nProblem: ";
const INSTRUCTION: &str = "\n\n# Instruction:\n";

/// A rendered prompt and the in-context examples it embeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromptBundle {
    pub text: String,
    pub shots: usize,
    /// (instance rendering, solution rendering) per example, in prompt order.
    pub example_pairs: Vec<(String, String)>,
}

pub fn render_prompt(
    descriptor: &ProblemDescriptor,
    examples: &[GeneratedPair],
    target: &Instance,
) -> Result<PromptBundle> {
    if examples.is_empty() {
        return Err(Error::ProblemMismatch("a prompt needs at least one in-context example".into()));
    }
    if target.problem != descriptor.id {
        return Err(Error::ProblemMismatch(format!(
            "target is {} but the descriptor is {}",
            target.problem, descriptor.id
        )));
    }
    let mut example_pairs = Vec::with_capacity(examples.len());
    for ex in examples {
        if ex.instance.problem != descriptor.id {
            return Err(Error::ProblemMismatch(format!(
                "example is {} but the descriptor is {}",
                ex.instance.problem, descriptor.id
            )));
        }
        example_pairs.push((ex.instance.render()?, ex.planted.render()?));
    }

    let mut blocks = String::new();
    for (problem, solution) in &example_pairs {
        blocks.push_str(&format!("Problem: {problem}\n{{\"solution\": {solution}}}\n"));
    }
    let text = format!(
        "\n# {name} Problem Description:\n{description}\n\n# Examples:\n{blocks}\n{PROBLEM_TO_SOLVE}{target}{INSTRUCTION}\
Now please solve the above problem. Reason step by step and present your answer in the \"solution\" field in the following json format:\n\
```json\n{{\"solution\": \"___\" }}\n```\n\n",
        name = descriptor.id.name(),
        description = descriptor.description_text,
        target = target.render()?,
    );
    Ok(PromptBundle { text, shots: example_pairs.len(), example_pairs })
}

/// Recovers the problem and target instance from a rendered prompt.
pub fn parse_prompt(text: &str) -> Result<Instance> {
    let bad = |what: &str| Error::Backend(format!("prompt does not follow the template: {what}"));
    let name = text
        .strip_prefix("\n# ")
        .and_then(|rest| rest.split_once(" Problem Description:\n"))
        .map(|(name, _)| name)
        .ok_or_else(|| bad("missing problem header"))?;
    let problem: ProblemId = name.parse()?;
    let start = text.rfind(PROBLEM_TO_SOLVE).ok_or_else(|| bad("missing target section"))? + PROBLEM_TO_SOLVE.len();
    let len = text[start..].find(INSTRUCTION).ok_or_else(|| bad("missing instruction section"))?;
    let payload = serde_json::from_str(&text[start..start + len])?;
    let instance = Instance::new(problem, None, 0, payload);
    instance.parsed()?;
    Ok(instance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gym::{descriptor, generate_level};

    fn bundle(problem: ProblemId) -> (PromptBundle, Instance) {
        let target = generate_level(problem, 1, 5).unwrap().instance;
        let example = generate_level(problem, 1, 6).unwrap();
        (render_prompt(&descriptor(problem), &[example], &target).unwrap(), target)
    }

    #[test]
    fn sections_appear_in_order() {
        let (b, _) = bundle(ProblemId::ThreeSat);
        let headers = ["# 3SAT Problem Description:", "# Examples:", "# Problem to Solve:", "# Instruction:"];
        let positions: Vec<usize> = headers.iter().map(|h| b.text.find(h).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(b.shots, 1);
        assert!(b.text.ends_with("```json\n{\"solution\": \"___\" }\n```\n\n"));
    }

    #[test]
    fn round_trips_through_parse() {
        for problem in ProblemId::ALL {
            let (b, target) = bundle(problem);
            let parsed = parse_prompt(&b.text).unwrap();
            assert_eq!(parsed.problem, problem);
            assert_eq!(parsed.payload, target.payload);
        }
    }

    #[test]
    fn rejects_empty_or_mixed_examples() {
        let target = generate_level(ProblemId::ThreeSat, 1, 1).unwrap().instance;
        let d = descriptor(ProblemId::ThreeSat);
        assert!(matches!(render_prompt(&d, &[], &target), Err(Error::ProblemMismatch(_))));
        let other = generate_level(ProblemId::Partition, 1, 1).unwrap();
        assert!(matches!(render_prompt(&d, &[other], &target), Err(Error::ProblemMismatch(_))));
    }
}
