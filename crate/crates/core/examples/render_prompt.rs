//! Prints the one-shot prompt a model would see for a Subset Sum instance.

use npbench::gym::{descriptor, generate_level};
use npbench::model::ProblemId;
use npbench::solver::{parse_prompt, render_prompt};

fn main() -> npbench::Result<()> {
    let problem = ProblemId::SubsetSum;
    let example = generate_level(problem, 2, 1)?;
    let target = generate_level(problem, 2, 2)?;
    let bundle = render_prompt(&descriptor(problem), &[example], &target.instance)?;
    println!("{}", bundle.text);

    // The target can be recovered from the prompt text alone.
    assert_eq!(parse_prompt(&bundle.text)?.payload, target.instance.payload);
    Ok(())
}
