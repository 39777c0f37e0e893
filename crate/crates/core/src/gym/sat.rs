use rand::seq::index;
use rand::{Rng, RngCore};
use serde_json::Value;

use super::candidate::bit_list;
use super::{infeasible, problem_error, Check};
use crate::error::Result;
use crate::model::schema::{Payload, ThreeSat};
use crate::model::{GenConfig, ProblemId};

pub(crate) fn generate(cfg: &GenConfig, rng: &mut dyn RngCore) -> Result<(Payload, Value)> {
    let n = cfg.get_usize("num_variables")?;
    let m = cfg.get_usize("num_clauses")?;
    if n < 3 {
        return Err(infeasible(ProblemId::ThreeSat, "clauses need three distinct variables"));
    }
    let assignment: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let clauses = (0..m)
        .map(|_| {
            let vars = index::sample(rng, n, 3);
            let mut clause = [0i64; 3];
            for (slot, var) in clause.iter_mut().zip(vars.iter()) {
                let lit = var as i64 + 1;
                *slot = if rng.random_bool(0.5) { lit } else { -lit };
            }
            let satisfied = clause.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0));
            if !satisfied {
                let i = rng.random_range(0..3);
                clause[i] = -clause[i];
            }
            clause
        })
        .collect();
    Ok((Payload::ThreeSat(ThreeSat { num_vars: n, clauses }), Value::from(assignment)))
}

pub(crate) fn verify(inst: &ThreeSat, candidate: &Value) -> Check {
    let assignment = bit_list(candidate, "assignment")?;
    if assignment.len() != inst.num_vars {
        return Err(problem_error(
            1,
            format!("assignment has {} values for {} variables", assignment.len(), inst.num_vars),
        ));
    }
    for (i, clause) in inst.clauses.iter().enumerate() {
        if !clause.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)) {
            return Err(problem_error(2, format!("clause {} {clause:?} is not satisfied", i + 1)));
        }
    }
    Ok(())
}

pub(crate) fn random(inst: &ThreeSat, rng: &mut dyn RngCore) -> Value {
    Value::from((0..inst.num_vars).map(|_| rng.random_bool(0.5)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ErrorCode;
    use serde_json::json;

    fn single_clause() -> ThreeSat {
        ThreeSat { num_vars: 3, clauses: vec![[1, -2, 3]] }
    }

    #[test]
    fn first_literal_satisfies() {
        assert!(verify(&single_clause(), &json!([true, false, false])).is_ok());
        assert!(verify(&single_clause(), &json!([1, 0, 0])).is_ok());
    }

    #[test]
    fn error_order() {
        let inst = ThreeSat { num_vars: 5, clauses: vec![[1, 2, 3]] };
        let e = verify(&inst, &json!([true, true, true, true])).unwrap_err();
        assert_eq!(e.code, ErrorCode::problem(1));
        let e = verify(&single_clause(), &json!([false, true, false])).unwrap_err();
        assert_eq!(e.code, ErrorCode::problem(2));
        let e = verify(&single_clause(), &json!("TFF")).unwrap_err();
        assert_eq!(e.code, ErrorCode::VERIFICATION);
    }
}
