use npbench::gym::{generate_level, verify_solution};
use npbench::model::{canonical_serialize, DifficultyLadder, ProblemId};

#[test]
fn planted_solutions_verify_at_every_level() {
    let ladder = DifficultyLadder::builtin();
    for problem in ProblemId::ALL {
        for (level, _) in ladder.levels(problem) {
            for seed in [0u64, 1, 42, 53, 64] {
                let pair = generate_level(problem, level, seed)
                    .unwrap_or_else(|e| panic!("{problem} level {level} seed {seed}: {e}"));
                let out = verify_solution(&pair.instance, &pair.planted);
                assert!(out.ok, "{problem} level {level} seed {seed}: {:?} {}", out.error, out.message);
            }
        }
    }
}

#[test]
fn generation_is_deterministic() {
    for problem in ProblemId::ALL {
        let a = generate_level(problem, 2, 7).unwrap();
        let b = generate_level(problem, 2, 7).unwrap();
        assert_eq!(canonical_serialize(&a.instance).unwrap(), canonical_serialize(&b.instance).unwrap());
        assert_eq!(a.planted, b.planted);
    }
}
