//! Deterministic randomness: every generator draws from a ChaCha stream
//! seeded by a 64-bit value, and per-trial seeds are stable hashes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::problem::ProblemId;

/// XOR mask separating an in-context example's seed from its target's.
pub const EXAMPLE_SEED_MASK: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// First eight bytes (big-endian) of SHA-256 over `parts` joined by `|`.
pub fn stable_hash(parts: &[&str]) -> u64 {
    let digest = Sha256::digest(parts.join("|").as_bytes());
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    u64::from_be_bytes(bytes)
}

/// Seed of the `trial`-th instance of `(problem, level)` within an experiment seed.
pub fn trial_seed(experiment_seed: u64, problem: ProblemId, level: u32, trial: u32) -> u64 {
    stable_hash(&[
        &experiment_seed.to_string(),
        problem.name(),
        &level.to_string(),
        &trial.to_string(),
    ])
}

pub fn example_seed(trial_seed: u64) -> u64 {
    trial_seed ^ EXAMPLE_SEED_MASK
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_seeds_are_stable_and_distinct() {
        let a = trial_seed(42, ProblemId::ThreeSat, 1, 0);
        assert_eq!(a, trial_seed(42, ProblemId::ThreeSat, 1, 0));
        assert_ne!(a, trial_seed(42, ProblemId::ThreeSat, 1, 1));
        assert_ne!(a, trial_seed(53, ProblemId::ThreeSat, 1, 0));
        assert_ne!(a, trial_seed(42, ProblemId::VertexCover, 1, 0));
        assert_ne!(a, example_seed(a));
        // Frozen: changing the derivation would silently change every benchmark run.
        assert_eq!(stable_hash(&["abc"]), 0xba78_16bf_8f01_cfea);
    }
}
