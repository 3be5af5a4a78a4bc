//! Deterministic candidate vectors for sampling-based searches.
//!
//! Every sampled quantity in the crate draws from the same stream: the dual
//! basis (resp. basis) vectors, then all pairwise sums, then seeded random
//! integer vectors whose coefficient bound doubles every round. Fixed seed
//! in, identical candidates out.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

const ROUND: usize = 16;
const BASE_BOUND: i64 = 3;

pub struct CandidateVectors {
    n: usize,
    rng: ChaCha8Rng,
    stage: Stage,
    emitted_random: usize,
}

enum Stage {
    Unit(usize),
    Pair(usize, usize),
    Random,
}

impl CandidateVectors {
    pub fn new(n: usize, seed: u64) -> Self {
        CandidateVectors {
            n,
            rng: ChaCha8Rng::seed_from_u64(seed),
            stage: Stage::Unit(0),
            emitted_random: 0,
        }
    }

    /// Coefficient bound for the current random round.
    fn bound(&self) -> i64 {
        let round = (self.emitted_random / ROUND) as u32;
        BASE_BOUND.saturating_mul(1i64 << round.min(20))
    }
}

impl Iterator for CandidateVectors {
    type Item = Vec<Rational>;

    fn next(&mut self) -> Option<Vec<Rational>> {
        loop {
            match self.stage {
                Stage::Unit(i) => {
                    if i + 1 < self.n {
                        self.stage = Stage::Unit(i + 1);
                    } else {
                        self.stage = Stage::Pair(0, 1);
                    }
                    return Some(crate::matrix::unit_vector(self.n, i));
                }
                Stage::Pair(i, j) => {
                    if self.n < 2 {
                        self.stage = Stage::Random;
                        continue;
                    }
                    let mut v = crate::matrix::unit_vector(self.n, i);
                    v[j] = Rational::one();
                    self.stage = if j + 1 < self.n {
                        Stage::Pair(i, j + 1)
                    } else if i + 2 < self.n {
                        Stage::Pair(i + 1, i + 2)
                    } else {
                        Stage::Random
                    };
                    return Some(v);
                }
                Stage::Random => {
                    let b = self.bound();
                    self.emitted_random += 1;
                    let v: Vec<Rational> = (0..self.n)
                        .map(|_| Rational::from_int(self.rng.gen_range(-b..=b)))
                        .collect();
                    if v.iter().all(Rational::is_zero) {
                        continue;
                    }
                    return Some(v);
                }
            }
        }
    }
}

/// The deterministic enumeration: all dual/basis units, all pairwise sums,
/// then `budget` nonzero random vectors.
pub fn candidates(n: usize, budget: usize, seed: u64) -> Vec<Vec<Rational>> {
    let deterministic = n + n.saturating_sub(1) * n / 2;
    CandidateVectors::new(n, seed)
        .take(deterministic + budget)
        .collect()
}

/// Only the seeded random tail of the stream.
pub fn random_vectors(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut it = CandidateVectors::new(n, seed);
    it.stage = Stage::Random;
    it.take(count).collect()
}
