//! Seeded integer sample points. Every point depends only on `(seed, trial)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vector;
use crate::poly::Poly;
use crate::rational::{q, Q};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BOUND: i64 = 10;
/// Bound of the first witness grid; doubled when a search comes up empty.
pub const WITNESS_BOUND: i64 = 3;

/// Integer point in `[-bound, bound]^dim` for trial number `trial`.
pub fn sample_point(seed: u64, trial: u64, dim: usize, bound: i64) -> Vector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..dim).map(|_| q(rng.gen_range(-bound..=bound))).collect()
}

/// A nonzero integer in `[-bound, bound]`.
pub fn sample_nonzero(seed: u64, trial: u64, bound: i64) -> Q {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    rng.set_stream(trial);
    let v = rng.gen_range(1..=bound.max(1));
    q(if rng.gen_bool(0.5) { v } else { -v })
}

/// A point where `p` does not vanish: grid `[-3, 3]` first, widening on failure.
pub fn find_nonzero_point(p: &Poly, seed: u64) -> Option<Vector> {
    if p.is_zero() {
        return None;
    }
    let mut bound = WITNESS_BOUND;
    let mut trial = 0u64;
    for _ in 0..8 {
        for _ in 0..64 {
            let x = sample_point(seed, trial, p.nvars(), bound);
            trial += 1;
            if !num_traits::Zero::is_zero(&p.eval(&x)) {
                return Some(x);
            }
        }
        bound *= 2;
    }
    None
}
