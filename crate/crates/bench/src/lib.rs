//! Seeded inputs shared by the benchmarks.

use tiltwork_core::fpmod::FpModule;
use tiltwork_core::sampling::{Bounds, Sampler};
use tiltwork_core::{IntMatrix, RingSpec};

pub const SEED: u64 = 7;

/// `count` square integer matrices of size `n` with entries in `[-bound, bound]`.
pub fn square_matrices(n: usize, bound: i64, count: usize) -> Vec<IntMatrix> {
    let mut s = Sampler::new(SEED).with_bounds(Bounds { max_rank: n, max_entry: bound, ..Bounds::default() });
    (0..count).map(|_| s.matrix(RingSpec::Integers, n, n)).collect()
}

/// Pairs of finitely presented abelian groups.
pub fn module_pairs(count: usize) -> Vec<(FpModule, FpModule)> {
    let mut s = Sampler::new(SEED);
    (0..count).map(|_| (s.module(RingSpec::Integers), s.module(RingSpec::Integers))).collect()
}
