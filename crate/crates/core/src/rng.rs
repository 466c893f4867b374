//! Deterministic pseudo-random generation.
//!
//! All randomized construction in this crate (instance generators, trial
//! seeds) flows through SplitMix64 so that a seed reproduces the same
//! objects across runs, platforms, and reimplementations in other
//! languages. The algorithm is pinned by its published constants:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! All arithmetic is modulo 2^64.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 stream seeded with an arbitrary 64-bit value.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform draw from `0..n` (Lemire reduction). Panics if `n == 0`.
    pub fn next_below(&mut self, n: usize) -> usize {
        assert!(n > 0, "next_below: empty range");
        let x = self.next_u64();
        ((x as u128 * n as u128) >> 64) as usize
    }

    /// Bernoulli draw with probability `num/den` (requires `num <= den`,
    /// `den > 0`). Consumes exactly one stream value.
    pub fn next_bernoulli(&mut self, num: u64, den: u64) -> bool {
        assert!(den > 0 && num <= den, "next_bernoulli: bad probability");
        let x = self.next_u64();
        ((x as u128 * den as u128) >> 64) < num as u128
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i + 1);
            items.swap(i, j);
        }
    }
}

fn mix(state: u64) -> u64 {
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `k`-th output (0-based) of the stream seeded with `seed`, computed
/// without iterating. Used to derive independent per-trial seeds from an
/// experiment seed.
pub fn nth_output(seed: u64, k: u64) -> u64 {
    mix(seed.wrapping_add(k.wrapping_add(1).wrapping_mul(GAMMA)))
}
