//! Counter-based, splittable random number generation.
//!
//! A generator state is identified by a 64-bit key and a draw counter.
//! The key is derived from a user seed plus the sequence of substream
//! indices taken from it, so any `(seed, stream path)` names the same
//! variate sequence no matter which thread evaluates it or in what
//! order. This is what makes the Monte Carlo tables in
//! [`crate::simulation`] bit-identical across thread counts.
//!
//! # Algorithm (pinned)
//!
//! Let `mix` be the SplitMix64 finalizer
//!
//! ```text
//! z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//! z ^= z >> 27; z *= 0x94d049bb133111eb;
//! z ^= z >> 31;
//! ```
//!
//! * root key: `mix(seed)`
//! * substream `i` of key `k`: `mix(k ^ (0xd1342543de82ef95 * (i + 1)))`
//! * draw `n` from key `k`: `mix(k + 0x9e3779b97f4a7c15 * (n + 1))`
//!   (exactly the SplitMix64 sequence seeded at `k`)
//!
//! Uniform doubles take the top 53 bits and are offset by half an ulp,
//! so they lie strictly inside (0, 1) and can be fed to quantile
//! functions without hitting either endpoint.

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
const STREAM_GAMMA: u64 = 0xd134_2543_de82_ef95;

/// SplitMix64 finalizer.
#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A value-type RNG state: copyable, sendable, and deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngState {
    key: u64,
    counter: u64,
}

impl RngState {
    /// Root state for a seed.
    pub fn new(seed: u64) -> Self {
        RngState {
            key: mix(seed),
            counter: 0,
        }
    }

    /// Derive the `index`-th child stream of this state.
    ///
    /// Children depend only on the parent's key (not on how many draws
    /// the parent has made), so a stream path fully identifies a state.
    pub fn substream(&self, index: u64) -> Self {
        RngState {
            key: mix(self.key ^ STREAM_GAMMA.wrapping_mul(index.wrapping_add(1))),
            counter: 0,
        }
    }

    /// Next raw 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self
            .key
            .wrapping_add(GOLDEN_GAMMA.wrapping_mul(self.counter)))
    }

    /// Next uniform double strictly inside (0, 1).
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }
}
