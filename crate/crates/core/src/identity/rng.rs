//! Deterministic pseudorandom number generation for the searches.
//!
//! Every randomized computation in this crate draws from SplitMix64 (Steele,
//! Lea, Flood), a fixed 64-bit mixing generator with a single word of state.
//! The algorithm is pinned here, with its constants, so that a seed fully
//! determines every search: the same seed always yields the same argument
//! vectors, the same workspace ranks, and byte-identical reports.

/// SplitMix64 generator. `new(seed)` starts the stream; state advances by
/// the golden-ratio increment and each output is finalized by two xor-shift
/// multiplies.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish residue in `[0, bound)`: `next_u64() % bound`. The modulo
    /// bias is negligible for the small bounds used here and keeps the
    /// component rule trivial to restate in other implementations.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }
}
