//! Deterministic 64-bit generator used for instance construction.
//!
//! The generator is SplitMix64 with the canonical constants, so any other
//! implementation seeded with the same value reproduces the exact same
//! instance files bit for bit. Uniform reals are taken from the top 53 bits,
//! which is the widest mantissa an `f64` can represent exactly.

/// Additive constant of the Weyl sequence (golden-ratio increment).
const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
/// First finalizer multiplier.
const MIX1: u64 = 0xBF58_476D_1CE4_E5B9;
/// Second finalizer multiplier.
const MIX2: u64 = 0x94D0_49BB_1331_11EB;

/// SplitMix64 stream.
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
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(MIX1);
        z = (z ^ (z >> 27)).wrapping_mul(MIX2);
        z ^ (z >> 31)
    }

    /// Uniform real in `[0, 1)` with 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
