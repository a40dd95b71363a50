//! Deterministic seeded random streams.
//!
//! Every random decision in this crate is drawn from a [`DetRng`], a
//! splitmix64 stream. Per-sample operations (noise injection, plane
//! measurement) derive an independent sub-stream from the seed plus the
//! sample coordinates, so results are byte-identical regardless of
//! traversal order or thread count.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic random stream (splitmix64).
///
/// Not cryptographically secure; intended for reproducible simulation only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetRng {
    state: u64,
}

impl DetRng {
    /// Stream named by `seed` alone.
    pub fn new(seed: u64) -> Self {
        DetRng { state: mix(seed ^ GOLDEN) }
    }

    /// Independent sub-stream derived from `seed` and a list of lane
    /// indices (e.g. `[channel, row, col]`). Same inputs always yield the
    /// same stream; distinct lanes yield statistically independent streams.
    pub fn substream(seed: u64, lanes: &[u64]) -> Self {
        let mut state = mix(seed ^ GOLDEN);
        for &lane in lanes {
            state = mix(state.wrapping_add(GOLDEN).wrapping_add(lane));
        }
        DetRng { state }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[0, n)`.
    #[inline]
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Modulo bias is negligible for the small ranges used here.
        self.next_u64() % n
    }
}
