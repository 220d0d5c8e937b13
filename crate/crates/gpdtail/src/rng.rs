//! Seeded random streams with platform-independent output.
//!
//! Monte Carlo experiments are partitioned into tasks and fixed-size
//! chunks, each driven by its own child stream so results do not
//! depend on thread count or scheduling.

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// A SplitMix64 generator. Identical (seed, derivation path) gives an
/// identical draw sequence on every platform.
#[derive(Debug, Clone)]
pub struct RandomStream {
    state: u64,
}

impl RandomStream {
    /// Stream rooted at `seed`.
    pub fn new(seed: u64) -> Self {
        RandomStream { state: seed }
    }

    /// Stream for task `task_index` under `seed`. Used to hand each
    /// experiment task an independent, reproducible stream.
    pub fn child(seed: u64, task_index: u64) -> Self {
        RandomStream::new(seed).derive(task_index)
    }

    /// Derive a child stream keyed by `index` without disturbing `self`.
    pub fn derive(&self, index: u64) -> Self {
        let keyed = self
            .state
            .wrapping_add(GOLDEN_GAMMA)
            .wrapping_add(mix64(index.wrapping_add(0xA076_1D64_78BD_642F)));
        RandomStream { state: mix64(keyed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform draw on the open interval (0, 1). The midpoint offset
    /// keeps 0 and 1 unreachable, so logs and negative powers of the
    /// draw are always finite.
    pub fn next_open01(&mut self) -> f64 {
        let bits53 = self.next_u64() >> 11;
        (bits53 as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RandomStream::new(42);
        let mut b = RandomStream::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn golden_sequence_seed_zero() {
        // Reference SplitMix64 outputs for seed 0; pins the generator so
        // experiment outputs stay reproducible across releases.
        let mut s = RandomStream::new(0);
        assert_eq!(s.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(s.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(s.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn open01_stays_open() {
        let mut s = RandomStream::new(7);
        for _ in 0..10_000 {
            let u = s.next_open01();
            assert!(u > 0.0 && u < 1.0, "draw {u} not in (0,1)");
        }
    }

    #[test]
    fn derive_is_stable_and_distinct() {
        let base = RandomStream::new(123);
        let mut c0 = base.derive(0);
        let mut c0_again = base.derive(0);
        let mut c1 = base.derive(1);
        let x0 = c0.next_u64();
        assert_eq!(x0, c0_again.next_u64());
        assert_ne!(x0, c1.next_u64());
    }

    #[test]
    fn child_matches_new_then_derive() {
        let mut a = RandomStream::child(9, 4);
        let mut b = RandomStream::new(9).derive(4);
        assert_eq!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn open01_mean_is_near_half() {
        let mut s = RandomStream::new(2024);
        let n = 100_000;
        let mean: f64 = (0..n).map(|_| s.next_open01()).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 4.0 / (12.0f64 * n as f64).sqrt());
    }
}
