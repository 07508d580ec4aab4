use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Scalar;

/// A deterministic source of random rationals and choices.
///
/// Every randomized check in the workspace draws from a `Sampler` seeded
/// with an explicit `u64`, so failures reproduce exactly. Scalars are kept
/// small (numerator in `[-100, 100]`, denominator in `[1, 100]`) to bound
/// coefficient blow-up in exact arithmetic.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// A sampler with a fixed seed.
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random rational with numerator in `[-100, 100]` and denominator in
    /// `[1, 100]` (zero is possible).
    pub fn scalar(&mut self) -> Scalar {
        let p = self.rng.gen_range(-100i64..=100);
        let q = self.rng.gen_range(1i64..=100);
        Scalar::ratio(p, q)
    }

    /// Like [`Sampler::scalar`], but never zero.
    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A random small integer in `[lo, hi]` inclusive.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// A uniformly chosen index in `[0, len)`.
    ///
    /// # Panics
    ///
    /// Panics if `len == 0`.
    pub fn index(&mut self, len: usize) -> usize {
        assert!(len > 0, "cannot choose from an empty range");
        self.rng.gen_range(0..len)
    }

    /// A fresh sampler whose stream is derived from this one; useful for
    /// fanning one top-level seed out to independent checks.
    pub fn fork(&mut self) -> Sampler {
        Sampler::new(self.rng.gen())
    }
}
