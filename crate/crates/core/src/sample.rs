//! Seeded pseudo-random rational inputs.
//!
//! Every randomized check draws integers in `[-9, 9]` from one ChaCha stream,
//! so a seed pins down every witness exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;

pub const ENTRY_BOUND: i64 = 9;

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self) -> Rational {
        Rational::from_int(self.rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
    }

    pub fn nonzero_int(&mut self) -> Rational {
        loop {
            let v = self.int();
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Nonzero rational with numerator and denominator in the entry range.
    pub fn nonzero_ratio(&mut self) -> Rational {
        let n = self.nonzero_int();
        let d = self.rng.gen_range(1..=ENTRY_BOUND);
        n / Rational::from_int(d)
    }

    /// Rational with numerator in the entry range and denominator in `1..=9`.
    pub fn ratio(&mut self) -> Rational {
        let n = self.int();
        let d = self.rng.gen_range(1..=ENTRY_BOUND);
        n / Rational::from_int(d)
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.int()).collect()
    }

    pub fn ratio_vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.ratio()).collect()
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
