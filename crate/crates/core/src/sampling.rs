//! Run configuration and the deterministic sample generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Q;

pub const DEFAULT_SEED: u64 = 0x5EED;
pub const SEED_ENV_VAR: &str = "SYMCOMVAR_SEED";

/// Knobs shared by every randomized or size-limited computation. Echoed into
/// every emitted artifact so a run can be reproduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub coordinate_bound: i64,
    /// Largest centralizer dimension for the exact symbolic distinguishedness test.
    pub symbolic_threshold: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: DEFAULT_SEED, samples: 5, coordinate_bound: 10, symbolic_threshold: 8 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidParams("sample count must be positive".into()));
        }
        if self.coordinate_bound <= 0 {
            return Err(Error::InvalidParams("coordinate bound must be positive".into()));
        }
        Ok(())
    }

    /// Independent generator for the named purpose, so that adding samples
    /// in one computation never shifts the samples drawn by another.
    pub fn rng(&self, purpose: &str) -> Sampler {
        Sampler::new(self.seed, purpose)
    }
}

/// Seed from the environment override if present and well formed.
pub fn seed_from_env() -> Result<Option<u64>> {
    match std::env::var(SEED_ENV_VAR) {
        Ok(text) => parse_seed(&text).map(Some),
        Err(_) => Ok(None),
    }
}

/// Accepts decimal or `0x`-prefixed hexadecimal.
pub fn parse_seed(text: &str) -> Result<u64> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| Error::InvalidParams(format!("invalid seed {text:?}")))
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, purpose: &str) -> Self {
        // FNV-1a of the purpose tag selects the stream
        let stream = purpose
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325_u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn rational(&mut self, bound: i64) -> Q {
        Q::from_integer(self.int(bound).into())
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int(bound);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn ints(&mut self, count: usize, bound: i64) -> Vec<i64> {
        (0..count).map(|_| self.int(bound)).collect()
    }

    pub fn rationals(&mut self, count: usize, bound: i64) -> Vec<Q> {
        (0..count).map(|_| self.rational(bound)).collect()
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }
}
