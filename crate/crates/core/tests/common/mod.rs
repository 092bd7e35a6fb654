//! Shared fixtures for the integration suites: the preset codes every suite
//! exercises, plus independent reference implementations (a naive decoder and
//! a density-evolution analysis) the optimized code is checked against.
#![allow(dead_code)]

pub mod de;
pub mod naive;

use mkpolar::construct::construct_code;
use mkpolar::rng::{frame_rng, DOMAIN_CHANNEL};
use mkpolar::{CodeSpec, KernelSeq};
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

/// Kernel order (outermost first) and message size of every preset code:
/// mixed lengths 6..96 plus their pure-binary neighbors 8 and 64.
pub const PRESETS: &[(&str, usize)] = &[
    ("2,3", 3),
    ("3,2", 3),
    ("2,2,2", 4),
    ("3,2,2", 6),
    ("3,2,2,2", 12),
    ("3,2,2,2,2", 24),
    ("2,2,2,2,2,2", 32),
    ("3,2,2,2,3", 36),
    ("3,2,2,2,2,2", 48),
];

/// Construct one preset at the shared design point.
pub fn preset_code(kernels: &str, k: usize, design_frames: u64) -> CodeSpec {
    let seq: KernelSeq = kernels.parse().expect("preset kernel order parses");
    construct_code(&seq, k, 2.0, design_frames, 0xC0DE).expect("preset constructs")
}

/// Noiseless channel LLRs for a codeword: +20 for a 0 bit, -20 for a 1.
pub fn noiseless_llrs(x: &[u8]) -> Vec<f64> {
    x.iter()
        .map(|&b| 20.0 * (1.0 - 2.0 * f64::from(b)))
        .collect()
}

/// Deterministic RNG for test vector generation.
pub fn test_rng(seed: u64, index: u64) -> ChaCha8Rng {
    frame_rng(seed, DOMAIN_CHANNEL, index)
}

/// A random LLR vector in [-25, 25). When `on_grid` is set, values are
/// rounded to integers so exact magnitude ties and exact zeros are frequent,
/// stressing the tie-breaking paths.
pub fn random_llrs(rng: &mut ChaCha8Rng, n: usize, on_grid: bool) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let u = rng.next_u64() as f64 / (u64::MAX as f64 + 1.0);
            let l = 50.0 * u - 25.0;
            if on_grid {
                l.round()
            } else {
                l
            }
        })
        .collect()
}

/// Binomial standard error of an observed rate.
pub fn binomial_se(rate: f64, trials: u64) -> f64 {
    (rate * (1.0 - rate) / trials as f64).sqrt()
}
