//! BPSK over AWGN, LLR computation, and rate matching.
//!
//! Coded bit x maps to symbol 1 - 2x; the receiver observes y = s + z with
//! z ~ N(0, sigma^2) and forms LLR(y) = 2y / sigma^2. The noise variance for a
//! target Eb/N0 at code rate R is sigma^2 = 1 / (2 R 10^(Eb/N0 / 10)).
//!
//! Rate matching transmits a prefix- or suffix-trimmed mother codeword:
//! puncturing drops the first `dropped` coded bits (the receiver knows nothing
//! about them, LLR 0), shortening drops the last `dropped` coded bits after
//! forcing them to zero through extra frozen inputs (the receiver knows them,
//! large positive LLR).

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::kernel::{generator, KernelSeq};

/// LLR injected for a punctured (unknown) coded bit.
pub const PUNCTURED_LLR: f64 = 0.0;
/// LLR injected for a shortened (known-zero) coded bit. Large enough to
/// dominate every finite observation and to saturate any quantizer.
pub const SHORTENED_LLR: f64 = 1e6;

/// Noise variance for BPSK at the given Eb/N0 (dB) and code rate.
pub fn noise_variance(ebn0_db: f64, rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate <= 1.0) {
        return invalid(format!("rate {rate} out of (0, 1]"));
    }
    if !ebn0_db.is_finite() {
        return invalid(format!("Eb/N0 {ebn0_db} must be finite"));
    }
    Ok(1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0)))
}

/// BPSK symbol for one bit.
#[inline]
pub fn bpsk(bit: u8) -> f64 {
    1.0 - 2.0 * f64::from(bit)
}

/// Channel LLR of one observation.
#[inline]
pub fn channel_llr(y: f64, sigma2: f64) -> f64 {
    2.0 * y / sigma2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RateMatchMode {
    Puncture,
    Shorten,
}

/// How a mother code of length `mother_n` is trimmed to `mother_n - dropped`
/// transmitted bits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateMatchSpec {
    pub mode: RateMatchMode,
    pub mother_n: usize,
    pub dropped: usize,
}

impl RateMatchSpec {
    pub fn new(mode: RateMatchMode, mother_n: usize, dropped: usize) -> Result<Self> {
        if dropped == 0 || dropped >= mother_n {
            return invalid(format!("dropped {dropped} out of 1..{mother_n}"));
        }
        Ok(RateMatchSpec {
            mode,
            mother_n,
            dropped,
        })
    }

    pub fn transmitted_len(&self) -> usize {
        self.mother_n - self.dropped
    }

    /// Indices of the dropped coded bits: the first `dropped` positions for
    /// puncturing, the last `dropped` for shortening.
    pub fn dropped_positions(&self) -> std::ops::Range<usize> {
        match self.mode {
            RateMatchMode::Puncture => 0..self.dropped,
            RateMatchMode::Shorten => self.mother_n - self.dropped..self.mother_n,
        }
    }

    /// The transmitted slice of a mother codeword.
    pub fn transmit<'a>(&self, x: &'a [u8]) -> &'a [u8] {
        match self.mode {
            RateMatchMode::Puncture => &x[self.dropped..],
            RateMatchMode::Shorten => &x[..self.mother_n - self.dropped],
        }
    }

    /// Expand received channel LLRs to mother length, injecting the fixed
    /// value for each dropped position.
    pub fn fill_llrs(&self, received: &[f64]) -> Result<Vec<f64>> {
        let mut llrs = vec![0.0; self.mother_n];
        self.fill_llrs_into(received, &mut llrs)?;
        Ok(llrs)
    }

    /// `fill_llrs` into a caller buffer of mother length.
    pub fn fill_llrs_into(&self, received: &[f64], out: &mut [f64]) -> Result<()> {
        if received.len() != self.transmitted_len() || out.len() != self.mother_n {
            return invalid(format!(
                "received length {} and buffer length {} must be {} and {}",
                received.len(),
                out.len(),
                self.transmitted_len(),
                self.mother_n
            ));
        }
        let fixed = match self.mode {
            RateMatchMode::Puncture => PUNCTURED_LLR,
            RateMatchMode::Shorten => SHORTENED_LLR,
        };
        let (kept, dropped) = match self.mode {
            RateMatchMode::Puncture => {
                let (d, k) = out.split_at_mut(self.dropped);
                (k, d)
            }
            RateMatchMode::Shorten => out.split_at_mut(self.transmitted_len()),
        };
        kept.copy_from_slice(received);
        dropped.fill(fixed);
        Ok(())
    }

    /// Input positions that shortening forces to zero: the union of the
    /// supports of the generator columns at the dropped coded positions. The
    /// forced set must have exactly `dropped` members or the dropped bits
    /// cannot be pinned to zero by freezing alone. For an all-binary mother
    /// the largest column index disjoint from input i is its bitwise
    /// complement N-1-i, so dropping the last d columns forces exactly inputs
    /// 0..d; ternary columns overlap too much and are rejected by the check.
    pub fn forced_frozen(&self, seq: &KernelSeq) -> Result<Vec<usize>> {
        if seq.block_length() != self.mother_n {
            return invalid(format!(
                "kernel sequence length {} does not match mother length {}",
                seq.block_length(),
                self.mother_n
            ));
        }
        match self.mode {
            RateMatchMode::Puncture => Ok(Vec::new()),
            RateMatchMode::Shorten => {
                let g = generator(seq)?;
                let mut forced = vec![false; self.mother_n];
                for j in self.dropped_positions() {
                    for i in g.column_support(j) {
                        forced[i] = true;
                    }
                }
                let set: Vec<usize> = forced
                    .iter()
                    .enumerate()
                    .filter(|(_, &f)| f)
                    .map(|(i, _)| i)
                    .collect();
                if set.len() != self.dropped {
                    return invalid(format!(
                        "shortening by {} forces {} inputs; freezing cannot pin the dropped bits",
                        self.dropped,
                        set.len()
                    ));
                }
                Ok(set)
            }
        }
    }
}
