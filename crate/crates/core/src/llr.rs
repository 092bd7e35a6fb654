//! LLR arithmetic models for the min-sum decoder.
//!
//! The decoder is generic over an arithmetic model so the same traversal runs
//! on plain floats and on sign-magnitude quantized values. Positive LLRs favor
//! bit 0; hard decisions break the tie at zero toward 0.

use std::fmt;
use std::marker::PhantomData;

use num_traits::Float;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Operations the successive-cancellation decoder needs from an LLR domain.
pub trait LlrArithmetic {
    type Llr: Copy + PartialEq + Default + fmt::Debug;

    /// Convert a channel LLR (float) into this domain. The receiver holds
    /// the conversion parameters, so this is not a constructor.
    #[allow(clippy::wrong_self_convention)]
    fn from_channel(&self, llr: f64) -> Self::Llr;

    /// Addition, saturating where the domain is bounded.
    fn sat_add(&self, a: Self::Llr, b: Self::Llr) -> Self::Llr;

    /// Two-input min-sum: sign product times the smaller magnitude.
    fn minsum2(&self, a: Self::Llr, b: Self::Llr) -> Self::Llr;

    /// Three-input min-sum: sign product times the smallest magnitude.
    fn minsum3(&self, a: Self::Llr, b: Self::Llr, c: Self::Llr) -> Self::Llr {
        self.minsum2(self.minsum2(a, b), c)
    }

    /// Negate when the already-decided bit is 1.
    fn cond_negate(&self, a: Self::Llr, bit: u8) -> Self::Llr;

    /// Hard decision: 1 exactly when the LLR is strictly negative.
    fn hard_bit(&self, a: Self::Llr) -> u8;
}

/// Unquantized arithmetic over a float type. No saturation: adds are plain
/// adds, and min-sum compares magnitudes with IEEE semantics (so -0 and +0
/// compare equal and both decide to bit 0).
#[derive(Clone, Copy, Debug, Default)]
pub struct Real<F: Float = f64>(PhantomData<F>);

impl<F: Float> Real<F> {
    pub fn new() -> Self {
        Real(PhantomData)
    }
}

impl<F: Float + fmt::Debug + Default> LlrArithmetic for Real<F> {
    type Llr = F;

    fn from_channel(&self, llr: f64) -> F {
        F::from(llr).expect("channel LLR representable in the float type")
    }

    fn sat_add(&self, a: F, b: F) -> F {
        a + b
    }

    fn minsum2(&self, a: F, b: F) -> F {
        let mag = a.abs().min(b.abs());
        if (a < F::zero()) != (b < F::zero()) {
            -mag
        } else {
            mag
        }
    }

    fn cond_negate(&self, a: F, bit: u8) -> F {
        if bit == 1 {
            -a
        } else {
            a
        }
    }

    fn hard_bit(&self, a: F) -> u8 {
        u8::from(a < F::zero())
    }
}

/// Sign-magnitude fixed-point LLR. The magnitude is already clamped to the
/// configured range; `neg` is never set when the magnitude is zero, so each
/// value has one representation and equality is plain field equality.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignMag {
    pub neg: bool,
    pub mag: u32,
}

impl SignMag {
    pub fn new(neg: bool, mag: u32) -> Self {
        SignMag {
            neg: neg && mag != 0,
            mag,
        }
    }
}

impl fmt::Display for SignMag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.neg { '-' } else { '+' }, self.mag)
    }
}

/// Quantizer configuration: `q_bits` total bits in sign-magnitude form (one
/// sign bit, `q_bits - 1` magnitude bits) and a linear scale applied before
/// rounding. Channel LLR x maps to clamp(round(x * scale)).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantConfig {
    pub q_bits: u32,
    pub scale: f64,
}

impl QuantConfig {
    pub fn new(q_bits: u32, scale: f64) -> Result<Self> {
        if !(2..=31).contains(&q_bits) {
            return invalid(format!("q_bits {q_bits} out of range 2..=31"));
        }
        if !scale.is_finite() || scale <= 0.0 {
            return invalid(format!("scale {scale} must be positive and finite"));
        }
        Ok(QuantConfig { q_bits, scale })
    }

    /// Largest representable magnitude, 2^(q_bits - 1) - 1.
    pub fn max_mag(&self) -> u32 {
        (1u32 << (self.q_bits - 1)) - 1
    }
}

/// Quantize one channel LLR under `cfg`: scale, round half away from zero,
/// clamp to the representable range. Errors on non-finite input.
pub fn quantize(cfg: &QuantConfig, x: f64) -> Result<SignMag> {
    if !x.is_finite() {
        return Err(crate::error::Error::NonFinite(x));
    }
    let scaled = (x * cfg.scale).round();
    let mag = scaled.abs().min(cfg.max_mag() as f64) as u32;
    Ok(SignMag::new(scaled < 0.0, mag))
}

impl LlrArithmetic for QuantConfig {
    type Llr = SignMag;

    fn from_channel(&self, llr: f64) -> SignMag {
        quantize(self, llr).expect("finite channel LLR")
    }

    fn sat_add(&self, a: SignMag, b: SignMag) -> SignMag {
        if a.neg == b.neg {
            SignMag::new(a.neg, (a.mag + b.mag).min(self.max_mag()))
        } else if a.mag >= b.mag {
            SignMag::new(a.neg, a.mag - b.mag)
        } else {
            SignMag::new(b.neg, b.mag - a.mag)
        }
    }

    fn minsum2(&self, a: SignMag, b: SignMag) -> SignMag {
        SignMag::new(a.neg != b.neg, a.mag.min(b.mag))
    }

    fn cond_negate(&self, a: SignMag, bit: u8) -> SignMag {
        if bit == 1 {
            SignMag::new(!a.neg, a.mag)
        } else {
            a
        }
    }

    fn hard_bit(&self, a: SignMag) -> u8 {
        u8::from(a.neg)
    }
}
