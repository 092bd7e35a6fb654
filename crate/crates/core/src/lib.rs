//! Multi-kernel polar codes.
//!
//! Polar codes built from Kronecker products of a binary and a ternary
//! polarizing kernel reach every block length N = 2^n * 3^m natively, without
//! puncturing or shortening a longer mother code. This crate provides:
//!
//! - kernel algebra and GF(2) generator construction ([`kernel`], [`matrix`]),
//! - a quadratic-work in-place encoder ([`encode`]),
//! - a min-sum successive-cancellation decoder generic over its LLR
//!   arithmetic, with plain-float and sign-magnitude fixed-point models
//!   ([`decode`], [`llr`]),
//! - genie-aided Monte-Carlo code construction and kernel-order search
//!   ([`construct`]),
//! - BPSK/AWGN modeling plus puncturing/shortening of power-of-two mother
//!   codes for baselines ([`channel`]),
//! - decoder complexity accounting ([`complexity`]), and
//! - a deterministic, frame-parallel FER/BER simulation harness ([`sim`]).
//!
//! All randomness flows from a single 64-bit seed through documented stream
//! derivation ([`rng`]), so every result in the crate is reproducible.

pub mod channel;
pub mod complexity;
pub mod construct;
pub mod decode;
pub mod encode;
pub mod error;
pub mod kernel;
pub mod llr;
pub mod matrix;
pub mod rng;
pub mod sim;

pub use channel::{RateMatchMode, RateMatchSpec};
pub use construct::{build_code, construct_code, CodeSpec, RateMatchedCode};
pub use decode::{DecodeResult, ScDecoder};
pub use encode::encode;
pub use error::{Error, Result};
pub use kernel::{Kernel, KernelSeq};
pub use llr::{LlrArithmetic, QuantConfig, Real, SignMag};

/// Unquantized LLR arithmetic over f64, the default decoding model.
pub type Real64 = llr::Real<f64>;

/// Unquantized LLR arithmetic over f32 for memory-constrained sweeps.
pub type Real32 = llr::Real<f32>;
