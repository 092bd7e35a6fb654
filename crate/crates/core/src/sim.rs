//! Monte-Carlo FER/BER simulation over BPSK/AWGN.
//!
//! Every frame is generated from its own deterministic stream keyed by
//! (seed, SNR index, frame number): information bits first, then one noise
//! sample per transmitted symbol. Results therefore do not depend on how
//! frames are split across worker threads, and stopping is only checked at
//! batch boundaries so early exit cannot depend on scheduling either.

use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use crate::channel::{bpsk, channel_llr, noise_variance, RateMatchSpec};
use crate::construct::CodeSpec;
use crate::decode::{FrozenPolicy, NoTrace, ScDecoder};
use crate::encode::encode_in_place;
use crate::error::{invalid, Result};
use crate::llr::{LlrArithmetic, QuantConfig, Real};
use crate::rng::{fill_bits, frame_rng, standard_normal, DOMAIN_SIM_BASE};

/// Frames simulated between stopping-rule checks.
pub const BATCH: u64 = 1024;

/// Decoder arithmetic used for a sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArithmeticChoice {
    Real,
    Quantized { q_bits: u32, scale: f64 },
}

/// One FER/BER sweep: a code (optionally rate-matched), the Eb/N0 grid, and
/// the stopping rule.
#[derive(Clone, Debug)]
pub struct SimConfig {
    pub code: CodeSpec,
    /// When set, `code` is the mother code and only the kept bits are sent.
    pub rate_match: Option<RateMatchSpec>,
    pub ebn0_db: Vec<f64>,
    pub max_frames: u64,
    pub max_frame_errors: Option<u64>,
    pub arithmetic: ArithmeticChoice,
    pub seed: u64,
    pub workers: usize,
}

impl SimConfig {
    fn validate(&self) -> Result<()> {
        self.code.validate()?;
        if self.max_frames == 0 {
            return invalid("max_frames must be at least 1".to_string());
        }
        if self.ebn0_db.is_empty() || self.ebn0_db.iter().any(|e| !e.is_finite()) {
            return invalid("ebn0_db must be nonempty and finite".to_string());
        }
        if self.workers == 0 {
            return invalid("workers must be at least 1".to_string());
        }
        if let Some(rm) = &self.rate_match {
            if rm.mother_n != self.code.n {
                return invalid(format!(
                    "rate matching expects mother length {} but the code has N={}",
                    rm.mother_n, self.code.n
                ));
            }
        }
        Ok(())
    }

    /// Number of BPSK symbols actually sent per frame.
    pub fn transmitted_len(&self) -> usize {
        self.rate_match
            .as_ref()
            .map_or(self.code.n, RateMatchSpec::transmitted_len)
    }

    /// Rate used for Eb normalization: K over transmitted symbols.
    pub fn rate(&self) -> f64 {
        self.code.k as f64 / self.transmitted_len() as f64
    }
}

/// Accumulated counts for one Eb/N0 point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SnrPoint {
    pub ebn0_db: f64,
    pub frames: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub ber: f64,
    pub fer: f64,
    pub wall_seconds: f64,
}

/// A finished sweep, one row per Eb/N0 point.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SimResult {
    pub points: Vec<SnrPoint>,
}

/// Render a sweep as CSV. Wall-clock time is deliberately left out so the
/// output is byte-stable for identical config and seed.
pub fn to_csv(result: &SimResult) -> String {
    let mut out = String::from("ebn0_db,frames,bit_errors,frame_errors,ber,fer\n");
    for p in &result.points {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            p.ebn0_db, p.frames, p.bit_errors, p.frame_errors, p.ber, p.fer
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Run a sweep.
pub fn run(cfg: &SimConfig) -> Result<SimResult> {
    run_with_frame_log(cfg, None)
}

/// Run a sweep, optionally logging one CSV row per frame.
pub fn run_with_frame_log(
    cfg: &SimConfig,
    mut frame_log: Option<&mut dyn Write>,
) -> Result<SimResult> {
    cfg.validate()?;
    if let Some(log) = frame_log.as_deref_mut() {
        writeln!(log, "frame,ebn0_db,bit_errors,frame_error")?;
    }
    match cfg.arithmetic {
        ArithmeticChoice::Real => run_generic(cfg, Real::<f64>::new(), frame_log),
        ArithmeticChoice::Quantized { q_bits, scale } => {
            run_generic(cfg, QuantConfig::new(q_bits, scale)?, frame_log)
        }
    }
}

/// Everything a worker needs to simulate one frame, shared immutably.
struct PointCtx<'a, A> {
    arith: A,
    code: &'a CodeSpec,
    rate_match: Option<&'a RateMatchSpec>,
    info: &'a [usize],
    frozen: &'a [bool],
    transmitted_len: usize,
    sigma: f64,
    sigma2: f64,
    seed: u64,
    domain: u64,
}

fn run_generic<A>(
    cfg: &SimConfig,
    arith: A,
    mut frame_log: Option<&mut dyn Write>,
) -> Result<SimResult>
where
    A: LlrArithmetic + Copy + Sync,
{
    let info = cfg.code.info();
    let frozen = cfg.code.frozen_mask();
    let rate = cfg.rate();
    let mut points = Vec::with_capacity(cfg.ebn0_db.len());
    for (snr_idx, &ebn0_db) in cfg.ebn0_db.iter().enumerate() {
        let sigma2 = noise_variance(ebn0_db, rate)?;
        let ctx = PointCtx {
            arith,
            code: &cfg.code,
            rate_match: cfg.rate_match.as_ref(),
            info: &info,
            frozen: &frozen,
            transmitted_len: cfg.transmitted_len(),
            sigma: sigma2.sqrt(),
            sigma2,
            seed: cfg.seed,
            domain: DOMAIN_SIM_BASE + snr_idx as u64,
        };
        let start = Instant::now();
        let mut frames = 0u64;
        let mut bit_errors = 0u64;
        let mut frame_errors = 0u64;
        let mut per_frame: Vec<(u32, u8)> = Vec::new();
        while frames < cfg.max_frames {
            if let Some(limit) = cfg.max_frame_errors {
                if frame_errors >= limit {
                    break;
                }
            }
            let batch = BATCH.min(cfg.max_frames - frames) as usize;
            per_frame.clear();
            per_frame.resize(batch, (0, 0));
            run_batch(&ctx, frames, cfg.workers, &mut per_frame);
            for (i, &(be, fe)) in per_frame.iter().enumerate() {
                bit_errors += u64::from(be);
                frame_errors += u64::from(fe);
                if let Some(log) = frame_log.as_deref_mut() {
                    writeln!(log, "{},{},{},{}", frames + i as u64, ebn0_db, be, fe)?;
                }
            }
            frames += batch as u64;
        }
        points.push(SnrPoint {
            ebn0_db,
            frames,
            bit_errors,
            frame_errors,
            ber: bit_errors as f64 / (frames * cfg.code.k as u64) as f64,
            fer: frame_errors as f64 / frames as f64,
            wall_seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(SimResult { points })
}

/// Split one batch across worker threads in contiguous chunks.
fn run_batch<A>(ctx: &PointCtx<'_, A>, first_frame: u64, workers: usize, out: &mut [(u32, u8)])
where
    A: LlrArithmetic + Copy + Sync,
{
    if workers <= 1 || out.len() <= 1 {
        run_chunk(ctx, first_frame, out);
        return;
    }
    let chunk = out.len().div_ceil(workers);
    std::thread::scope(|s| {
        for (w, slice) in out.chunks_mut(chunk).enumerate() {
            let start = first_frame + (w * chunk) as u64;
            s.spawn(move || run_chunk(ctx, start, slice));
        }
    });
}

/// Simulate frames `first_frame ..` into `out`: per frame, (bit errors over
/// the info positions, frame-error flag).
fn run_chunk<A>(ctx: &PointCtx<'_, A>, first_frame: u64, out: &mut [(u32, u8)])
where
    A: LlrArithmetic + Copy,
{
    let n = ctx.code.n;
    let k = ctx.info.len();
    let mut decoder = ScDecoder::new(ctx.arith, ctx.code.kernels.clone());
    let mut bits = vec![0u8; k];
    let mut word = vec![0u8; n];
    let mut tx_llrs = vec![0.0f64; ctx.transmitted_len];
    let mut mother_llrs = vec![0.0f64; n];
    let mut u_hat = vec![0u8; n];
    let mut x_hat = vec![0u8; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut rng = frame_rng(ctx.seed, ctx.domain, first_frame + i as u64);
        fill_bits(&mut rng, &mut bits);
        word.fill(0);
        for (&pos, &bit) in ctx.info.iter().zip(&bits) {
            word[pos] = bit;
        }
        encode_in_place(&ctx.code.kernels, &mut word).expect("buffer lengths fixed at setup");
        let sent = match ctx.rate_match {
            Some(rm) => rm.transmit(&word),
            None => &word[..],
        };
        for (llr, &bit) in tx_llrs.iter_mut().zip(sent) {
            let y = bpsk(bit) + ctx.sigma * standard_normal(&mut rng);
            *llr = channel_llr(y, ctx.sigma2);
        }
        let channel: &[f64] = match ctx.rate_match {
            Some(rm) => {
                rm.fill_llrs_into(&tx_llrs, &mut mother_llrs)
                    .expect("buffer lengths fixed at setup");
                &mother_llrs
            }
            None => &tx_llrs,
        };
        decoder
            .decode_channel_into(
                channel,
                &mut FrozenPolicy { frozen: ctx.frozen },
                &mut NoTrace,
                &mut u_hat,
                &mut x_hat,
            )
            .expect("buffer lengths fixed at setup");
        let mut be = 0u32;
        for (&pos, &bit) in ctx.info.iter().zip(&bits) {
            be += u32::from(u_hat[pos] ^ bit);
        }
        *slot = (be, u8::from(be > 0));
    }
}
