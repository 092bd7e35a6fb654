//! Code construction: frozen-set selection and kernel-order search.
//!
//! Reliability of each input position is estimated by genie-aided Monte
//! Carlo: the all-zero codeword is sent over BPSK/AWGN at the design SNR, the
//! decoder runs with every position treated as information, each decision is
//! corrected to the truth before it can propagate, and the rate of wrong
//! first looks per position is recorded. One mechanism covers binary,
//! ternary, and mixed kernel sequences, and rate-matched channels drop in by
//! replacing the dropped positions' LLRs with their fixed values.
//!
//! Estimation always runs in double-precision arithmetic; quantized decoding
//! reuses the same frozen sets.

use serde::{Deserialize, Serialize};

use crate::channel::{
    bpsk, channel_llr, noise_variance, RateMatchMode, RateMatchSpec, PUNCTURED_LLR, SHORTENED_LLR,
};
use crate::decode::{FrozenPolicy, GeniePolicy, NoTrace, ScDecoder};
use crate::encode::{encode, encode_in_place};
use crate::error::{invalid, Result};
use crate::kernel::{factor_block_length, Kernel, KernelSeq};
use crate::llr::Real;
use crate::rng::{fill_bits, frame_rng, standard_normal, DOMAIN_CONSTRUCTION, DOMAIN_SEARCH_EVAL};

/// The Eb/N0 reference rate for design-SNR noise. Profiles are measured at a
/// fixed rate-1/2 reference so a profile does not depend on the K it is later
/// cut for.
const DESIGN_RATE: f64 = 0.5;

/// Per-position empirical first-error probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct ReliabilityProfile {
    pub error_prob: Vec<f64>,
    pub frames_run: u64,
}

/// A constructed code: block length, information size, kernel order, and the
/// frozen positions, plus the SNR the frozen set was designed at. This is the
/// interchange document between construction and simulation; the JSON form
/// spells the kernel order as its comma string and lists frozen indices in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub n: usize,
    pub k: usize,
    pub kernels: KernelSeq,
    pub frozen: Vec<usize>,
    pub design_snr_db: f64,
}

impl CodeSpec {
    /// Check the structural invariants: matching block length, 0 < K < N,
    /// and a sorted, duplicate-free, in-range frozen list of size N - K.
    pub fn validate(&self) -> Result<()> {
        if self.kernels.block_length() != self.n {
            return invalid(format!(
                "kernel order {} has block length {}, not n={}",
                self.kernels,
                self.kernels.block_length(),
                self.n
            ));
        }
        if self.k == 0 || self.k >= self.n {
            return invalid(format!("k={} out of range 1..{}", self.k, self.n));
        }
        if self.frozen.len() != self.n - self.k {
            return invalid(format!(
                "frozen list has {} entries, expected n-k={}",
                self.frozen.len(),
                self.n - self.k
            ));
        }
        for w in self.frozen.windows(2) {
            if w[0] >= w[1] {
                return invalid("frozen list must be strictly ascending");
            }
        }
        if let Some(&last) = self.frozen.last() {
            if last >= self.n {
                return invalid(format!("frozen index {last} out of range for n={}", self.n));
            }
        }
        if !self.design_snr_db.is_finite() {
            return invalid("design_snr_db must be finite");
        }
        Ok(())
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    /// frozen-position mask: true where the input is frozen.
    pub fn frozen_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &i in &self.frozen {
            mask[i] = true;
        }
        mask
    }

    /// Indicator vector: 1 at information positions, 0 at frozen ones.
    pub fn indicator(&self) -> Vec<u8> {
        self.frozen_mask().iter().map(|&f| u8::from(!f)).collect()
    }

    /// Information positions in ascending order.
    pub fn info(&self) -> Vec<usize> {
        let mask = self.frozen_mask();
        (0..self.n).filter(|&i| !mask[i]).collect()
    }

    /// Scatter information bits into their positions (ascending), zeros at
    /// frozen positions.
    pub fn place_message(&self, info_bits: &[u8]) -> Result<Vec<u8>> {
        if info_bits.len() != self.k {
            return invalid(format!(
                "expected {} info bits, got {}",
                self.k,
                info_bits.len()
            ));
        }
        let mut u = vec![0u8; self.n];
        for (&pos, &bit) in self.info().iter().zip(info_bits) {
            u[pos] = bit;
        }
        Ok(u)
    }

    /// Build the input vector and its codeword for one message.
    pub fn encode_message(&self, info_bits: &[u8]) -> Result<(Vec<u8>, Vec<u8>)> {
        let u = self.place_message(info_bits)?;
        let x = encode(&self.kernels, &u)?;
        Ok((u, x))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("CodeSpec serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CodeSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }
}

/// A mother-code construction together with how it is trimmed on the air.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateMatchedCode {
    pub code: CodeSpec,
    pub rate_match: RateMatchSpec,
}

/// Genie-aided reliability estimation over the plain (untrimmed) channel.
pub fn estimate_reliabilities(
    seq: &KernelSeq,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<ReliabilityProfile> {
    estimate_with_channel(seq, None, design_snr_db, frames, seed)
}

/// Genie-aided reliability estimation over a rate-matched channel: dropped
/// positions contribute their fixed receiver LLR instead of an observation.
pub fn estimate_reliabilities_rate_matched(
    seq: &KernelSeq,
    rm: &RateMatchSpec,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<ReliabilityProfile> {
    if rm.mother_n != seq.block_length() {
        return invalid(format!(
            "rate match mother length {} does not match kernel sequence length {}",
            rm.mother_n,
            seq.block_length()
        ));
    }
    estimate_with_channel(seq, Some(rm), design_snr_db, frames, seed)
}

fn estimate_with_channel(
    seq: &KernelSeq,
    rm: Option<&RateMatchSpec>,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<ReliabilityProfile> {
    if frames == 0 {
        return invalid("reliability estimation needs at least one frame");
    }
    let sigma2 = noise_variance(design_snr_db, DESIGN_RATE)?;
    let sigma = sigma2.sqrt();
    let n = seq.block_length();
    let dropped = rm.map(|r| r.dropped_positions());
    let fixed = rm.map(|r| match r.mode {
        RateMatchMode::Puncture => PUNCTURED_LLR,
        RateMatchMode::Shorten => SHORTENED_LLR,
    });
    let mut dec = ScDecoder::new(Real::<f64>::new(), seq.clone());
    let truth = vec![0u8; n];
    let mut mistakes = vec![0u64; n];
    let mut llrs = vec![0.0f64; n];
    let mut u_hat = vec![0u8; n];
    let mut x_hat = vec![0u8; n];
    for frame in 0..frames {
        let mut rng = frame_rng(seed, DOMAIN_CONSTRUCTION, frame);
        for (i, l) in llrs.iter_mut().enumerate() {
            // The all-zero codeword transmits +1 at every kept position.
            *l = match (&dropped, fixed) {
                (Some(range), Some(v)) if range.contains(&i) => v,
                _ => channel_llr(1.0 + sigma * standard_normal(&mut rng), sigma2),
            };
        }
        let mut policy = GeniePolicy {
            truth: &truth,
            mistakes: &mut mistakes,
        };
        dec.decode_channel_into(&llrs, &mut policy, &mut NoTrace, &mut u_hat, &mut x_hat)?;
    }
    let error_prob = mistakes.iter().map(|&m| m as f64 / frames as f64).collect();
    Ok(ReliabilityProfile {
        error_prob,
        frames_run: frames,
    })
}

/// Cut a frozen set from a reliability profile: the K most reliable
/// positions become information, ties going to the lower index.
pub fn build_code(
    seq: &KernelSeq,
    k: usize,
    design_snr_db: f64,
    profile: &ReliabilityProfile,
) -> Result<CodeSpec> {
    build_code_with_forced(seq, k, design_snr_db, profile, &[])
}

/// Like `build_code`, but the `forced` positions are frozen regardless of
/// their reliability (shortening pins inputs this way).
pub fn build_code_with_forced(
    seq: &KernelSeq,
    k: usize,
    design_snr_db: f64,
    profile: &ReliabilityProfile,
    forced: &[usize],
) -> Result<CodeSpec> {
    let n = seq.block_length();
    if profile.error_prob.len() != n {
        return invalid(format!(
            "profile covers {} positions, kernel sequence has {n}",
            profile.error_prob.len()
        ));
    }
    let mut excluded = vec![false; n];
    for &i in forced {
        if i >= n {
            return invalid(format!("forced index {i} out of range for n={n}"));
        }
        excluded[i] = true;
    }
    let forced_count = excluded.iter().filter(|&&e| e).count();
    // 0 < k < n, and at least k selectable positions must remain.
    if k == 0 || k >= n || k > n - forced_count {
        return invalid(format!(
            "k={k} out of range with n={n} and {forced_count} forced-frozen positions"
        ));
    }
    let mut order: Vec<usize> = (0..n).filter(|&i| !excluded[i]).collect();
    // Stable sort on the error probability alone keeps equal-probability
    // candidates in ascending index order, which is the tie-break.
    order.sort_by(|&a, &b| profile.error_prob[a].total_cmp(&profile.error_prob[b]));
    let mut frozen: Vec<usize> = order[k..].to_vec();
    frozen.extend(forced.iter().copied());
    frozen.sort_unstable();
    frozen.dedup();
    let spec = CodeSpec {
        n,
        k,
        kernels: seq.clone(),
        frozen,
        design_snr_db,
    };
    spec.validate()?;
    Ok(spec)
}

/// Estimate reliabilities and cut the frozen set in one step.
pub fn construct_code(
    seq: &KernelSeq,
    k: usize,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<CodeSpec> {
    let profile = estimate_reliabilities(seq, design_snr_db, frames, seed)?;
    build_code(seq, k, design_snr_db, &profile)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Every distinct ordering of the kernel multiset for block length n,
/// lexicographic with binary kernels before ternary.
pub fn kernel_orderings(n: usize) -> Result<Vec<KernelSeq>> {
    let (twos, threes) = factor_block_length(n)?;
    let m = twos + threes;
    let count = binomial(m as u64, threes as u64);
    if count > 256 {
        return invalid(format!(
            "{count} kernel orderings for n={n} exceed the search guard of 256"
        ));
    }
    let mut sizes: Vec<usize> = vec![2; twos];
    sizes.extend(std::iter::repeat_n(3, threes));
    let mut out = Vec::with_capacity(count as usize);
    loop {
        out.push(KernelSeq::from_sizes(&sizes)?);
        if !next_permutation(&mut sizes) {
            break;
        }
    }
    Ok(out)
}

fn evaluate_fer(code: &CodeSpec, ebn0_db: f64, frames: u64, seed: u64) -> Result<f64> {
    let sigma2 = noise_variance(ebn0_db, code.rate())?;
    let sigma = sigma2.sqrt();
    let mut dec = ScDecoder::new(Real::<f64>::new(), code.kernels.clone());
    let frozen = code.frozen_mask();
    let info = code.info();
    let n = code.n;
    let mut info_bits = vec![0u8; code.k];
    // Holds the message while it is scattered, then the codeword in place.
    let mut word = vec![0u8; n];
    let mut llrs = vec![0.0f64; n];
    let mut u_hat = vec![0u8; n];
    let mut x_hat = vec![0u8; n];
    let mut frame_errors = 0u64;
    for frame in 0..frames {
        let mut rng = frame_rng(seed, DOMAIN_SEARCH_EVAL, frame);
        fill_bits(&mut rng, &mut info_bits);
        word.fill(0);
        for (&pos, &bit) in info.iter().zip(&info_bits) {
            word[pos] = bit;
        }
        encode_in_place(&code.kernels, &mut word)?;
        for (l, &bit) in llrs.iter_mut().zip(&word) {
            *l = channel_llr(bpsk(bit) + sigma * standard_normal(&mut rng), sigma2);
        }
        let mut policy = FrozenPolicy { frozen: &frozen };
        dec.decode_channel_into(&llrs, &mut policy, &mut NoTrace, &mut u_hat, &mut x_hat)?;
        if info
            .iter()
            .zip(&info_bits)
            .any(|(&pos, &bit)| u_hat[pos] != bit)
        {
            frame_errors += 1;
        }
    }
    Ok(frame_errors as f64 / frames as f64)
}

/// Construct and evaluate every kernel ordering for (n, k) at the design
/// SNR, returning (order, estimated FER) sorted by ascending FER. Every
/// ordering sees identical messages and noise so the comparison is paired;
/// equal-FER orders keep their enumeration order.
pub fn search_kernel_orders(
    n: usize,
    k: usize,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<Vec<(KernelSeq, f64)>> {
    if frames == 0 {
        return invalid("kernel-order search needs at least one frame");
    }
    let orders = kernel_orderings(n)?;
    let mut ranked = Vec::with_capacity(orders.len());
    for seq in orders {
        let code = construct_code(&seq, k, design_snr_db, frames, seed)?;
        let fer = evaluate_fer(&code, design_snr_db, frames, seed)?;
        ranked.push((seq, fer));
    }
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(ranked)
}

fn mother_for(n: usize) -> Result<(KernelSeq, usize)> {
    if n < 3 {
        return invalid(format!("rate matching needs n >= 3, got {n}"));
    }
    if n.is_power_of_two() {
        return invalid(format!(
            "n={n} is already a power of two; no rate matching needed"
        ));
    }
    let mother_n = n.next_power_of_two();
    let twos = mother_n.trailing_zeros() as usize;
    Ok((KernelSeq::new(vec![Kernel::T2; twos])?, mother_n))
}

/// Punctured baseline: an all-binary mother of the next power of two, with
/// the first mother_n - n coded positions never transmitted (receiver LLR 0).
/// The frozen set is designed against that punctured channel.
pub fn make_punctured(
    n: usize,
    k: usize,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<RateMatchedCode> {
    let (seq, mother_n) = mother_for(n)?;
    let rm = RateMatchSpec::new(RateMatchMode::Puncture, mother_n, mother_n - n)?;
    let profile = estimate_reliabilities_rate_matched(&seq, &rm, design_snr_db, frames, seed)?;
    let code = build_code(&seq, k, design_snr_db, &profile)?;
    Ok(RateMatchedCode {
        code,
        rate_match: rm,
    })
}

/// Shortened baseline: an all-binary mother of the next power of two whose
/// last mother_n - n coded positions are forced to zero by freezing the
/// inputs that feed them; the receiver sees those positions as perfectly
/// known. The frozen set is designed against that channel with the forced
/// inputs excluded from candidacy.
pub fn make_shortened(
    n: usize,
    k: usize,
    design_snr_db: f64,
    frames: u64,
    seed: u64,
) -> Result<RateMatchedCode> {
    let (seq, mother_n) = mother_for(n)?;
    let rm = RateMatchSpec::new(RateMatchMode::Shorten, mother_n, mother_n - n)?;
    let forced = rm.forced_frozen(&seq)?;
    let profile = estimate_reliabilities_rate_matched(&seq, &rm, design_snr_db, frames, seed)?;
    let code = build_code_with_forced(&seq, k, design_snr_db, &profile, &forced)?;
    Ok(RateMatchedCode {
        code,
        rate_match: rm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> KernelSeq {
        s.parse().unwrap()
    }

    #[test]
    fn estimation_validates_inputs() {
        assert!(estimate_reliabilities(&seq("2"), 2.0, 0, 1).is_err());
        assert!(estimate_reliabilities(&seq("2"), f64::NAN, 10, 1).is_err());
    }

    #[test]
    fn high_snr_reliabilities_vanish() {
        let p = estimate_reliabilities(&seq("2"), 20.0, 10_000, 7).unwrap();
        assert!(p.error_prob.iter().all(|&e| e < 1e-3), "{:?}", p.error_prob);
        assert_eq!(p.frames_run, 10_000);
    }

    #[test]
    fn estimation_is_reproducible() {
        let a = estimate_reliabilities(&seq("2,3"), 1.0, 500, 42).unwrap();
        let b = estimate_reliabilities(&seq("2,3"), 1.0, 500, 42).unwrap();
        assert_eq!(a, b);
        let c = estimate_reliabilities(&seq("2,3"), 1.0, 500, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn four_bit_code_orders_as_density_evolution_predicts() {
        // At 0 dB (rate-1/2 reference, unit noise variance) the four synthetic
        // channels of the two-stage binary code have closed forms: the
        // double-check position (decoded first) fails with probability
        // (1 - (1-2p)^4)/2 for p the raw flip rate, and the double-variable
        // position (decoded last) with probability of a 4-fold repetition
        // error. The first-decoded position is the worst, the last the best.
        let p = estimate_reliabilities(&seq("2,2"), 0.0, 30_000, 11).unwrap();
        let e = &p.error_prob;
        assert!(e[3] > e[1] && e[1] > e[0], "{e:?}");
        assert!((e[3] - 0.3914).abs() < 0.02, "{}", e[3]);
        assert!((e[1] - 0.1449).abs() < 0.02, "{}", e[1]);
        assert!((e[0] - 0.0228).abs() < 0.01, "{}", e[0]);
    }

    fn profile(ep: &[f64]) -> ReliabilityProfile {
        ReliabilityProfile {
            error_prob: ep.to_vec(),
            frames_run: 1,
        }
    }

    #[test]
    fn build_code_picks_most_reliable() {
        let spec = build_code(&seq("2"), 1, 2.0, &profile(&[0.4, 0.1])).unwrap();
        assert_eq!(spec.info(), vec![1]);
        assert_eq!(spec.frozen, vec![0]);
    }

    #[test]
    fn build_code_breaks_ties_toward_lower_index() {
        let spec = build_code(&seq("2,2"), 2, 2.0, &profile(&[0.5, 0.3, 0.3, 0.01])).unwrap();
        assert_eq!(spec.info(), vec![1, 3]);
        assert_eq!(spec.frozen, vec![0, 2]);
    }

    #[test]
    fn build_code_freezes_the_unique_worst() {
        let spec = build_code(&seq("2,2"), 3, 2.0, &profile(&[0.1, 0.9, 0.2, 0.15])).unwrap();
        assert_eq!(spec.frozen, vec![1]);
    }

    #[test]
    fn forced_positions_are_frozen_even_when_reliable() {
        let spec =
            build_code_with_forced(&seq("2,2"), 2, 2.0, &profile(&[0.0, 0.5, 0.4, 0.3]), &[0])
                .unwrap();
        assert!(spec.frozen.contains(&0));
        assert_eq!(spec.info(), vec![2, 3]);
        assert!(build_code_with_forced(&seq("2,2"), 4, 2.0, &profile(&[0.0; 4]), &[0]).is_err());
    }

    #[test]
    fn build_code_rejects_bad_k() {
        let p = profile(&[0.1, 0.2]);
        assert!(build_code(&seq("2"), 0, 2.0, &p).is_err());
        assert!(build_code(&seq("2"), 2, 2.0, &p).is_err());
    }

    #[test]
    fn code_spec_json_roundtrip() {
        let spec = construct_code(&seq("2,3"), 3, 2.0, 200, 5).unwrap();
        let text = spec.to_json();
        assert!(text.contains("\"kernels\": \"2,3\""));
        let back = CodeSpec::from_json(&text).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn code_spec_validation_rejects_corruption() {
        let spec = construct_code(&seq("2,3"), 3, 2.0, 200, 5).unwrap();
        let mut bad = spec.clone();
        bad.k = 9;
        assert!(bad.validate().is_err());
        let mut bad = spec.clone();
        bad.frozen = vec![0, 0, 1];
        assert!(bad.validate().is_err());
        let mut bad = spec.clone();
        bad.frozen = vec![1, 2, 17];
        assert!(bad.validate().is_err());
        let mut bad = spec;
        bad.n = 12;
        assert!(bad.validate().is_err());
        assert!(CodeSpec::from_json("{\"n\": 6}").is_err());
    }

    #[test]
    fn messages_place_into_info_positions() {
        let spec = CodeSpec {
            n: 6,
            k: 3,
            kernels: seq("2,3"),
            frozen: vec![0, 1, 2],
            design_snr_db: 2.0,
        };
        spec.validate().unwrap();
        assert_eq!(spec.indicator(), vec![0, 0, 0, 1, 1, 1]);
        let (u, x) = spec.encode_message(&[1, 0, 1]).unwrap();
        assert_eq!(u, vec![0, 0, 0, 1, 0, 1]);
        assert_eq!(x, encode(&seq("2,3"), &u).unwrap());
        assert!(spec.encode_message(&[1, 0]).is_err());
    }

    #[test]
    fn orderings_enumerate_multiset_permutations() {
        let twelve: Vec<String> = kernel_orderings(12)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(twelve, vec!["2,2,3", "2,3,2", "3,2,2"]);
        assert_eq!(kernel_orderings(8).unwrap().len(), 1);
        assert_eq!(kernel_orderings(6).unwrap().len(), 2);
        assert!(kernel_orderings(7).is_err());
        // 2^6 * 3^6 has 924 orderings, beyond the guard.
        assert!(kernel_orderings(46_656).is_err());
    }

    #[test]
    fn search_ranks_orders_deterministically() {
        let ranked = search_kernel_orders(6, 3, 1.0, 2_000, 9).unwrap();
        assert_eq!(ranked.len(), 2);
        let names: Vec<String> = ranked.iter().map(|(s, _)| s.to_string()).collect();
        assert!(names.contains(&"2,3".to_string()) && names.contains(&"3,2".to_string()));
        assert!(ranked[0].1 <= ranked[1].1);
        let again = search_kernel_orders(6, 3, 1.0, 2_000, 9).unwrap();
        assert_eq!(ranked, again);
    }

    #[test]
    fn punctured_baseline_has_binary_mother() {
        let rmc = make_punctured(48, 24, 2.0, 400, 3).unwrap();
        assert_eq!(rmc.code.n, 64);
        assert_eq!(rmc.code.k, 24);
        assert_eq!(rmc.code.kernels.to_string(), "2,2,2,2,2,2");
        assert_eq!(rmc.rate_match.mode, RateMatchMode::Puncture);
        assert_eq!(rmc.rate_match.dropped, 16);
        assert!(make_punctured(64, 24, 2.0, 400, 3).is_err());
    }

    #[test]
    fn shortened_baseline_freezes_the_forced_inputs() {
        let rmc = make_shortened(72, 36, 2.0, 400, 3).unwrap();
        assert_eq!(rmc.code.n, 128);
        assert_eq!(rmc.rate_match.dropped, 56);
        for i in 0..56 {
            assert!(rmc.code.frozen.contains(&i), "input {i} must be frozen");
        }
        // Every message's codeword really ends in 56 zeros.
        let (_, x) = rmc.code.encode_message(&[1u8; 36]).unwrap();
        assert!(x[72..].iter().all(|&b| b == 0));
    }

    #[test]
    fn rate_matched_estimation_checks_lengths() {
        let rm = RateMatchSpec::new(RateMatchMode::Puncture, 8, 2).unwrap();
        assert!(estimate_reliabilities_rate_matched(&seq("2,2"), &rm, 2.0, 10, 1).is_err());
    }
}
