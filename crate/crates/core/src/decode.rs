//! Min-sum successive-cancellation decoding over mixed kernel trees.
//!
//! The decoder walks the kernel tree depth first. A node of size n at level l
//! receives n LLRs; for each child in visit order it derives the child's
//! n / k LLRs from its own LLRs plus the already-decoded siblings' partial
//! sums, recurses, and finally re-encodes the children's partial sums into its
//! own. Leaves make hard decisions, forced to 0 at frozen positions.
//!
//! Under the pinned binary kernel [[1,1],[1,0]] the two coded halves of a node
//! carry enc(U0 xor U1) and enc(U0), with U0 the lower half of the node's
//! input bits and U1 the upper half. The check combination of both halves
//! therefore estimates enc(U1), so a binary node visits the upper half of its
//! input range first, then the lower half with the decided partial sums folded
//! in. The ternary kernel visits its three sub-ranges in natural order.
//!
//! All stage functions use sub-block strides: position i of a node pairs with
//! i + n/2 (binary) or i + n/3 and i + 2n/3 (ternary).

use crate::error::{invalid, Result};
use crate::kernel::{Kernel, KernelSeq};
use crate::llr::LlrArithmetic;

/// Per-level node sizes of the decoding tree: `sizes()[l]` is the size of
/// every node at level l, from N at the root (level 0) down to 1 at the
/// leaves.
#[derive(Clone, Debug)]
pub struct StageLayout {
    sizes: Vec<usize>,
}

impl StageLayout {
    pub fn new(seq: &KernelSeq) -> Self {
        let mut sizes = Vec::with_capacity(seq.stages() + 1);
        let mut s = seq.block_length();
        sizes.push(s);
        for k in seq.kernels() {
            s /= k.size();
            sizes.push(s);
        }
        StageLayout { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// Decides each input bit given its hard decision from the LLR. Separating
/// the decision from the traversal lets the same walk serve normal decoding
/// (frozen bits forced to 0) and genie-aided construction (decisions forced
/// to the transmitted truth while mistakes are tallied).
pub trait LeafPolicy {
    fn decide(&mut self, u_index: usize, hard: u8) -> u8;
}

/// Normal decoding: frozen positions decide 0, information positions follow
/// the channel.
pub struct FrozenPolicy<'a> {
    pub frozen: &'a [bool],
}

impl LeafPolicy for FrozenPolicy<'_> {
    fn decide(&mut self, u_index: usize, hard: u8) -> u8 {
        if self.frozen[u_index] {
            0
        } else {
            hard
        }
    }
}

/// Genie-aided decoding for construction: every decision is corrected to the
/// transmitted bit so errors do not propagate, and each position counts how
/// often its first-look decision was wrong.
pub struct GeniePolicy<'a> {
    pub truth: &'a [u8],
    pub mistakes: &'a mut [u64],
}

impl LeafPolicy for GeniePolicy<'_> {
    fn decide(&mut self, u_index: usize, hard: u8) -> u8 {
        if hard != self.truth[u_index] {
            self.mistakes[u_index] += 1;
        }
        self.truth[u_index]
    }
}

/// Observer for the traversal; `op` is one of "f", "g" (binary), "f3", "g1",
/// "g2" (ternary), or "leaf". `base` is the first input index the node
/// covers. The default implementation ignores everything.
pub trait DecodeTrace<L> {
    fn stage(&mut self, _level: usize, _base: usize, _op: &'static str, _llrs: &[L]) {}
}

/// The silent trace.
pub struct NoTrace;

impl<L> DecodeTrace<L> for NoTrace {}

/// Check combination of a binary node's halves: estimates the coded bits the
/// upper input half alone explains. `out.len()` must be half `alpha.len()`.
pub fn f_binary<A: LlrArithmetic>(ar: &A, alpha: &[A::Llr], out: &mut [A::Llr]) {
    let h = out.len();
    assert_eq!(alpha.len(), 2 * h, "f_binary needs an even-length input");
    for i in 0..h {
        out[i] = ar.minsum2(alpha[i], alpha[i + h]);
    }
}

/// Variable combination after the first binary child: folds that child's
/// partial sums `beta_first` into the evidence for the remaining half.
pub fn g_binary<A: LlrArithmetic>(ar: &A, alpha: &[A::Llr], beta_first: &[u8], out: &mut [A::Llr]) {
    let h = out.len();
    assert_eq!(alpha.len(), 2 * h, "g_binary size mismatch");
    assert_eq!(beta_first.len(), h, "g_binary size mismatch");
    for i in 0..h {
        out[i] = ar.sat_add(ar.cond_negate(alpha[i], beta_first[i]), alpha[i + h]);
    }
}

/// Re-encode a binary node's partial sums from its children's, first-visited
/// child first: out = (first xor second, second).
pub fn combine_binary(first: &[u8], second: &[u8], out: &mut [u8]) {
    let h = first.len();
    assert_eq!(second.len(), h, "combine_binary length mismatch");
    assert_eq!(out.len(), 2 * h, "combine_binary length mismatch");
    for i in 0..h {
        out[i] = first[i] ^ second[i];
        out[i + h] = second[i];
    }
}

/// Three-way check combination of a ternary node's thirds; estimates the
/// coded bits its first sub-range explains.
pub fn f_ternary<A: LlrArithmetic>(ar: &A, alpha: &[A::Llr], out: &mut [A::Llr]) {
    let t = out.len();
    assert_eq!(
        alpha.len(),
        3 * t,
        "f_ternary needs a length divisible by 3"
    );
    for i in 0..t {
        out[i] = ar.minsum3(alpha[i], alpha[i + t], alpha[i + 2 * t]);
    }
}

/// Evidence for a ternary node's second sub-range given the first's partial
/// sums: direct arm plus the check of the two remaining thirds.
pub fn g1_ternary<A: LlrArithmetic>(ar: &A, alpha: &[A::Llr], beta0: &[u8], out: &mut [A::Llr]) {
    let t = out.len();
    assert_eq!(alpha.len(), 3 * t, "g1_ternary size mismatch");
    assert_eq!(beta0.len(), t, "g1_ternary size mismatch");
    for i in 0..t {
        out[i] = ar.sat_add(
            ar.cond_negate(alpha[i], beta0[i]),
            ar.minsum2(alpha[i + t], alpha[i + 2 * t]),
        );
    }
}

/// Evidence for a ternary node's third sub-range given the first two's
/// partial sums; the last arm's negation mask is beta0 xor beta1.
pub fn g2_ternary<A: LlrArithmetic>(
    ar: &A,
    alpha: &[A::Llr],
    beta0: &[u8],
    beta1: &[u8],
    out: &mut [A::Llr],
) {
    let t = out.len();
    assert_eq!(alpha.len(), 3 * t, "g2_ternary size mismatch");
    assert_eq!(beta0.len(), t, "g2_ternary size mismatch");
    assert_eq!(beta1.len(), t, "g2_ternary size mismatch");
    for i in 0..t {
        out[i] = ar.sat_add(
            ar.cond_negate(alpha[i + t], beta0[i]),
            ar.cond_negate(alpha[i + 2 * t], beta0[i] ^ beta1[i]),
        );
    }
}

/// Re-encode a ternary node's partial sums from its children's, in visit
/// order: out thirds = (b0 xor b1, b0 xor b2, b0 xor b1 xor b2).
pub fn combine_ternary(b0: &[u8], b1: &[u8], b2: &[u8], out: &mut [u8]) {
    let t = b0.len();
    assert_eq!(b1.len(), t, "combine_ternary length mismatch");
    assert_eq!(b2.len(), t, "combine_ternary length mismatch");
    assert_eq!(out.len(), 3 * t, "combine_ternary length mismatch");
    for i in 0..t {
        out[i] = b0[i] ^ b1[i];
        out[i + t] = b0[i] ^ b2[i];
        out[i + 2 * t] = b0[i] ^ b1[i] ^ b2[i];
    }
}

/// Hard decision for one input bit: frozen bits are 0; otherwise 1 exactly
/// when the LLR is strictly negative (a +0 or -0 LLR decides 0).
pub fn leaf_decide<A: LlrArithmetic>(ar: &A, llr: A::Llr, frozen: bool) -> u8 {
    if frozen {
        0
    } else {
        ar.hard_bit(llr)
    }
}

/// Both decisions of a size-2 node, first-visited bit first. Evaluated as the
/// literal f-then-g composition. When neither bit is frozen this agrees with
/// the magnitude view (the second bit is the sign of the larger-magnitude
/// input, xor the first decision when the first input dominates); the
/// composition is authoritative because it extends the zero-LLR-decides-0
/// rule to the exact-cancellation tie, where the magnitude view would answer
/// from the sign of a value the frozen first bit contradicts.
pub fn decide_pair<A: LlrArithmetic>(
    ar: &A,
    l0: A::Llr,
    l1: A::Llr,
    first_frozen: bool,
    second_frozen: bool,
) -> (u8, u8) {
    let first = leaf_decide(ar, ar.minsum2(l0, l1), first_frozen);
    let second = leaf_decide(ar, ar.sat_add(ar.cond_negate(l0, first), l1), second_frozen);
    (first, second)
}

/// Decoded input bits and the re-encoded codeword they imply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub u_hat: Vec<u8>,
    pub x_hat: Vec<u8>,
}

#[allow(clippy::too_many_arguments)]
fn decode_node<A: LlrArithmetic>(
    ar: &A,
    kernels: &[Kernel],
    level: usize,
    base: usize,
    alpha: &[A::Llr],
    alphas: &mut [Vec<A::Llr>],
    collects: &mut [Vec<u8>],
    beta: &mut [u8],
    u_hat: &mut [u8],
    policy: &mut dyn LeafPolicy,
    trace: &mut dyn DecodeTrace<A::Llr>,
) {
    let n = alpha.len();
    if n == 1 {
        trace.stage(level, base, "leaf", alpha);
        let bit = policy.decide(base, ar.hard_bit(alpha[0]));
        u_hat[base] = bit;
        beta[0] = bit;
        return;
    }
    if n == 2 {
        // Identical to the full f/recurse/g/recurse path of a binary node
        // with two leaves, without touching the scratch buffers.
        let f = ar.minsum2(alpha[0], alpha[1]);
        trace.stage(level, base, "f", std::slice::from_ref(&f));
        let first = policy.decide(base + 1, ar.hard_bit(f));
        u_hat[base + 1] = first;
        let g = ar.sat_add(ar.cond_negate(alpha[0], first), alpha[1]);
        trace.stage(level, base, "g", std::slice::from_ref(&g));
        let second = policy.decide(base, ar.hard_bit(g));
        u_hat[base] = second;
        beta[0] = first ^ second;
        beta[1] = second;
        return;
    }
    let (child_alpha, rest_alphas) = alphas.split_first_mut().expect("scratch depth");
    let (collect, rest_collects) = collects.split_first_mut().expect("scratch depth");
    match kernels[level] {
        Kernel::T2 => {
            let h = n / 2;
            let (c_second, c_first) = collect[..n].split_at_mut(h);
            f_binary(ar, alpha, &mut child_alpha[..h]);
            trace.stage(level, base, "f", &child_alpha[..h]);
            decode_node(
                ar,
                kernels,
                level + 1,
                base + h,
                &child_alpha[..h],
                rest_alphas,
                rest_collects,
                c_first,
                u_hat,
                policy,
                trace,
            );
            g_binary(ar, alpha, c_first, &mut child_alpha[..h]);
            trace.stage(level, base, "g", &child_alpha[..h]);
            decode_node(
                ar,
                kernels,
                level + 1,
                base,
                &child_alpha[..h],
                rest_alphas,
                rest_collects,
                c_second,
                u_hat,
                policy,
                trace,
            );
            combine_binary(c_first, c_second, beta);
        }
        Kernel::T3 => {
            let t = n / 3;
            let (c0, rest) = collect[..n].split_at_mut(t);
            let (c1, c2) = rest.split_at_mut(t);
            f_ternary(ar, alpha, &mut child_alpha[..t]);
            trace.stage(level, base, "f3", &child_alpha[..t]);
            decode_node(
                ar,
                kernels,
                level + 1,
                base,
                &child_alpha[..t],
                rest_alphas,
                rest_collects,
                c0,
                u_hat,
                policy,
                trace,
            );
            g1_ternary(ar, alpha, c0, &mut child_alpha[..t]);
            trace.stage(level, base, "g1", &child_alpha[..t]);
            decode_node(
                ar,
                kernels,
                level + 1,
                base + t,
                &child_alpha[..t],
                rest_alphas,
                rest_collects,
                c1,
                u_hat,
                policy,
                trace,
            );
            g2_ternary(ar, alpha, c0, c1, &mut child_alpha[..t]);
            trace.stage(level, base, "g2", &child_alpha[..t]);
            decode_node(
                ar,
                kernels,
                level + 1,
                base + 2 * t,
                &child_alpha[..t],
                rest_alphas,
                rest_collects,
                c2,
                u_hat,
                policy,
                trace,
            );
            combine_ternary(c0, c1, c2, beta);
        }
    }
}

/// Reusable successive-cancellation decoder for one kernel sequence and one
/// arithmetic model. Scratch buffers live in the decoder, so decoding
/// allocates nothing; use one decoder per thread for frame parallelism.
pub struct ScDecoder<A: LlrArithmetic> {
    arith: A,
    seq: KernelSeq,
    alphas: Vec<Vec<A::Llr>>,
    collects: Vec<Vec<u8>>,
    conv: Vec<A::Llr>,
}

impl<A: LlrArithmetic> ScDecoder<A> {
    pub fn new(arith: A, seq: KernelSeq) -> Self {
        let layout = StageLayout::new(&seq);
        let m = seq.stages();
        let alphas = (0..m)
            .map(|l| vec![A::Llr::default(); layout.sizes()[l + 1]])
            .collect();
        let collects = (0..m).map(|l| vec![0u8; layout.sizes()[l]]).collect();
        ScDecoder {
            arith,
            seq,
            alphas,
            collects,
            conv: Vec::new(),
        }
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    pub fn seq(&self) -> &KernelSeq {
        &self.seq
    }

    pub fn block_length(&self) -> usize {
        self.seq.block_length()
    }

    /// Decode one frame of already-converted LLRs into caller buffers.
    pub fn decode_into(
        &mut self,
        llrs: &[A::Llr],
        policy: &mut dyn LeafPolicy,
        trace: &mut dyn DecodeTrace<A::Llr>,
        u_hat: &mut [u8],
        x_hat: &mut [u8],
    ) -> Result<()> {
        let n = self.block_length();
        if llrs.len() != n || u_hat.len() != n || x_hat.len() != n {
            return invalid(format!(
                "decode buffers must all have the block length {n} (got {}, {}, {})",
                llrs.len(),
                u_hat.len(),
                x_hat.len()
            ));
        }
        decode_node(
            &self.arith,
            self.seq.kernels(),
            0,
            0,
            llrs,
            &mut self.alphas,
            &mut self.collects,
            x_hat,
            u_hat,
            policy,
            trace,
        );
        Ok(())
    }

    /// Decode one frame of channel LLRs (floats) into caller buffers,
    /// converting through the decoder's arithmetic model.
    pub fn decode_channel_into(
        &mut self,
        channel_llrs: &[f64],
        policy: &mut dyn LeafPolicy,
        trace: &mut dyn DecodeTrace<A::Llr>,
        u_hat: &mut [u8],
        x_hat: &mut [u8],
    ) -> Result<()> {
        let mut conv = std::mem::take(&mut self.conv);
        conv.clear();
        conv.extend(channel_llrs.iter().map(|&l| self.arith.from_channel(l)));
        let out = self.decode_into(&conv, policy, trace, u_hat, x_hat);
        self.conv = conv;
        out
    }

    /// Decode one frame of channel LLRs under a frozen set.
    pub fn decode(&mut self, channel_llrs: &[f64], frozen: &[bool]) -> Result<DecodeResult> {
        let n = self.block_length();
        if frozen.len() != n {
            return invalid(format!(
                "frozen set length {} does not match N={n}",
                frozen.len()
            ));
        }
        let mut u_hat = vec![0u8; n];
        let mut x_hat = vec![0u8; n];
        self.decode_channel_into(
            channel_llrs,
            &mut FrozenPolicy { frozen },
            &mut NoTrace,
            &mut u_hat,
            &mut x_hat,
        )?;
        Ok(DecodeResult { u_hat, x_hat })
    }

    /// Decode one frame of channel LLRs under an arbitrary policy and trace.
    pub fn decode_with(
        &mut self,
        channel_llrs: &[f64],
        policy: &mut dyn LeafPolicy,
        trace: &mut dyn DecodeTrace<A::Llr>,
    ) -> Result<DecodeResult> {
        let n = self.block_length();
        let mut u_hat = vec![0u8; n];
        let mut x_hat = vec![0u8; n];
        self.decode_channel_into(channel_llrs, policy, trace, &mut u_hat, &mut x_hat)?;
        Ok(DecodeResult { u_hat, x_hat })
    }
}
