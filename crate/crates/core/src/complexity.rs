//! Complexity accounting for multi-kernel decoders.
//!
//! Two ledgers are kept. The LLR-computation metric counts one unit per LLR
//! per stage (N times the stage count) and compares against a rate-matched
//! power-of-two mother code (N' log2 N'). The gate-count ledger walks the
//! decoder tree and prices each node by the combinational blocks its stage
//! functions need; the closed forms for the two analyzed families (pure
//! binary, one outermost ternary kernel) are provided as cross-checks.
//!
//! Counting conventions: a binary node of size n needs n/2 comparators for
//! its check stage and n/2 adders plus n/2 subtractors (both variants of the
//! conditional sum are precomputed), booked as n adder/subtractor units. A
//! ternary node needs 2n/3 comparators (three-way check plus the embedded
//! two-way check) and 4n/3 adder/subtractor units. A size-2 node is a
//! leaf-parent: both its decisions come from one decision comparator and
//! nothing else is booked.

use crate::error::{invalid, Result};
use crate::kernel::{enumerate_block_lengths, factor_block_length, Kernel, KernelSeq};

/// LLR quantization width used in reports unless overridden.
pub const DEFAULT_Q_BITS: u32 = 5;

/// The stage-count LLR metric against the rate-matched mother code.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LlrMetric {
    pub mk: u64,
    pub mother: u64,
    pub gain_percent: f64,
}

/// Metric for a block length decoded in `stages` stages.
pub fn llr_metric_for(n: u64, stages: u32) -> LlrMetric {
    let mother_n = n.next_power_of_two();
    let mk = n * u64::from(stages);
    let mother = mother_n * u64::from(mother_n.trailing_zeros());
    LlrMetric {
        mk,
        mother,
        gain_percent: 100.0 * (1.0 - mk as f64 / mother as f64),
    }
}

/// Metric for a concrete kernel order.
pub fn llr_metric(seq: &KernelSeq) -> LlrMetric {
    llr_metric_for(seq.block_length() as u64, seq.stages() as u32)
}

/// Combinational block counts of one decoder.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub comparators_f: u64,
    pub comparators_dec: u64,
    pub adders_subtractors: u64,
}

impl GateCounts {
    pub fn total(&self) -> u64 {
        self.comparators_f + self.comparators_dec + self.adders_subtractors
    }
}

/// Walk the decoder tree level by level and book each node's blocks.
pub fn gate_counts(seq: &KernelSeq) -> GateCounts {
    let n = seq.block_length() as u64;
    let mut counts = GateCounts::default();
    let mut size = n;
    for &kernel in seq.kernels() {
        let nodes = n / size;
        match kernel {
            Kernel::T2 if size == 2 => counts.comparators_dec += nodes,
            Kernel::T2 => {
                counts.comparators_f += nodes * (size / 2);
                counts.adders_subtractors += nodes * size;
            }
            Kernel::T3 => {
                counts.comparators_f += nodes * (2 * size / 3);
                counts.adders_subtractors += nodes * (4 * size / 3);
            }
        }
        size /= kernel.size() as u64;
    }
    counts
}

/// Total register bits: n LLRs of q bits each, plus one estimated-codeword
/// bit and one frozen-pattern bit per position.
pub fn register_bits(n: u64, q: u32) -> u64 {
    n * (u64::from(q) + 2)
}

/// Closed-form total block count for a pure-binary code: n(1.5 log2 n - 1),
/// an exact integer for every power of two.
pub fn closed_form_binary_total(n: u64) -> Result<u64> {
    if !n.is_power_of_two() || n < 2 {
        return invalid(format!("closed form needs a power of two >= 2, got {n}"));
    }
    let k = u64::from(n.trailing_zeros());
    Ok(n * (3 * k - 2) / 2)
}

/// Closed-form total block count for one outermost ternary kernel over a
/// binary tail: n(2 log2 n - 4.92). The constant is a rounded fit, so
/// this tracks the exact recursion only to within about one block length.
pub fn closed_form_one_ternary_total(n: u64) -> f64 {
    n as f64 * (2.0 * (n as f64).log2() - 4.92)
}

/// Everything the `complexity` report prints for one kernel order.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexityReport {
    pub n: u64,
    pub stages: u32,
    pub llr_metric_mk: u64,
    pub llr_metric_mother: u64,
    pub gain_percent: f64,
    pub comparators_f: u64,
    pub comparators_dec: u64,
    pub adders_subtractors: u64,
    pub total_blocks: u64,
    pub register_bits: u64,
}

pub fn complexity_report(seq: &KernelSeq, q_bits: u32) -> ComplexityReport {
    let metric = llr_metric(seq);
    let gates = gate_counts(seq);
    let n = seq.block_length() as u64;
    ComplexityReport {
        n,
        stages: seq.stages() as u32,
        llr_metric_mk: metric.mk,
        llr_metric_mother: metric.mother,
        gain_percent: metric.gain_percent,
        comparators_f: gates.comparators_f,
        comparators_dec: gates.comparators_dec,
        adders_subtractors: gates.adders_subtractors,
        total_blocks: gates.total(),
        register_bits: register_bits(n, q_bits),
    }
}

/// LLR-metric gain for every block length from the enumeration that is
/// neither a power of two nor a pure power of three, ascending in n.
pub fn gain_table(max_terms: usize) -> Vec<(u64, f64)> {
    let mut rows: Vec<(u64, f64)> = enumerate_block_lengths(max_terms)
        .into_iter()
        .filter_map(|(m, n)| {
            let (twos, threes) = factor_block_length(n as usize).ok()?;
            if twos == 0 || threes == 0 {
                return None;
            }
            Some((n, llr_metric_for(n, m as u32).gain_percent))
        })
        .collect();
    rows.sort_by_key(|&(n, _)| n);
    rows
}
