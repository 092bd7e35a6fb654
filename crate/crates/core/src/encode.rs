//! In-place multi-kernel polar encoding.
//!
//! The codeword is u * G with G the left-fold Kronecker product of the kernel
//! sequence, outermost first. Rather than materializing G, the encoder applies
//! one butterfly level per kernel: the level for kernel i (size k, outermost
//! is level 0) works on blocks of `size = N / (k_0 * .. * k_{i-1})` elements
//! and combines, inside each block of that size, the k values that sit
//! `size / k` apart. Cost is one pass per kernel over all N bits.

use crate::error::{invalid, Result};
use crate::kernel::{Kernel, KernelSeq};

/// Apply the binary kernel to one (a, b) pair: (a ^ b, a).
#[inline]
fn butterfly2(v: &mut [u8], i: usize, h: usize) {
    let (a, b) = (v[i], v[i + h]);
    v[i] = a ^ b;
    v[i + h] = a;
}

/// Apply the ternary kernel to one (a, b, c) triple:
/// (a ^ b, a ^ c, a ^ b ^ c).
#[inline]
fn butterfly3(v: &mut [u8], i: usize, t: usize) {
    let (a, b, c) = (v[i], v[i + t], v[i + 2 * t]);
    v[i] = a ^ b;
    v[i + t] = a ^ c;
    v[i + 2 * t] = a ^ b ^ c;
}

/// Encode in place: `v` enters holding the input vector u and leaves holding
/// the codeword x = u * G.
pub fn encode_in_place(seq: &KernelSeq, v: &mut [u8]) -> Result<()> {
    let n = seq.block_length();
    if v.len() != n {
        return invalid(format!(
            "input length {} does not match block length {n}",
            v.len()
        ));
    }
    debug_assert!(v.iter().all(|&b| b <= 1), "encoder input must be bits");
    let mut size = n;
    for &kernel in seq.kernels() {
        let k = kernel.size();
        let h = size / k;
        for block in (0..n).step_by(size) {
            for i in block..block + h {
                match kernel {
                    Kernel::T2 => butterfly2(v, i, h),
                    Kernel::T3 => butterfly3(v, i, h),
                }
            }
        }
        size = h;
    }
    Ok(())
}

/// Encode into a fresh vector.
pub fn encode(seq: &KernelSeq, u: &[u8]) -> Result<Vec<u8>> {
    let mut v = u.to_vec();
    encode_in_place(seq, &mut v)?;
    Ok(v)
}
