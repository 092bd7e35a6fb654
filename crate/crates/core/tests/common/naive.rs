//! A deliberately plain reference decoder used as an oracle.
//!
//! Every stage output is a freshly allocated vector computed straight from
//! the update rules; there is no shared scratch, no in-place reuse, and no
//! two-leaf shortcut. Only the arithmetic model is shared with the optimized
//! decoder, since the model itself defines the values under test.

use mkpolar::kernel::Kernel;
use mkpolar::llr::LlrArithmetic;
use mkpolar::KernelSeq;

/// Decode the node covering input indices [base, base + llrs.len()).
/// Returns its decided input bits (in index order) and its partial sums.
pub fn decode_node<A: LlrArithmetic>(
    ar: &A,
    kernels: &[Kernel],
    llrs: &[A::Llr],
    frozen: &[bool],
    base: usize,
) -> (Vec<u8>, Vec<u8>) {
    let n = llrs.len();
    if n == 1 {
        let bit = if frozen[base] {
            0
        } else {
            ar.hard_bit(llrs[0])
        };
        return (vec![bit], vec![bit]);
    }
    match kernels[0] {
        Kernel::T2 => {
            let h = n / 2;
            // The check stage estimates what the upper input half explains,
            // so the upper half is decided first.
            let f: Vec<_> = (0..h).map(|i| ar.minsum2(llrs[i], llrs[i + h])).collect();
            let (u_hi, x_hi) = decode_node(ar, &kernels[1..], &f, frozen, base + h);
            let g: Vec<_> = (0..h)
                .map(|i| ar.sat_add(ar.cond_negate(llrs[i], x_hi[i]), llrs[i + h]))
                .collect();
            let (u_lo, x_lo) = decode_node(ar, &kernels[1..], &g, frozen, base);
            let mut u = u_lo;
            u.extend_from_slice(&u_hi);
            let mut x = Vec::with_capacity(n);
            for i in 0..h {
                x.push(x_hi[i] ^ x_lo[i]);
            }
            x.extend_from_slice(&x_lo);
            (u, x)
        }
        Kernel::T3 => {
            let t = n / 3;
            let f: Vec<_> = (0..t)
                .map(|i| ar.minsum3(llrs[i], llrs[i + t], llrs[i + 2 * t]))
                .collect();
            let (u0, b0) = decode_node(ar, &kernels[1..], &f, frozen, base);
            let g1: Vec<_> = (0..t)
                .map(|i| {
                    ar.sat_add(
                        ar.cond_negate(llrs[i], b0[i]),
                        ar.minsum2(llrs[i + t], llrs[i + 2 * t]),
                    )
                })
                .collect();
            let (u1, b1) = decode_node(ar, &kernels[1..], &g1, frozen, base + t);
            let g2: Vec<_> = (0..t)
                .map(|i| {
                    ar.sat_add(
                        ar.cond_negate(llrs[i + t], b0[i]),
                        ar.cond_negate(llrs[i + 2 * t], b0[i] ^ b1[i]),
                    )
                })
                .collect();
            let (u2, b2) = decode_node(ar, &kernels[1..], &g2, frozen, base + 2 * t);
            let mut u = u0;
            u.extend_from_slice(&u1);
            u.extend_from_slice(&u2);
            let mut x = Vec::with_capacity(n);
            for i in 0..t {
                x.push(b0[i] ^ b1[i]);
            }
            for i in 0..t {
                x.push(b0[i] ^ b2[i]);
            }
            for i in 0..t {
                x.push(b0[i] ^ b1[i] ^ b2[i]);
            }
            (u, x)
        }
    }
}

/// Decode a frame of float channel LLRs through the given arithmetic model.
pub fn decode<A: LlrArithmetic>(
    ar: &A,
    seq: &KernelSeq,
    channel_llrs: &[f64],
    frozen: &[bool],
) -> (Vec<u8>, Vec<u8>) {
    let llrs: Vec<_> = channel_llrs.iter().map(|&l| ar.from_channel(l)).collect();
    decode_node(ar, seq.kernels(), &llrs, frozen, 0)
}
