//! Polarizing kernels and kernel sequences.
//!
//! Two kernels are supported: the binary kernel T2 = [[1,1],[1,0]] and the
//! ternary kernel T3 = [[1,1,1],[1,0,1],[0,1,1]]. A kernel sequence lists the
//! generator's factors outermost first; the generator is the left fold of the
//! Kronecker product over exactly the listed kernels, so the order is part of
//! the code definition and the block length is the product of kernel sizes
//! (every N = 2^a * 3^b is reachable).

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::matrix::BinMatrix;

/// Generator matrices are only materialized up to this block length; encoding
/// and decoding never build them.
pub const MAX_GENERATOR_N: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    T2,
    T3,
}

impl Kernel {
    pub fn size(self) -> usize {
        match self {
            Kernel::T2 => 2,
            Kernel::T3 => 3,
        }
    }

    pub fn matrix(self) -> BinMatrix {
        match self {
            Kernel::T2 => BinMatrix::from_rows(&[&[1, 1], &[1, 0]]),
            Kernel::T3 => BinMatrix::from_rows(&[&[1, 1, 1], &[1, 0, 1], &[0, 1, 1]]),
        }
    }

    pub fn from_size(size: usize) -> Result<Kernel> {
        match size {
            2 => Ok(Kernel::T2),
            3 => Ok(Kernel::T3),
            other => invalid(format!("kernel size {other} is not 2 or 3")),
        }
    }
}

/// Ordered kernel sequence, outermost first. Textual form is the comma list of
/// sizes, e.g. "3,2,2,2,2" for N = 48.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelSeq(Vec<Kernel>);

impl KernelSeq {
    pub fn new(kernels: Vec<Kernel>) -> Result<Self> {
        if kernels.is_empty() {
            return invalid("kernel sequence must not be empty");
        }
        Ok(KernelSeq(kernels))
    }

    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        Self::new(
            sizes
                .iter()
                .map(|&s| Kernel::from_size(s))
                .collect::<Result<_>>()?,
        )
    }

    pub fn kernels(&self) -> &[Kernel] {
        &self.0
    }

    /// Number of decoding stages, one per kernel.
    pub fn stages(&self) -> usize {
        self.0.len()
    }

    pub fn block_length(&self) -> usize {
        self.0.iter().map(|k| k.size()).product()
    }

    /// (binary, ternary) kernel counts.
    pub fn counts(&self) -> (usize, usize) {
        let threes = self.0.iter().filter(|k| **k == Kernel::T3).count();
        (self.0.len() - threes, threes)
    }
}

impl fmt::Display for KernelSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.0.iter().map(|k| k.size().to_string()).collect();
        f.write_str(&sizes.join(","))
    }
}

impl FromStr for KernelSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad kernel size {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Self::from_sizes(&sizes)
    }
}

impl Serialize for KernelSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for KernelSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Kronecker product of two binary matrices.
pub fn kronecker(a: &BinMatrix, b: &BinMatrix) -> BinMatrix {
    a.kronecker(b)
}

/// Materialize the generator: the left fold of the Kronecker product over the
/// sequence, outermost kernel first. Starts from the 1x1 identity so exactly
/// the listed kernels enter the product.
pub fn generator(seq: &KernelSeq) -> Result<BinMatrix> {
    let n = seq.block_length();
    if n > MAX_GENERATOR_N {
        return invalid(format!(
            "generator for N={n} exceeds the {MAX_GENERATOR_N} cap"
        ));
    }
    let mut g = BinMatrix::identity(1);
    for k in seq.kernels() {
        g = g.kronecker(&k.matrix());
    }
    Ok(g)
}

/// All (stage count, block length) pairs with at most `max_terms` kernels:
/// for each m in 1..=max_terms, every N = 2^(m-j) * 3^j with j in 0..=m.
pub fn enumerate_block_lengths(max_terms: usize) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    for m in 1..=max_terms {
        for j in 0..=m {
            out.push((m, 2u64.pow((m - j) as u32) * 3u64.pow(j as u32)));
        }
    }
    out
}

/// Factor a block length as 2^a * 3^b; errors when other primes remain.
pub fn factor_block_length(n: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return invalid(format!("block length {n} must be at least 2"));
    }
    let mut rem = n;
    let mut twos = 0;
    let mut threes = 0;
    while rem.is_multiple_of(2) {
        rem /= 2;
        twos += 1;
    }
    while rem.is_multiple_of(3) {
        rem /= 3;
        threes += 1;
    }
    if rem != 1 {
        return invalid(format!("block length {n} is not of the form 2^a * 3^b"));
    }
    Ok((twos, threes))
}

/// Canonical order for a block length: ternary kernels outermost, then binary.
/// Gate and LLR metrics do not depend on the order; actual codes should pick
/// their order explicitly or by search.
pub fn canonical_seq(n: usize) -> Result<KernelSeq> {
    let (twos, threes) = factor_block_length(n)?;
    let mut kernels = vec![Kernel::T3; threes];
    kernels.extend(std::iter::repeat_n(Kernel::T2, twos));
    KernelSeq::new(kernels)
}
