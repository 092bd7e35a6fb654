//! Discretized density evolution for pure-binary codes under min-sum.
//!
//! With an all-zero codeword and genie-corrected decisions, every tree
//! node's LLR is a function of independent channel LLRs, so each input
//! position's first-look error probability can be computed by propagating
//! LLR distributions instead of sampling frames. Distributions live on a
//! uniform grid that min-sum and addition are closed over, so the only
//! approximation is the initial binning of the channel Gaussian.
//!
//! The grid keeps separate bins for "negative zero" and "positive zero":
//! a min-sum output whose magnitude rounds to zero still has a definite
//! sign, and collapsing both signs into one bin would silently convert
//! small negative LLRs (decision errors) into positive ones.

/// Uniform signed-magnitude LLR grid: magnitudes 0..=half in units of
/// `step`, each with either sign, and the outermost bins absorb the tails.
pub struct Grid {
    pub step: f64,
    pub half: usize,
}

impl Grid {
    pub fn bins(&self) -> usize {
        2 * self.half + 2
    }

    /// Sign and magnitude of a bin index. Indices 0..=half are the negative
    /// side in decreasing magnitude, so index half is "negative zero".
    fn split(&self, idx: usize) -> (bool, usize) {
        if idx <= self.half {
            (true, self.half - idx)
        } else {
            (false, idx - self.half - 1)
        }
    }

    fn index(&self, neg: bool, mag: usize) -> usize {
        let mag = mag.min(self.half);
        if neg {
            self.half - mag
        } else {
            self.half + 1 + mag
        }
    }
}

/// Standard normal CDF, absolute error below 1e-7.
pub fn phi(x: f64) -> f64 {
    let t = 1.0 / (1.0 + 0.2316419 * x.abs());
    let poly = t
        * (0.319381530
            + t * (-0.356563782 + t * (1.781477937 + t * (-1.821255978 + t * 1.330274429))));
    let tail = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt() * poly;
    if x >= 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

/// Bin the channel LLR distribution N(2/sigma2, 4/sigma2). Magnitude m
/// covers ((m - 1/2) step, (m + 1/2) step) on its own side of zero, except
/// that the zero bins stop at zero itself, so every bin has one sign.
pub fn channel_pmf(grid: &Grid, sigma2: f64) -> Vec<f64> {
    let mean = 2.0 / sigma2;
    let sd = 2.0 / sigma2.sqrt();
    let mut pmf = vec![0.0; grid.bins()];
    for (idx, slot) in pmf.iter_mut().enumerate() {
        let (neg, mag) = grid.split(idx);
        let inner = if mag == 0 {
            0.0
        } else {
            (mag as f64 - 0.5) * grid.step
        };
        let outer = if mag == grid.half {
            f64::INFINITY
        } else {
            (mag as f64 + 0.5) * grid.step
        };
        let (lo, hi) = if neg {
            (-outer, -inner)
        } else {
            (inner, outer)
        };
        *slot = phi((hi - mean) / sd) - phi((lo - mean) / sd);
    }
    pmf
}

/// Distribution of minsum2(A, B) for independent A and B. Signs multiply
/// exactly, grid magnitudes take the minimum exactly, so the operation is
/// closed over the grid with no further approximation.
pub fn f_pmf(grid: &Grid, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; grid.bins()];
    for (i, &pa) in a.iter().enumerate() {
        if pa == 0.0 {
            continue;
        }
        let (na, ma) = grid.split(i);
        for (j, &pb) in b.iter().enumerate() {
            let m = pb * pa;
            if m == 0.0 {
                continue;
            }
            let (nb, mb) = grid.split(j);
            out[grid.index(na != nb, ma.min(mb))] += m;
        }
    }
    out
}

/// Distribution of A + B for independent A and B; under the all-zero genie
/// assumption the conditional negation mask is always zero. A sum landing
/// exactly on zero could have come from either side, so its mass is split
/// evenly between the two zero bins.
pub fn g_pmf(grid: &Grid, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; grid.bins()];
    for (i, &pa) in a.iter().enumerate() {
        if pa == 0.0 {
            continue;
        }
        let (na, ma) = grid.split(i);
        let sa = if na { -(ma as i64) } else { ma as i64 };
        for (j, &pb) in b.iter().enumerate() {
            let m = pb * pa;
            if m == 0.0 {
                continue;
            }
            let (nb, mb) = grid.split(j);
            let s = sa + if nb { -(mb as i64) } else { mb as i64 };
            if s == 0 {
                out[grid.index(true, 0)] += m / 2.0;
                out[grid.index(false, 0)] += m / 2.0;
            } else {
                out[grid.index(s < 0, s.unsigned_abs() as usize)] += m;
            }
        }
    }
    out
}

/// P(LLR < 0): the first-look error probability of a hard decision on this
/// distribution. The negative-zero bin holds strictly negative values, so
/// it counts.
pub fn error_prob(grid: &Grid, pmf: &[f64]) -> f64 {
    pmf[..=grid.half].iter().sum()
}

/// First-look error probability of every input of a pure-binary code with
/// `levels` kernels at noise level sigma2, in input-index order.
pub fn binary_profile(grid: &Grid, levels: usize, sigma2: f64) -> Vec<f64> {
    fn expand(grid: &Grid, pmf: &[f64], levels: usize) -> Vec<f64> {
        if levels == 0 {
            return vec![error_prob(grid, pmf)];
        }
        // The check stage feeds the upper input half, the sum stage the lower.
        let upper = expand(grid, &f_pmf(grid, pmf, pmf), levels - 1);
        let mut out = expand(grid, &g_pmf(grid, pmf, pmf), levels - 1);
        out.extend_from_slice(&upper);
        out
    }
    expand(grid, &channel_pmf(grid, sigma2), levels)
}

/// The grid all tests share: values to +/-50 in steps of 1/8.
pub fn default_grid() -> Grid {
    Grid {
        step: 0.125,
        half: 400,
    }
}
