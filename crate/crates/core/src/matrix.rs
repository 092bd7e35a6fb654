//! Dense binary matrices packed 64 columns per word.
//!
//! Used to materialize generator matrices for oracle checks and to derive
//! shortening patterns from generator column supports. Storage is row major;
//! bit j of a row lives in word j/64 at bit position j%64. Trailing bits of
//! the last word in each row are kept zero, so equality is plain word
//! comparison.

use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64).max(1);
        BinMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from explicit rows of 0/1 bytes. Panics on ragged input.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.rows && j < self.cols);
        ((self.data[i * self.wpr + j / 64] >> (j % 64)) & 1) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bit: u8) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.wpr + j / 64];
        let mask = 1u64 << (j % 64);
        if bit & 1 == 1 {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    fn xor_row_into(&self, i: usize, acc: &mut [u64]) {
        for (a, w) in acc.iter_mut().zip(self.row_words(i)) {
            *a ^= w;
        }
    }

    /// Kronecker product: block (i1, j1) of the result is self[i1][j1] * other.
    pub fn kronecker(&self, other: &BinMatrix) -> BinMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                if self.get(i1, j1) == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        if other.get(i2, j2) == 1 {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, 1);
                        }
                    }
                }
            }
        }
        out
    }

    /// GF(2) matrix product self * other.
    pub fn mul(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != other.rows {
            return invalid(format!(
                "dimension mismatch: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.wpr];
            for k in 0..self.cols {
                if self.get(i, k) == 1 {
                    other.xor_row_into(k, &mut acc);
                }
            }
            out.data[i * out.wpr..(i + 1) * out.wpr].copy_from_slice(&acc);
        }
        Ok(out)
    }

    /// Row vector times matrix over GF(2): out[j] = parity(sum_i u[i] * M[i][j]).
    pub fn vec_mul(&self, u: &[u8]) -> Vec<u8> {
        assert_eq!(u.len(), self.rows, "vector length must equal row count");
        let mut acc = vec![0u64; self.wpr];
        for (i, &b) in u.iter().enumerate() {
            if b & 1 == 1 {
                self.xor_row_into(i, &mut acc);
            }
        }
        (0..self.cols)
            .map(|j| ((acc[j / 64] >> (j % 64)) & 1) as u8)
            .collect()
    }

    /// Gauss-Jordan inverse over GF(2); None when singular or non-square.
    pub fn inverse(&self) -> Option<BinMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let wpr = self.wpr;
        // Working rows: [self | identity], 2*wpr words each.
        let mut work: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = vec![0u64; 2 * wpr];
                row[..wpr].copy_from_slice(self.row_words(i));
                row[wpr + i / 64] |= 1u64 << (i % 64);
                row
            })
            .collect();
        for col in 0..n {
            let bit = |row: &[u64]| (row[col / 64] >> (col % 64)) & 1 == 1;
            let pivot = (col..n).find(|&r| bit(&work[r]))?;
            work.swap(col, pivot);
            let prow = work[col].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != col && bit(row) {
                    for (a, b) in row.iter_mut().zip(&prow) {
                        *a ^= b;
                    }
                }
            }
        }
        let mut out = Self::zeros(n, n);
        for (dst, src) in out.data.chunks_exact_mut(wpr).zip(&work) {
            dst.copy_from_slice(&src[wpr..]);
        }
        Some(out)
    }

    /// Rows i with a one in column j.
    pub fn column_support(&self, j: usize) -> Vec<usize> {
        (0..self.rows).filter(|&i| self.get(i, j) == 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }
}
