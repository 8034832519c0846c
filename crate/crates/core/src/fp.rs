//! Dense linear algebra over the prime field F_p.
//!
//! Residues are stored as canonical representatives in `[0, p)` and every
//! operation reduces eagerly. Pivot selection is deterministic (first nonzero
//! entry scanning down the current column), so reduced forms are reproducible
//! bit for bit.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A prime modulus `2 <= p <= 2^31 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_u64(self) -> u64 {
        self.0 as u64
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    /// Canonical representative of a signed integer.
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.0 as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.0),
            "zero has no inverse mod {}",
            self.0
        );
        self.pow(a, self.0 as u64 - 2)
    }

    /// The representative of `a` in `(-p/2, p/2]`, for display.
    pub fn symmetric(self, a: u32) -> i64 {
        let p = self.0 as i64;
        let a = a as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Result of [`FpMatrix::row_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: FpMatrix,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major entries, validating shape and residues.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<u32>,
        p: PrimeModulus,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        if let Some(idx) = entries.iter().position(|&e| e >= p.get()) {
            return Err(Error::EntryOutOfRange {
                row: idx / cols.max(1),
                col: idx % cols.max(1),
                value: entries[idx],
                p: p.get(),
            });
        }
        Ok(FpMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows of signed integers, reducing each mod p.
    pub fn from_signed_rows(rows: &[Vec<i64>], p: PrimeModulus) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &v) in row.iter().enumerate() {
                m.entries[r * cols + c] = p.reduce_signed(v);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    /// Stores `value` at `(r, c)`. The caller keeps `value < p`.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FpMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u32], p: PrimeModulus) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let acc = self.row(r).iter().zip(v).fold(0u64, |acc, (&a, &b)| {
                    (acc + a as u64 * b as u64) % p.as_u64()
                });
                acc as u32
            })
            .collect()
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn row_reduce(&self, p: PrimeModulus) -> RowReduction {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = p.inv(m.get(pivot_row, col));
            if inv != 1 {
                for c in col..cols {
                    let v = m.get(pivot_row, c);
                    m.set(pivot_row, c, p.mul(v, inv));
                }
            }
            let (head, rest) = m.entries.split_at_mut(pivot_row * cols);
            let (prow, tail) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[col];
                if factor == 0 {
                    return;
                }
                let neg = p.neg(factor);
                for c in col..cols {
                    if prow[c] != 0 {
                        row[c] = p.add(row[c], p.mul(neg, prow[c]));
                    }
                }
            };
            head.chunks_exact_mut(cols).for_each(eliminate);
            tail.chunks_exact_mut(cols).for_each(eliminate);
            pivots.push(col);
            pivot_row += 1;
        }
        RowReduction {
            rank: pivots.len(),
            pivots,
            reduced: m,
        }
    }

    pub fn rank(&self, p: PrimeModulus) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminating on the shorter side is cheaper; rank is transpose invariant.
        if self.rows > self.cols {
            self.transpose().row_reduce(p).rank
        } else {
            self.row_reduce(p).rank
        }
    }

    /// A basis of `{ v : self * v = 0 }`, one vector per non-pivot column.
    pub fn kernel_basis(&self, p: PrimeModulus) -> Vec<Vec<u32>> {
        let RowReduction {
            pivots, reduced, ..
        } = self.row_reduce(p);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = p.neg(reduced.get(r, free));
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.entries.split_at_mut(hi * cols);
        first[lo * cols..(lo + 1) * cols].swap_with_slice(&mut second[..cols]);
    }
}
