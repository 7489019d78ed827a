//! Dense bit-packed linear algebra over GF(2).
//!
//! Every parity check matrix, differential and codeword in this crate is
//! stored as an [`F2Matrix`] or [`F2Vector`]. Elimination is word-parallel
//! XOR on packed `u64` rows, which is plenty at desk scale (n up to a few
//! thousand); no sparse formats.
//!
//! Row echelon always pivots on the first set bit of the leftmost available
//! column, so ranks, kernels and row-space bases come out deterministic.
//!
//! ```
//! use homprod::f2::F2Matrix;
//!
//! let h = F2Matrix::from_rows(&["110", "011"]).unwrap();
//! assert_eq!(h.rank(), 2);
//! let kernel = h.kernel_basis();
//! assert_eq!(kernel.len(), 1);           // cols − rank
//! assert_eq!(kernel[0].to_bit_string(), "111");
//! ```

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 bits per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from 0/1 characters, e.g. `"1101"`.
    pub fn from_str(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(v)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Indicator vector of the given support positions.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in 0..self.len {
            if self.get(i) {
                out.set(i, true);
            }
        }
        for i in 0..other.len {
            if other.get(i) {
                out.set(self.len + i, true);
            }
        }
        out
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({})", self.to_bit_string())
    }
}

/// A dense matrix over GF(2), rows packed 64 bits per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 characters.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} columns, expected {cols}",
                    row.len()
                )));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
                }
            }
        }
        Ok(m)
    }

    pub fn from_dense(entries: &[Vec<u8>]) -> Self {
        let cols = entries.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(entries.len(), cols);
        for (i, row) in entries.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// ℓ×ℓ circulant whose first row has ones at the given shifts:
    /// entry (i, j) is set iff (j − i) mod ℓ is one of the shifts.
    pub fn circulant(ell: usize, shifts: &[usize]) -> Self {
        let mut m = Self::zeros(ell, ell);
        for i in 0..ell {
            for &s in shifts {
                m.set(i, (i + s) % ell, true);
            }
        }
        m
    }

    /// Parses the matrix literal text format: a `"rows cols"` header line
    /// followed by one 0/1 string per row.
    pub fn parse_literal(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix literal".into()))?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let cols: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {rows} rows, got {i}")))?;
            let line = line.trim();
            if line.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} columns, expected {cols}",
                    line.len()
                )));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
                }
            }
        }
        Ok(m)
    }

    /// Serializes to the matrix literal text format.
    pub fn to_literal(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            out.push_str(&self.row(i).to_bit_string());
            out.push('\n');
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        (self.words[i * self.words_per_row + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let idx = i * self.words_per_row + j / WORD_BITS;
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            self.words[idx] |= mask;
        } else {
            self.words[idx] &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> F2Vector {
        assert!(i < self.rows, "row {i} out of range");
        let start = i * self.words_per_row;
        F2Vector {
            len: self.cols,
            words: self.words[start..start + self.words_per_row].to_vec(),
        }
    }

    pub fn set_row(&mut self, i: usize, v: &F2Vector) {
        assert!(i < self.rows && v.len == self.cols, "row shape mismatch");
        let start = i * self.words_per_row;
        self.words[start..start + self.words_per_row].copy_from_slice(&v.words);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.words_per_row, dst * self.words_per_row);
        for w in 0..self.words_per_row {
            let x = self.words[s + w];
            self.words[d + w] ^= x;
        }
    }

    pub fn row_weight(&self, i: usize) -> usize {
        let start = i * self.words_per_row;
        self.words[start..start + self.words_per_row]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in mul: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let base = i * self.words_per_row;
            let mut acc = F2Vector::zeros(other.cols);
            for j in 0..self.cols {
                if (self.words[base + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1 {
                    acc.xor_assign(&other.row(j));
                }
            }
            out.set_row(i, &acc);
        }
        out
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(self.cols, v.len, "shape mismatch in mul_vec");
        let mut out = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            let start = i * self.words_per_row;
            let dot: u64 = self.words[start..start + self.words_per_row]
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            if dot % 2 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        out
    }

    /// Kronecker product: block (i, j) of the result is `self[i,j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    for p in 0..other.rows {
                        for q in 0..other.cols {
                            if other.get(p, q) {
                                out.set(i * other.rows + p, j * other.cols + q, true);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.set_row(i, &self.row(i).concat(&other.row(i)));
        }
        out
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut out = Self::zeros(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            out.set_row(i, &self.row(i));
        }
        for i in 0..other.rows {
            out.set_row(self.rows + i, &other.row(i));
        }
        out
    }

    /// Row echelon form with deterministic first-set-bit pivoting.
    /// Returns the reduced matrix together with the pivot column of each
    /// nonzero row.
    pub fn row_echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col));
            let Some(found) = found else { continue };
            if found != pivot_row {
                for w in 0..m.words_per_row {
                    m.words
                        .swap(found * m.words_per_row + w, pivot_row * m.words_per_row + w);
                }
            }
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// A basis of the right kernel: independent vectors `v` with `M v = 0`.
    /// Always has `cols − rank` elements.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let (ech, pivots) = self.row_echelon();
        let pivot_set: Vec<Option<usize>> = {
            let mut ps = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                ps[c] = Some(r);
            }
            ps
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = F2Vector::zeros(self.cols);
            v.set(free, true);
            for (c, p) in pivot_set.iter().enumerate() {
                if let Some(r) = p {
                    if ech.get(*r, free) {
                        v.set(c, true);
                    }
                }
            }
            basis.push(v);
        }
        basis
    }

    /// True iff `v` is a GF(2) combination of the rows of this matrix.
    pub fn in_rowspace(&self, v: &F2Vector) -> Result<bool> {
        if v.len != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} vs {} columns",
                v.len, self.cols
            )));
        }
        let (ech, pivots) = self.row_echelon();
        let mut residual = v.clone();
        for (r, &c) in pivots.iter().enumerate() {
            if residual.get(c) {
                residual.xor_assign(&ech.row(r));
            }
        }
        Ok(residual.is_zero())
    }

    /// Precomputed echelon form for repeated row-space membership tests.
    pub fn rowspace(&self) -> RowSpace {
        let (ech, pivots) = self.row_echelon();
        RowSpace { ech, pivots }
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i).to_bit_string())?;
        }
        Ok(())
    }
}

/// Echelonized row space supporting O(rank) membership tests.
pub struct RowSpace {
    ech: F2Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn contains(&self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.ech.cols, "length mismatch in rowspace test");
        let mut residual = v.clone();
        for (r, &c) in self.pivots.iter().enumerate() {
            if residual.get(c) {
                residual.xor_assign(&self.ech.row(r));
            }
        }
        residual.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}
