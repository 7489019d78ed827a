//! Matrices over the circulant algebra F2[x]/(x^ℓ − 1), the input to
//! lifted products. Each polynomial lifts to an ℓ×ℓ circulant with x
//! mapped to the cyclic right-shift permutation matrix.

use crate::error::{Error, Result};
use crate::f2::F2Matrix;

/// A polynomial modulo x^ℓ − 1, stored as ℓ coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<u8>,
}

impl Poly {
    pub fn zero(ell: usize) -> Self {
        Self {
            coeffs: vec![0; ell],
        }
    }

    pub fn one(ell: usize) -> Self {
        Self::from_exponents(ell, &[0])
    }

    /// Polynomial with terms x^e for the given exponents (mod ℓ).
    pub fn from_exponents(ell: usize, exponents: &[usize]) -> Self {
        let mut coeffs = vec![0; ell];
        for &e in exponents {
            coeffs[e % ell] ^= 1;
        }
        Self { coeffs }
    }

    pub fn ell(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn exponents(&self) -> Vec<usize> {
        (0..self.ell()).filter(|&i| self.coeffs[i] == 1).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ell(), other.ell(), "ring size mismatch");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ell(), other.ell(), "ring size mismatch");
        let ell = self.ell();
        let mut coeffs = vec![0u8; ell];
        for i in 0..ell {
            if self.coeffs[i] == 1 {
                for j in 0..ell {
                    if other.coeffs[j] == 1 {
                        coeffs[(i + j) % ell] ^= 1;
                    }
                }
            }
        }
        Self { coeffs }
    }

    /// x ↦ x^{−1}; the lift of the result is the transpose of the lift.
    pub fn reciprocal(&self) -> Self {
        let ell = self.ell();
        let mut coeffs = vec![0u8; ell];
        for i in 0..ell {
            if self.coeffs[i] == 1 {
                coeffs[(ell - i) % ell] ^= 1;
            }
        }
        Self { coeffs }
    }

    /// The ℓ×ℓ circulant matrix of this polynomial.
    pub fn lift(&self) -> F2Matrix {
        F2Matrix::circulant(self.ell(), &self.exponents())
    }
}

/// A matrix with entries in F2[x]/(x^ℓ − 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    ell: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, ell: usize) -> Self {
        assert!(ell >= 1, "circulant size must be at least 1");
        Self {
            rows,
            cols,
            ell,
            entries: vec![Poly::zero(ell); rows * cols],
        }
    }

    pub fn identity(n: usize, ell: usize) -> Self {
        let mut m = Self::zeros(n, n, ell);
        for i in 0..n {
            m.set(i, i, Poly::one(ell));
        }
        m
    }

    /// Builds from per-entry exponent lists, row-major.
    pub fn from_exponents(rows: usize, cols: usize, ell: usize, entries: &[Vec<usize>]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut m = Self::zeros(rows, cols, ell);
        for (idx, exps) in entries.iter().enumerate() {
            m.entries[idx] = Poly::from_exponents(ell, exps);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert_eq!(p.ell(), self.ell, "ring size mismatch");
        self.entries[i * self.cols + j] = p;
    }

    /// Entry transpose combined with x ↦ x^{−1} on each entry; lifts to
    /// the transpose of the lifted matrix.
    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.ell);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).reciprocal());
            }
        }
        t
    }

    /// Kronecker product over the ring.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.ell, other.ell, "ring size mismatch");
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, self.ell);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(
                            i * other.rows + p,
                            j * other.cols + q,
                            self.get(i, j).mul(other.get(p, q)),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        assert_eq!(self.ell, other.ell, "ring size mismatch");
        let mut out = Self::zeros(self.rows, self.cols + other.cols, self.ell);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Expands every entry to its ℓ×ℓ circulant block.
    pub fn lift(&self) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.rows * self.ell, self.cols * self.ell);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.get(i, j).lift();
                for p in 0..self.ell {
                    for q in 0..self.ell {
                        if block.get(p, q) {
                            out.set(i * self.ell + p, j * self.ell + q, true);
                        }
                    }
                }
            }
        }
        out
    }
}
