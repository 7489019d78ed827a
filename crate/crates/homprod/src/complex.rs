//! Chain complexes over GF(2) and the dictionary between complexes and
//! classical/CSS codes.
//!
//! A complex of length n+1 is a sequence C_n → ⋯ → C_1 → C_0 of GF(2)
//! linear maps composing to zero. Differentials beyond the ends are
//! implicit zero maps, so homology is defined at every degree in [0, n].
//!
//! ```
//! use homprod::complex::ChainComplex;
//! use homprod::f2::F2Matrix;
//!
//! // The 3-cycle graph: edges → vertices.
//! let boundary = F2Matrix::circulant(3, &[0, 1]);
//! let c = ChainComplex::from_classical(&boundary);
//! assert!(c.validate());
//! assert_eq!(c.homology_dim(0).unwrap(), 1);  // connected components
//! assert_eq!(c.homology_dim(1).unwrap(), 1);  // independent cycles
//! ```

use crate::code::CssCode;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;

/// A graded sequence of differentials with ∂∂ = 0.
///
/// Internally indexed by degree: `dims[i]` is dim C_i and `diff(i)` is the
/// matrix of ∂_i : C_i → C_{i−1} (shape dim C_{i−1} × dim C_i).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// diffs[i] is ∂_{i+1}, mapping C_{i+1} → C_i.
    diffs: Vec<F2Matrix>,
}

/// Diagnostic from a failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    /// ∂_i has the wrong shape.
    Shape { degree: usize },
    /// ∂_i · ∂_{i+1} ≠ 0.
    CompositionNonzero { degree: usize },
}

impl ChainComplex {
    /// Builds a complex from space dimensions (by degree, C_0 first) and
    /// differentials (`diffs[i]` maps C_{i+1} → C_i). Shapes are checked
    /// eagerly; ∂∂ = 0 is checked by [`ChainComplex::validate`].
    pub fn new(dims: Vec<usize>, diffs: Vec<F2Matrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        let c = Self { dims, diffs };
        if let Some(v) = c.first_violation() {
            if let ComplexViolation::Shape { degree } = v {
                return Err(Error::Dimension(format!(
                    "differential at degree {degree} has inconsistent shape"
                )));
            }
        }
        Ok(c)
    }

    /// The length-2 complex of a classical code: C_1 = bits, C_0 = checks,
    /// ∂_1 = H.
    pub fn from_classical(h: &F2Matrix) -> Self {
        Self {
            dims: vec![h.rows(), h.cols()],
            diffs: vec![h.clone()],
        }
    }

    /// Length-3 complex of a CSS code: C_2 = Z-checks, C_1 = qubits,
    /// C_0 = X-checks, ∂_2 = H_Zᵀ, ∂_1 = H_X.
    pub fn from_css(code: &CssCode) -> Self {
        Self {
            dims: vec![code.hx().rows(), code.n(), code.hz().rows()],
            diffs: vec![code.hx().clone(), code.hz().transpose()],
        }
    }

    /// Highest degree (the complex has `top_degree() + 1` spaces).
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.dims[degree]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The matrix of ∂_degree : C_degree → C_{degree−1}. Out-of-range
    /// degrees (0 and top+1) give the appropriate zero map.
    pub fn diff(&self, degree: usize) -> F2Matrix {
        if degree == 0 {
            F2Matrix::zeros(0, self.dims[0])
        } else if degree > self.top_degree() {
            F2Matrix::zeros(*self.dims.last().unwrap(), 0)
        } else {
            self.diffs[degree - 1].clone()
        }
    }

    fn first_violation(&self) -> Option<ComplexViolation> {
        for (i, d) in self.diffs.iter().enumerate() {
            // d = ∂_{i+1} : C_{i+1} → C_i
            if d.rows() != self.dims[i] || d.cols() != self.dims[i + 1] {
                return Some(ComplexViolation::Shape { degree: i + 1 });
            }
        }
        for i in 0..self.diffs.len().saturating_sub(1) {
            // ∂_{i+1} · ∂_{i+2} must vanish.
            if !self.diffs[i].mul(&self.diffs[i + 1]).is_zero() {
                return Some(ComplexViolation::CompositionNonzero { degree: i + 1 });
            }
        }
        None
    }

    /// True iff all shapes chain and every composition of consecutive
    /// differentials vanishes.
    pub fn validate(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Like [`ChainComplex::validate`] but reports the first violation.
    pub fn validate_detailed(&self) -> std::result::Result<(), ComplexViolation> {
        match self.first_violation() {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }

    /// dim H_i = dim ker ∂_i − rank ∂_{i+1}.
    pub fn homology_dim(&self, degree: usize) -> Result<usize> {
        if degree > self.top_degree() {
            return Err(Error::IndexRange(format!(
                "degree {degree} exceeds top degree {}",
                self.top_degree()
            )));
        }
        let ker = self.dims[degree] - self.diff(degree).rank();
        let im = self.diff(degree + 1).rank();
        Ok(ker - im)
    }

    /// The reversed complex with transposed differentials (cochain complex
    /// read as a chain complex). Degree i maps to `top − i`.
    pub fn reversed(&self) -> Self {
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let diffs: Vec<F2Matrix> = self.diffs.iter().rev().map(F2Matrix::transpose).collect();
        Self { dims, diffs }
    }

    /// Extracts the CSS code with qubits at the given degree:
    /// H_X = ∂_degree, H_Z = ∂_{degree+1}ᵀ. Needs a complex of length ≥ 3
    /// around the degree.
    pub fn to_css(&self, degree: usize) -> Result<CssCode> {
        if degree == 0 || degree >= self.top_degree() {
            return Err(Error::IndexRange(format!(
                "qubit degree {degree} needs 1 ≤ degree ≤ {}",
                self.top_degree().saturating_sub(1)
            )));
        }
        CssCode::new(self.diff(degree), self.diff(degree + 1).transpose())
    }

    /// Euler characteristic Σ (−1)^i dim C_i, as a signed count.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Serializes as a `degrees n` header followed by the differentials
    /// ∂_n … ∂_1 as matrix literals, top to bottom.
    pub fn to_text(&self) -> String {
        let mut out = format!("degrees {}\n", self.dims.len());
        for d in self.diffs.iter().rev() {
            out.push_str(&d.to_literal());
        }
        // A length-1 complex has no differentials; record the lone dimension.
        if self.diffs.is_empty() {
            out.push_str(&format!("dim {}\n", self.dims[0]));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty complex serialization".into()))?;
        let n: usize = header
            .strip_prefix("degrees ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad complex header {header:?}")))?;
        if n == 0 {
            return Err(Error::Parse("complex needs at least one space".into()));
        }
        if n == 1 {
            let dim_line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing dim line".into()))?;
            let d: usize = dim_line
                .strip_prefix("dim ")
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad dim line {dim_line:?}")))?;
            return Self::new(vec![d], vec![]);
        }
        let mut diffs_top_down = Vec::new();
        for _ in 0..n - 1 {
            let header = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix header".into()))?;
            let mut parts = header.split_whitespace();
            let rows: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad matrix header {header:?}")))?;
            let _cols: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad matrix header {header:?}")))?;
            let mut text = header.to_string();
            text.push('\n');
            for _ in 0..rows {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse("truncated matrix block".into()))?;
                text.push_str(line);
                text.push('\n');
            }
            diffs_top_down.push(F2Matrix::parse_literal(&text)?);
        }
        let diffs: Vec<F2Matrix> = diffs_top_down.into_iter().rev().collect();
        let mut dims = vec![diffs[0].rows()];
        for d in &diffs {
            dims.push(d.cols());
        }
        Self::new(dims, diffs)
    }
}
