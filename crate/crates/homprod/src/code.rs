//! CSS codes: validity, parameters, LDPC audit, Tanner graph export, and
//! Bravyi–Bacon–Shor closed-form parameters.

use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use std::fmt::Write as _;
use std::sync::OnceLock;

/// A CSS code given by its X- and Z-check matrices.
///
/// Validity (H_Z H_Xᵀ = 0) is checked by [`CssCode::validate`], not at
/// construction, so deliberately broken inputs can be built and rejected
/// downstream. Column counts must agree.
#[derive(Debug)]
pub struct CssCode {
    hx: F2Matrix,
    hz: F2Matrix,
    k_cache: OnceLock<usize>,
}

impl Clone for CssCode {
    fn clone(&self) -> Self {
        Self {
            hx: self.hx.clone(),
            hz: self.hz.clone(),
            k_cache: self.k_cache.clone(),
        }
    }
}

impl PartialEq for CssCode {
    fn eq(&self, other: &Self) -> bool {
        self.hx == other.hx && self.hz == other.hz
    }
}
impl Eq for CssCode {}

/// Parameters of a CSS code. Distances are absent until computed.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dx: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dz: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

/// Row/column weight maxima of the check matrices.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LdpcAudit {
    /// Largest check weight (row weight) over H_X and H_Z.
    pub max_row_weight: usize,
    /// Largest per-matrix column weight.
    pub max_col_weight: usize,
    /// Largest total check participation of a single qubit (column weight
    /// of H_X plus column weight of H_Z).
    pub max_qubit_degree: usize,
}

impl CssCode {
    pub fn new(hx: F2Matrix, hz: F2Matrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::Dimension(format!(
                "H_X has {} columns but H_Z has {}",
                hx.cols(),
                hz.cols()
            )));
        }
        Ok(Self {
            hx,
            hz,
            k_cache: OnceLock::new(),
        })
    }

    pub fn hx(&self) -> &F2Matrix {
        &self.hx
    }

    pub fn hz(&self) -> &F2Matrix {
        &self.hz
    }

    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    /// Checks the commutation condition H_Z H_Xᵀ = 0.
    pub fn validate(&self) -> bool {
        self.hz.mul(&self.hx.transpose()).is_zero()
    }

    /// Number of logical qubits, n − rank(H_X) − rank(H_Z). Always computed
    /// by rank, never trusted from a construction formula.
    pub fn k(&self) -> usize {
        *self
            .k_cache
            .get_or_init(|| self.n() - self.hx.rank() - self.hz.rank())
    }

    pub fn params(&self) -> CodeParams {
        CodeParams {
            n: self.n(),
            k: self.k(),
            dx: None,
            dz: None,
            d: None,
        }
    }

    pub fn ldpc_audit(&self) -> LdpcAudit {
        let max_row_weight = (0..self.hx.rows())
            .map(|i| self.hx.row_weight(i))
            .chain((0..self.hz.rows()).map(|i| self.hz.row_weight(i)))
            .max()
            .unwrap_or(0);
        let max_col_weight = (0..self.n())
            .map(|j| self.hx.col_weight(j).max(self.hz.col_weight(j)))
            .max()
            .unwrap_or(0);
        let max_qubit_degree = (0..self.n())
            .map(|j| self.hx.col_weight(j) + self.hz.col_weight(j))
            .max()
            .unwrap_or(0);
        LdpcAudit {
            max_row_weight,
            max_col_weight,
            max_qubit_degree,
        }
    }

    pub fn tanner_graph(&self) -> TannerGraph {
        TannerGraph {
            x_checks: self.hx.rows(),
            qubits: self.n(),
            z_checks: self.hz.rows(),
            x_edges: incidences(&self.hx),
            z_edges: incidences(&self.hz),
        }
    }
}

fn incidences(h: &F2Matrix) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..h.rows() {
        for j in 0..h.cols() {
            if h.get(i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Three-layer Tanner graph of a CSS code: X-checks, qubits, Z-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    pub x_checks: usize,
    pub qubits: usize,
    pub z_checks: usize,
    /// (check, qubit) incidences of H_X.
    pub x_edges: Vec<(usize, usize)>,
    /// (check, qubit) incidences of H_Z.
    pub z_edges: Vec<(usize, usize)>,
}

impl TannerGraph {
    /// For a valid CSS code, the neighborhoods of any X-check and Z-check
    /// intersect in an even number of qubits.
    pub fn even_intersections(&self) -> bool {
        let x_neigh: Vec<Vec<usize>> = neighborhoods(self.x_checks, &self.x_edges);
        let z_neigh: Vec<Vec<usize>> = neighborhoods(self.z_checks, &self.z_edges);
        for xs in &x_neigh {
            for zs in &z_neigh {
                let shared = xs.iter().filter(|q| zs.contains(q)).count();
                if shared % 2 != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// DOT serialization with deterministic node ordering: qubits as
    /// circles `q{i}`, checks as boxes `x{i}` / `z{i}`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tanner {\n");
        for i in 0..self.x_checks {
            let _ = writeln!(out, "  x{i} [shape=box];");
        }
        for i in 0..self.qubits {
            let _ = writeln!(out, "  q{i} [shape=circle];");
        }
        for i in 0..self.z_checks {
            let _ = writeln!(out, "  z{i} [shape=box];");
        }
        for (c, q) in &self.x_edges {
            let _ = writeln!(out, "  x{c} -- q{q};");
        }
        for (c, q) in &self.z_edges {
            let _ = writeln!(out, "  z{c} -- q{q};");
        }
        out.push_str("}\n");
        out
    }
}

fn neighborhoods(checks: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut n = vec![Vec::new(); checks];
    for &(c, q) in edges {
        n[c].push(q);
    }
    n
}

/// Defining data of a Bravyi–Bacon–Shor code.
#[derive(Clone, Debug)]
pub struct BbsSpec {
    pub a: F2Matrix,
}

impl BbsSpec {
    pub fn new(a: F2Matrix) -> Self {
        Self { a }
    }

    /// Yoder's construction A = G₁ᵀ Q G₂ from two classical generator
    /// matrices and a full-rank k×k matrix Q.
    pub fn yoder(g1: &F2Matrix, q: &F2Matrix, g2: &F2Matrix) -> Result<Self> {
        let k = q.rows();
        if q.cols() != k || q.rank() != k {
            return Err(Error::Invalid("Q must be square and full rank".into()));
        }
        if g1.rows() != k || g2.rows() != k {
            return Err(Error::Dimension(format!(
                "generator matrices must have {k} rows"
            )));
        }
        Ok(Self {
            a: g1.transpose().mul(q).mul(g2),
        })
    }
}

/// Closed-form Bravyi–Bacon–Shor parameters.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BbsParams {
    /// Number of physical qubits: nonzero entries of A.
    pub n: usize,
    /// Number of logical qubits: rank of A.
    pub k: usize,
    /// Minimum Hamming weight over the row- and column-span of A,
    /// excluding zero. Absent when A = 0 (no logical qubits).
    pub d: Option<usize>,
}

const BBS_RANK_GUARD: usize = 20;

/// Parameters of the subsystem code defined by A: n counts nonzero
/// entries, k = rank(A), d = min weight over (im A ∪ im Aᵀ) \ {0}.
/// The span search enumerates 2^k combinations, so rank is guarded.
pub fn bbs_params(spec: &BbsSpec) -> Result<BbsParams> {
    let a = &spec.a;
    let n: usize = (0..a.rows()).map(|i| a.row_weight(i)).sum();
    let k = a.rank();
    if k == 0 {
        return Ok(BbsParams { n, k, d: None });
    }
    if k > BBS_RANK_GUARD {
        return Err(Error::Guard(format!(
            "rank {k} exceeds span-search guard {BBS_RANK_GUARD}"
        )));
    }
    let d_rows = min_span_weight(a);
    let d_cols = min_span_weight(&a.transpose());
    Ok(BbsParams {
        n,
        k,
        d: Some(d_rows.min(d_cols)),
    })
}

/// Minimum weight over the nonzero part of the row span, by Gray-code
/// enumeration of combinations of a row basis.
fn min_span_weight(m: &F2Matrix) -> usize {
    let (ech, pivots) = m.row_echelon();
    let basis: Vec<_> = (0..pivots.len()).map(|i| ech.row(i)).collect();
    let k = basis.len();
    let mut current = crate::f2::F2Vector::zeros(m.cols());
    let mut best = usize::MAX;
    for x in 1u64..(1 << k) {
        // Gray-code step: one basis vector changes per iteration.
        current.xor_assign(&basis[x.trailing_zeros() as usize]);
        best = best.min(current.weight());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::products::hypergraph_product;

    #[test]
    fn shor_is_valid() {
        assert!(fixtures::shor().validate());
    }

    #[test]
    fn identity_pair_is_invalid() {
        let code = CssCode::new(F2Matrix::identity(3), F2Matrix::identity(3)).unwrap();
        assert!(!code.validate());
    }

    #[test]
    fn shor_params() {
        let p = fixtures::shor().params();
        assert_eq!((p.n, p.k), (9, 1));
    }

    #[test]
    fn surface_13_params() {
        let rep = F2Matrix::from_rows(&["110", "011"]).unwrap();
        let code = hypergraph_product(&rep, &rep);
        let p = code.params();
        assert_eq!((p.n, p.k), (13, 1));
    }

    #[test]
    fn fig8_params() {
        let p = fixtures::fig8().params();
        assert_eq!((p.n, p.k), (12, 2));
    }

    #[test]
    fn ldpc_audit_toric() {
        let code = fixtures::toric(3);
        let audit = code.ldpc_audit();
        assert_eq!(audit.max_row_weight, 4);
        assert_eq!(audit.max_col_weight, 2);
        assert_eq!(audit.max_qubit_degree, 4);
    }

    #[test]
    fn ldpc_audit_shor() {
        let audit = fixtures::shor().ldpc_audit();
        assert_eq!(audit.max_row_weight, 6);
    }

    #[test]
    fn ldpc_audit_empty() {
        let code = CssCode::new(F2Matrix::zeros(0, 1), F2Matrix::zeros(0, 1)).unwrap();
        let audit = code.ldpc_audit();
        assert_eq!(audit.max_row_weight, 0);
        assert_eq!(audit.max_col_weight, 0);
    }

    #[test]
    fn tanner_shor_counts() {
        let g = fixtures::shor().tanner_graph();
        assert_eq!((g.x_checks, g.qubits, g.z_checks), (3, 9, 7));
        assert_eq!(g.x_edges.len(), 18);
        assert!(g.even_intersections());
    }

    #[test]
    fn tanner_single_isolated_qubit() {
        let code = CssCode::new(F2Matrix::zeros(0, 1), F2Matrix::zeros(0, 1)).unwrap();
        let g = code.tanner_graph();
        assert_eq!((g.x_checks, g.qubits, g.z_checks), (0, 1, 0));
        assert!(g.x_edges.is_empty() && g.z_edges.is_empty());
    }

    #[test]
    fn tanner_surface_counts() {
        let rep = F2Matrix::from_rows(&["110", "011"]).unwrap();
        let g = hypergraph_product(&rep, &rep).tanner_graph();
        assert_eq!((g.x_checks, g.qubits, g.z_checks), (6, 13, 6));
    }

    #[test]
    fn even_intersection_fails_for_invalid_code() {
        let code = CssCode::new(F2Matrix::identity(2), F2Matrix::identity(2)).unwrap();
        assert!(!code.tanner_graph().even_intersections());
    }

    #[test]
    fn bbs_identity() {
        let p = bbs_params(&BbsSpec::new(F2Matrix::identity(2))).unwrap();
        assert_eq!(p, BbsParams { n: 2, k: 2, d: Some(1) });
    }

    #[test]
    fn bbs_all_ones() {
        let a = F2Matrix::from_rows(&["11", "11"]).unwrap();
        let p = bbs_params(&BbsSpec::new(a)).unwrap();
        assert_eq!(p, BbsParams { n: 4, k: 1, d: Some(2) });
    }

    #[test]
    fn bbs_zero_matrix() {
        let p = bbs_params(&BbsSpec::new(F2Matrix::zeros(3, 3))).unwrap();
        assert_eq!(p, BbsParams { n: 0, k: 0, d: None });
    }

    #[test]
    fn bbs_yoder_hamming() {
        // Generator of the [7,4,3] Hamming code.
        let g = F2Matrix::from_rows(&["1000110", "0100101", "0010011", "0001111"]).unwrap();
        let spec = BbsSpec::yoder(&g, &F2Matrix::identity(4), &g).unwrap();
        let p = bbs_params(&spec).unwrap();
        assert_eq!(p.k, 4);
        assert_eq!(p.d, Some(3));
        assert!(p.n >= 21 && p.n <= 49, "n = {}", p.n);
    }
}
