//! Syndrome decoders: exhaustive minimum-weight lookup, sum-product
//! belief propagation, and the greedy small-set-flip decoder.
//!
//! Decoding is per side: an X-type error is corrected from the H_Z
//! syndrome and vice versa. Success up to stabilizer means the residual
//! error lies in the row space of the same-type check matrix.
//!
//! ```
//! use homprod::decode::{syndrome_matrix, LookupDecoder, Syndrome};
//! use homprod::distance::Side;
//! use homprod::f2::F2Vector;
//! use homprod::fixtures;
//!
//! let code = fixtures::surface(3);
//! let lookup = LookupDecoder::build(&code, Side::Z).unwrap();
//! let error = F2Vector::from_support(code.n(), &[4]);
//! let h = syndrome_matrix(&code, Side::Z);
//! let out = lookup.decode(&Syndrome::of_error(h, &error));
//! assert!(out.converged);
//! assert_eq!(out.correction, error);   // weight-1 errors are coset leaders
//! ```

use crate::code::CssCode;
use crate::distance::Side;
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector};
use std::collections::HashMap;

/// A measured syndrome, one bit per check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome(pub F2Vector);

impl Syndrome {
    pub fn of_error(h: &F2Matrix, error: &F2Vector) -> Self {
        Syndrome(h.mul_vec(error))
    }
}

/// Result of one decoding call. When `converged`, the residual syndrome
/// is zero and the correction reproduces the input syndrome.
#[derive(Clone, Debug)]
pub struct DecodeOutcome {
    pub correction: F2Vector,
    pub converged: bool,
    pub iterations: usize,
    pub residual: Syndrome,
}

/// Check matrix producing the syndrome of an error of the given type.
pub fn syndrome_matrix(code: &CssCode, side: Side) -> &F2Matrix {
    match side {
        Side::X => code.hz(),
        Side::Z => code.hx(),
    }
}

/// Stabilizer rows of the same type as the error; flipping by them does
/// not change the logical class.
pub fn stabilizer_matrix(code: &CssCode, side: Side) -> &F2Matrix {
    match side {
        Side::X => code.hx(),
        Side::Z => code.hz(),
    }
}

const LOOKUP_QUBIT_GUARD: usize = 25;

/// Precomputed coset-leader table: syndrome → minimum-weight error.
pub struct LookupDecoder {
    h: F2Matrix,
    table: HashMap<Vec<u64>, F2Vector>,
}

impl LookupDecoder {
    /// Builds the table for one side of a code by enumerating errors in
    /// order of increasing weight until every attainable syndrome has a
    /// leader. Guarded to n ≤ 25.
    pub fn build(code: &CssCode, side: Side) -> Result<Self> {
        let h = syndrome_matrix(code, side).clone();
        let n = code.n();
        if n > LOOKUP_QUBIT_GUARD {
            return Err(Error::Guard(format!(
                "lookup table for n = {n} exceeds guard {LOOKUP_QUBIT_GUARD}"
            )));
        }
        let total = 1usize << h.rank();
        let mut table = HashMap::with_capacity(total);
        table.insert(
            Syndrome::of_error(&h, &F2Vector::zeros(n)).0.words().to_vec(),
            F2Vector::zeros(n),
        );
        'weights: for w in 1..=n {
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                let e = F2Vector::from_support(n, &support);
                let key = h.mul_vec(&e).words().to_vec();
                table.entry(key).or_insert_with(|| e.clone());
                if table.len() == total {
                    break 'weights;
                }
                if !next_combination(&mut support, n) {
                    break;
                }
            }
        }
        Ok(Self { h, table })
    }

    pub fn decode(&self, syn: &Syndrome) -> DecodeOutcome {
        match self.table.get(&syn.0.words().to_vec()) {
            Some(e) => {
                let mut residual = self.h.mul_vec(e);
                residual.xor_assign(&syn.0);
                DecodeOutcome {
                    correction: e.clone(),
                    converged: true,
                    iterations: 0,
                    residual: Syndrome(residual),
                }
            }
            // Syndrome outside the image of H: no consistent error exists.
            None => DecodeOutcome {
                correction: F2Vector::zeros(self.h.cols()),
                converged: false,
                iterations: 0,
                residual: syn.clone(),
            },
        }
    }
}

/// One-shot lookup decode; builds the table each call. Use
/// [`LookupDecoder`] directly when decoding many syndromes.
pub fn lookup_decode(code: &CssCode, side: Side, syn: &Syndrome) -> Result<DecodeOutcome> {
    Ok(LookupDecoder::build(code, side)?.decode(syn))
}

fn next_combination(support: &mut [usize], n: usize) -> bool {
    let k = support.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if support[i] < n - (k - i) {
            support[i] += 1;
            for j in i + 1..k {
                support[j] = support[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

const LLR_CLAMP: f64 = 30.0;

/// Sum-product belief propagation with a serial (layered) schedule in the
/// log-likelihood domain: checks are processed in row order and each
/// check sees variable messages already updated by earlier checks in the
/// same sweep. The channel prior is log((1−p)/p); messages are clamped to
/// ±30. Stops as soon as the hard decision reproduces the syndrome.
pub fn bp_decode(h: &F2Matrix, syn: &Syndrome, p: f64, max_iter: usize) -> Result<DecodeOutcome> {
    if !(p > 0.0 && p < 0.5) {
        return Err(Error::Parameter(format!(
            "channel probability {p} outside (0, 0.5)"
        )));
    }
    if syn.0.len() != h.rows() {
        return Err(Error::Dimension(format!(
            "syndrome length {} vs {} checks",
            syn.0.len(),
            h.rows()
        )));
    }
    let n = h.cols();
    let prior = ((1.0 - p) / p).ln();
    let check_neighbors: Vec<Vec<usize>> = (0..h.rows())
        .map(|c| (0..n).filter(|&v| h.get(c, v)).collect())
        .collect();
    let var_neighbors: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..h.rows()).filter(|&c| h.get(c, v)).collect())
        .collect();

    // Check-to-variable messages for incident pairs; variable-to-check
    // messages are recomputed from these on demand.
    let mut check_to_var: HashMap<(usize, usize), f64> = HashMap::new();
    for (c, vs) in check_neighbors.iter().enumerate() {
        for &v in vs {
            check_to_var.insert((c, v), 0.0);
        }
    }

    let mut hard = F2Vector::zeros(n);
    if Syndrome::of_error(h, &hard).0 == syn.0 {
        return Ok(DecodeOutcome {
            correction: hard,
            converged: true,
            iterations: 0,
            residual: Syndrome(F2Vector::zeros(h.rows())),
        });
    }

    for iter in 1..=max_iter {
        for (c, vs) in check_neighbors.iter().enumerate() {
            let sign = if syn.0.get(c) { -1.0 } else { 1.0 };
            // Variable-to-check messages as of this point in the sweep.
            let incoming: Vec<f64> = vs
                .iter()
                .map(|&u| {
                    let q: f64 = prior
                        + var_neighbors[u]
                            .iter()
                            .filter(|&&c2| c2 != c)
                            .map(|&c2| check_to_var[&(c2, u)])
                            .sum::<f64>();
                    q.clamp(-LLR_CLAMP, LLR_CLAMP)
                })
                .collect();
            for (slot, &v) in vs.iter().enumerate() {
                let prod: f64 = incoming
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != slot)
                    .map(|(_, &q)| (q / 2.0).tanh())
                    .product();
                let msg = sign * 2.0 * prod.atanh();
                check_to_var.insert((c, v), msg.clamp(-LLR_CLAMP, LLR_CLAMP));
            }
        }
        for (v, cs) in var_neighbors.iter().enumerate() {
            let total: f64 = prior + cs.iter().map(|&c| check_to_var[&(c, v)]).sum::<f64>();
            hard.set(v, total < 0.0);
        }
        let mut residual = h.mul_vec(&hard);
        residual.xor_assign(&syn.0);
        if residual.is_zero() {
            return Ok(DecodeOutcome {
                correction: hard,
                converged: true,
                iterations: iter,
                residual: Syndrome(residual),
            });
        }
    }
    let mut residual = h.mul_vec(&hard);
    residual.xor_assign(&syn.0);
    Ok(DecodeOutcome {
        correction: hard,
        converged: false,
        iterations: max_iter,
        residual: Syndrome(residual),
    })
}

const SSF_GENERATOR_GUARD: usize = 16;

/// Greedy small-set-flip: repeatedly flips the subset of a single
/// stabilizer generator's support that most reduces the syndrome weight,
/// requiring a strictly positive reduction. Ties go to the lowest
/// generator index, then the lexicographically smallest subset.
pub fn small_set_flip(
    code: &CssCode,
    side: Side,
    syn: &Syndrome,
    max_iter: usize,
) -> Result<DecodeOutcome> {
    let h = syndrome_matrix(code, side);
    let generators = stabilizer_matrix(code, side);
    if syn.0.len() != h.rows() {
        return Err(Error::Dimension(format!(
            "syndrome length {} vs {} checks",
            syn.0.len(),
            h.rows()
        )));
    }
    for g in 0..generators.rows() {
        let w = generators.row_weight(g);
        if w > SSF_GENERATOR_GUARD {
            return Err(Error::Guard(format!(
                "generator {g} has weight {w}, above the subset-scan guard {SSF_GENERATOR_GUARD}"
            )));
        }
    }
    let supports: Vec<Vec<usize>> = (0..generators.rows())
        .map(|g| generators.row(g).support())
        .collect();
    // Syndrome of each single-qubit flip.
    let columns: Vec<F2Vector> = (0..code.n())
        .map(|q| {
            let mut e = F2Vector::zeros(code.n());
            e.set(q, true);
            h.mul_vec(&e)
        })
        .collect();

    let mut correction = F2Vector::zeros(code.n());
    let mut current = syn.0.clone();
    let mut iterations = 0;
    while iterations < max_iter && !current.is_zero() {
        let weight = current.weight();
        let mut best: Option<(usize, Vec<usize>, F2Vector)> = None;
        let mut best_reduction = 0usize;
        for (g, support) in supports.iter().enumerate() {
            for mask in 1u32..(1 << support.len()) {
                let subset: Vec<usize> = support
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &q)| q)
                    .collect();
                let mut flipped = current.clone();
                for &q in &subset {
                    flipped.xor_assign(&columns[q]);
                }
                let new_weight = flipped.weight();
                if new_weight >= weight {
                    continue;
                }
                let reduction = weight - new_weight;
                let better = match &best {
                    None => true,
                    Some((bg, bsubset, _)) => {
                        reduction > best_reduction
                            || (reduction == best_reduction
                                && (g < *bg || (g == *bg && subset < *bsubset)))
                    }
                };
                if better {
                    best_reduction = reduction;
                    best = Some((g, subset, flipped));
                }
            }
        }
        match best {
            Some((_, subset, flipped)) => {
                for &q in &subset {
                    correction.flip(q);
                }
                current = flipped;
                iterations += 1;
            }
            None => break,
        }
    }
    Ok(DecodeOutcome {
        converged: current.is_zero(),
        correction,
        iterations,
        residual: Syndrome(current),
    })
}

/// Decoder selectable by name, for the simulator and CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderKind {
    Lookup,
    Bp,
    Ssf,
}

impl std::str::FromStr for DecoderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lookup" => Ok(DecoderKind::Lookup),
            "bp" => Ok(DecoderKind::Bp),
            "ssf" => Ok(DecoderKind::Ssf),
            _ => Err(Error::Parse(format!("unknown decoder {s:?}"))),
        }
    }
}

impl std::fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecoderKind::Lookup => write!(f, "lookup"),
            DecoderKind::Bp => write!(f, "bp"),
            DecoderKind::Ssf => write!(f, "ssf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn single_qubit_error(n: usize, q: usize) -> F2Vector {
        F2Vector::from_support(n, &[q])
    }

    #[test]
    fn lookup_zero_syndrome() {
        let code = fixtures::surface(3);
        let out = lookup_decode(&code, Side::X, &Syndrome(F2Vector::zeros(6))).unwrap();
        assert!(out.converged);
        assert!(out.correction.is_zero());
    }

    #[test]
    fn lookup_recovers_all_single_errors_on_surface_13() {
        let code = fixtures::surface(3);
        for side in [Side::X, Side::Z] {
            let h = syndrome_matrix(&code, side);
            let stab = stabilizer_matrix(&code, side).rowspace();
            let dec = LookupDecoder::build(&code, side).unwrap();
            for q in 0..code.n() {
                let e = single_qubit_error(code.n(), q);
                let out = dec.decode(&Syndrome::of_error(h, &e));
                assert!(out.converged);
                let mut residual = out.correction.clone();
                residual.xor_assign(&e);
                assert!(stab.contains(&residual), "qubit {q} side {side}");
            }
        }
    }

    #[test]
    fn lookup_some_weight_two_errors_fail_on_surface_13() {
        // Distance 3 forces at least one weight-2 error into a logical
        // after correction.
        let code = fixtures::surface(3);
        let side = Side::Z;
        let h = syndrome_matrix(&code, side);
        let stab = stabilizer_matrix(&code, side).rowspace();
        let dec = LookupDecoder::build(&code, side).unwrap();
        let mut failures = 0;
        for a in 0..code.n() {
            for b in a + 1..code.n() {
                let e = F2Vector::from_support(code.n(), &[a, b]);
                let out = dec.decode(&Syndrome::of_error(h, &e));
                let mut residual = out.correction.clone();
                residual.xor_assign(&e);
                if !stab.contains(&residual) {
                    failures += 1;
                }
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn lookup_corrections_are_minimum_weight() {
        // Exhaustive optimality check on a small code.
        let code = fixtures::shor();
        let side = Side::Z;
        let h = syndrome_matrix(&code, side);
        let dec = LookupDecoder::build(&code, side).unwrap();
        for bits in 0u32..(1 << code.n()) {
            let e = F2Vector::from_bits(
                &(0..code.n()).map(|i| (bits >> i & 1) as u8).collect::<Vec<_>>(),
            );
            let out = dec.decode(&Syndrome::of_error(h, &e));
            assert!(out.converged);
            assert!(out.correction.weight() <= e.weight());
        }
    }

    #[test]
    fn lookup_guard_rejects_large_codes() {
        let code = fixtures::toric(4); // n = 32
        assert!(matches!(
            LookupDecoder::build(&code, Side::X),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn bp_zero_syndrome_converges_immediately() {
        let h = F2Matrix::from_rows(&["1110100", "1101010", "1011001"]).unwrap();
        let out = bp_decode(&h, &Syndrome(F2Vector::zeros(3)), 0.05, 30).unwrap();
        assert!(out.converged);
        assert_eq!(out.iterations, 0);
        assert!(out.correction.is_zero());
    }

    #[test]
    fn bp_corrects_single_errors_on_hamming() {
        let h = F2Matrix::from_rows(&["1110100", "1101010", "1011001"]).unwrap();
        for q in 0..7 {
            let e = single_qubit_error(7, q);
            let out = bp_decode(&h, &Syndrome::of_error(&h, &e), 0.05, 30).unwrap();
            assert!(out.converged, "qubit {q}");
            assert_eq!(out.correction, e, "qubit {q}");
        }
    }

    #[test]
    fn bp_rejects_bad_probability() {
        let h = F2Matrix::identity(2);
        for p in [0.0, 0.5, 0.7, -0.1] {
            assert!(bp_decode(&h, &Syndrome(F2Vector::zeros(2)), p, 10).is_err());
        }
    }

    #[test]
    fn bp_deterministic_and_syndrome_consistent() {
        let h = F2Matrix::from_rows(&["1110100", "1101010", "1011001"]).unwrap();
        for bits in 1u32..1 << 7 {
            let e = {
                let bytes: Vec<u8> = (0..7).map(|i| ((bits >> i) & 1) as u8).collect();
                F2Vector::from_bits(&bytes)
            };
            let syn = Syndrome::of_error(&h, &e);
            let a = bp_decode(&h, &syn, 0.05, 30).unwrap();
            let b = bp_decode(&h, &syn, 0.05, 30).unwrap();
            assert_eq!(a.correction, b.correction);
            assert_eq!(a.converged, b.converged);
            if a.converged {
                assert_eq!(h.mul_vec(&a.correction), syn.0);
                assert!(a.residual.0.is_zero());
            }
        }
    }

    #[test]
    fn bp_toric_single_error_convergence_table() {
        // Regression table: convergence and logical-success counts over
        // all single-qubit Z errors on the L=3 toric code, frozen from an
        // observed run. BP on loopy graphs has no closed-form guarantee,
        // so these are regression values, not derived targets.
        let code = fixtures::toric(3);
        let h = syndrome_matrix(&code, Side::Z);
        let stab = stabilizer_matrix(&code, Side::Z).rowspace();
        let mut converged = 0;
        let mut corrected = 0;
        for q in 0..code.n() {
            let e = single_qubit_error(code.n(), q);
            let out = bp_decode(h, &Syndrome::of_error(h, &e), 0.05, 30).unwrap();
            if out.converged {
                converged += 1;
            }
            let mut residual = out.correction;
            residual.xor_assign(&e);
            if stab.contains(&residual) {
                corrected += 1;
            }
        }
        assert_eq!(
            (converged, corrected),
            (FROZEN_TORIC_BP_CONVERGED, FROZEN_TORIC_BP_CORRECTED)
        );
    }

    // Counts over the 18 single-qubit Z errors on the L=3 toric code:
    // serial-schedule sum-product BP at p = 0.05, 30 iterations.
    const FROZEN_TORIC_BP_CONVERGED: usize = 18;
    const FROZEN_TORIC_BP_CORRECTED: usize = 18;

    #[test]
    fn ssf_zero_syndrome() {
        let code = fixtures::toric(3);
        let out = small_set_flip(&code, Side::X, &Syndrome(F2Vector::zeros(9)), 50).unwrap();
        assert!(out.converged);
        assert!(out.correction.is_zero());
    }

    #[test]
    fn ssf_clears_all_single_errors_on_toric_3() {
        let code = fixtures::toric(3);
        for side in [Side::X, Side::Z] {
            let h = syndrome_matrix(&code, side);
            let stab = stabilizer_matrix(&code, side).rowspace();
            for q in 0..code.n() {
                let e = single_qubit_error(code.n(), q);
                let out = small_set_flip(&code, side, &Syndrome::of_error(h, &e), 50).unwrap();
                assert!(out.converged, "qubit {q} side {side}");
                let mut residual = out.correction.clone();
                residual.xor_assign(&e);
                assert!(stab.contains(&residual), "qubit {q} side {side}");
            }
        }
    }

    #[test]
    fn ssf_syndrome_weight_strictly_decreases() {
        let code = fixtures::toric(3);
        let h = syndrome_matrix(&code, Side::X);
        let e = F2Vector::from_support(code.n(), &[0, 4, 11]);
        let syn = Syndrome::of_error(h, &e);
        let out = small_set_flip(&code, Side::X, &syn, 50).unwrap();
        // Each accepted flip reduces weight by at least one, so the
        // iteration count is bounded by the initial syndrome weight.
        assert!(out.iterations <= syn.0.weight());
        if out.converged {
            assert!(out.residual.0.is_zero());
        }
    }

    #[test]
    fn ssf_guard_rejects_heavy_generators() {
        let mut hx = F2Matrix::zeros(1, 20);
        for j in 0..20 {
            hx.set(0, j, true);
        }
        let code = crate::code::CssCode::new(hx, F2Matrix::zeros(0, 20)).unwrap();
        assert!(matches!(
            small_set_flip(&code, Side::X, &Syndrome(F2Vector::zeros(0)), 10),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn ssf_stall_returns_residual() {
        // A single-1 syndrome on the torus is outside the image of the
        // rank-8 check matrix (checks sum to zero), so no correction can
        // clear it: the decoder must stall finitely, not loop.
        let code = fixtures::toric(3);
        let h = syndrome_matrix(&code, Side::X);
        assert!(h.rank() < h.rows());
        let mut syn = F2Vector::zeros(h.rows());
        syn.set(0, true);
        let out = small_set_flip(&code, Side::X, &Syndrome(syn), 50).unwrap();
        assert!(!out.converged);
        assert!(!out.residual.0.is_zero());
        assert!(out.iterations < 50);
    }

    #[test]
    fn converged_corrections_reproduce_syndrome() {
        let code = fixtures::toric(3);
        for side in [Side::X, Side::Z] {
            let h = syndrome_matrix(&code, side);
            for q in 0..code.n() {
                let e = single_qubit_error(code.n(), q);
                let syn = Syndrome::of_error(h, &e);
                let out = small_set_flip(&code, side, &syn, 50).unwrap();
                if out.converged {
                    assert_eq!(h.mul_vec(&out.correction), syn.0);
                }
            }
        }
    }
}
