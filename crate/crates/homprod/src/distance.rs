//! Exact and bounded-effort minimum distance of CSS codes.
//!
//! d_Z is the minimum weight over ker(H_X) \ rowspace(H_Z) and d_X the
//! mirror. Exhaustive search walks the kernel span in Gray-code order so
//! every step is a single XOR; candidates at or above the current best
//! weight skip the row-space membership test.
//!
//! ```
//! use homprod::distance::{weight_limited_distance, DistanceValue, Side};
//! use homprod::fixtures;
//!
//! let code = fixtures::fig8();
//! let report = weight_limited_distance(&code, Side::Z, 3).unwrap();
//! assert_eq!(report.value, DistanceValue::Exact(3));
//! assert!(report.witness.is_some());
//! ```

use crate::code::CssCode;
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Z,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::X => write!(f, "X"),
            Side::Z => write!(f, "Z"),
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Side::X),
            "z" | "Z" => Ok(Side::Z),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

/// Outcome of a distance computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceValue {
    /// The exact minimum weight; a witness accompanies it.
    Exact(usize),
    /// Lower-bound certificate: no logical operator of smaller weight.
    AtLeast(usize),
    /// k = 0: the code has no logical operators.
    NoLogicalOperators,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    WeightLimited,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    pub side: Side,
    pub value: DistanceValue,
    pub method: Method,
    /// Minimum-weight logical representative, for exact values.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

const EXHAUSTIVE_KERNEL_GUARD: usize = 28;
const WEIGHT_LIMITED_BUDGET: u128 = 50_000_000;

/// The check matrix whose kernel hosts the given logical side, and the
/// stabilizer matrix quotiented out.
fn matrices(code: &CssCode, side: Side) -> (&F2Matrix, &F2Matrix) {
    match side {
        Side::Z => (code.hx(), code.hz()),
        Side::X => (code.hz(), code.hx()),
    }
}

/// Exhaustive minimum-distance search over the full kernel span.
/// Refuses when the kernel dimension exceeds 28.
pub fn exact_distance(code: &CssCode, side: Side) -> Result<DistanceReport> {
    let (checks, stabilizers) = matrices(code, side);
    if code.k() == 0 {
        return Ok(DistanceReport {
            side,
            value: DistanceValue::NoLogicalOperators,
            method: Method::Exhaustive,
            witness: None,
        });
    }
    let basis = checks.kernel_basis();
    if basis.len() > EXHAUSTIVE_KERNEL_GUARD {
        return Err(Error::Guard(format!(
            "kernel dimension {} exceeds exhaustive guard {EXHAUSTIVE_KERNEL_GUARD}",
            basis.len()
        )));
    }
    let space = stabilizers.rowspace();
    let mut current = F2Vector::zeros(code.n());
    let mut best = usize::MAX;
    let mut witness = None;
    for x in 1u64..(1u64 << basis.len()) {
        // Gray-code order: exactly one basis vector flips per step.
        current.xor_assign(&basis[x.trailing_zeros() as usize]);
        let w = current.weight();
        if w >= best {
            continue;
        }
        if !space.contains(&current) {
            best = w;
            witness = Some(current.clone());
        }
    }
    match witness {
        Some(v) => Ok(DistanceReport {
            side,
            value: DistanceValue::Exact(best),
            method: Method::Exhaustive,
            witness: Some(v.to_bit_string()),
        }),
        // k > 0 guarantees a non-trivial class exists, so this is
        // unreachable for well-formed codes.
        None => Ok(DistanceReport {
            side,
            value: DistanceValue::NoLogicalOperators,
            method: Method::Exhaustive,
            witness: None,
        }),
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Enumerates kernel vectors by support up to weight `wmax`. Returns the
/// exact distance when one is found, else the certificate `≥ wmax + 1`.
pub fn weight_limited_distance(code: &CssCode, side: Side, wmax: usize) -> Result<DistanceReport> {
    let (checks, stabilizers) = matrices(code, side);
    if code.k() == 0 {
        return Ok(DistanceReport {
            side,
            value: DistanceValue::NoLogicalOperators,
            method: Method::WeightLimited,
            witness: None,
        });
    }
    let n = code.n();
    let budget: u128 = (1..=wmax.min(n)).map(|w| binomial(n, w)).sum();
    if budget > WEIGHT_LIMITED_BUDGET {
        return Err(Error::Guard(format!(
            "support enumeration of {budget} candidates exceeds budget {WEIGHT_LIMITED_BUDGET}"
        )));
    }
    let space = stabilizers.rowspace();
    for w in 1..=wmax.min(n) {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            let v = F2Vector::from_support(n, &support);
            if checks.mul_vec(&v).is_zero() && !space.contains(&v) {
                return Ok(DistanceReport {
                    side,
                    value: DistanceValue::Exact(w),
                    method: Method::WeightLimited,
                    witness: Some(v.to_bit_string()),
                });
            }
            if !next_combination(&mut support, n) {
                break;
            }
        }
    }
    Ok(DistanceReport {
        side,
        value: DistanceValue::AtLeast(wmax + 1),
        method: Method::WeightLimited,
        witness: None,
    })
}

/// Advances `support` to the next k-combination of {0, …, n−1}.
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

/// Both sides and their minimum, when both complete exhaustively.
pub fn full_distance(code: &CssCode) -> Result<(DistanceReport, DistanceReport, Option<usize>)> {
    let x = exact_distance(code, Side::X)?;
    let z = exact_distance(code, Side::Z)?;
    let d = match (&x.value, &z.value) {
        (DistanceValue::Exact(a), DistanceValue::Exact(b)) => Some(*a.min(b)),
        _ => None,
    };
    Ok((x, z, d))
}

/// Re-checks a witness independently of the search: it must lie in the
/// kernel of the check matrix, outside the stabilizer row space, and have
/// the reported weight.
pub fn verify_witness(code: &CssCode, report: &DistanceReport) -> bool {
    let (checks, stabilizers) = matrices(code, report.side);
    let (Some(bits), DistanceValue::Exact(w)) = (&report.witness, &report.value) else {
        return report.witness.is_none();
    };
    let Ok(v) = F2Vector::from_str(bits) else {
        return false;
    };
    v.len() == code.n()
        && v.weight() == *w
        && checks.mul_vec(&v).is_zero()
        && !stabilizers.in_rowspace(&v).unwrap_or(true)
}
