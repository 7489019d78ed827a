//! Seeded, reproducible logical-error-rate estimation under i.i.d.
//! code-capacity noise.
//!
//! Per-trial randomness comes from a counter-based stream keyed by
//! (seed, trial index), so failure counts are bit-identical no matter how
//! trials are scheduled or partitioned.
//!
//! ```
//! use homprod::decode::DecoderKind;
//! use homprod::fixtures;
//! use homprod::mc::{run_trials, NoiseModel};
//!
//! let code = fixtures::toric(3);
//! let noise = NoiseModel::new(0.05, 0.05).unwrap();
//! let a = run_trials(&code, DecoderKind::Lookup, &noise, 1000, 7).unwrap();
//! let b = run_trials(&code, DecoderKind::Lookup, &noise, 1000, 7).unwrap();
//! assert_eq!(a.logical_failures, b.logical_failures);
//! assert!(a.wilson_ci95.0 <= a.rate && a.rate <= a.wilson_ci95.1);
//! ```

use crate::code::CssCode;
use crate::decode::{
    bp_decode, small_set_flip, syndrome_matrix, DecoderKind, LookupDecoder, Syndrome,
};
use crate::distance::Side;
use crate::error::{Error, Result};
use crate::f2::{F2Vector, RowSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

/// Independent X/Z bit-flip noise with perfect syndrome extraction.
#[derive(Clone, Copy, Debug)]
pub struct NoiseModel {
    pub px: f64,
    pub pz: f64,
}

impl NoiseModel {
    pub fn new(px: f64, pz: f64) -> Result<Self> {
        for p in [px, pz] {
            if !(0.0..0.5).contains(&p) {
                return Err(Error::Parameter(format!(
                    "error probability {p} outside [0, 0.5)"
                )));
            }
        }
        Ok(Self { px, pz })
    }
}

/// Aggregate of one simulation run.
#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub logical_failures: u64,
    pub rate: f64,
    /// 95% Wilson score interval for the failure rate.
    pub wilson_ci95: (f64, f64),
    pub seed: u64,
    pub decoder: String,
}

impl TrialReport {
    /// One CSV row matching the header
    /// `code,decoder,px,pz,trials,failures,rate,ci_lo,ci_hi,seed`.
    pub fn to_csv_row(&self, code_name: &str, noise: &NoiseModel) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            code_name,
            self.decoder,
            noise.px,
            noise.pz,
            self.trials,
            self.logical_failures,
            self.rate,
            self.wilson_ci95.0,
            self.wilson_ci95.1,
            self.seed
        )
    }
}

pub const CSV_HEADER: &str = "code,decoder,px,pz,trials,failures,rate,ci_lo,ci_hi,seed";

/// Wilson score interval at 95% confidence.
pub fn wilson_ci95(failures: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64;
    let n = trials as f64;
    let p = failures as f64 / n;
    let denom = 1.0 + z * z / n;
    let center = (p + z * z / (2.0 * n)) / denom;
    let half = (z / denom) * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

enum PreparedDecoder {
    Lookup { x: LookupDecoder, z: LookupDecoder },
    Bp { max_iter: usize },
    Ssf { max_iter: usize },
}

/// Runs `trials` decoding trials and reports the logical failure rate.
/// A trial fails when the residual on either side leaves the stabilizer
/// row space; the membership test is independent of decoder internals.
pub fn run_trials(
    code: &CssCode,
    decoder: DecoderKind,
    noise: &NoiseModel,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    let n = code.n();
    let prepared = match decoder {
        DecoderKind::Lookup => PreparedDecoder::Lookup {
            x: LookupDecoder::build(code, Side::X)?,
            z: LookupDecoder::build(code, Side::Z)?,
        },
        DecoderKind::Bp => PreparedDecoder::Bp { max_iter: 50 },
        DecoderKind::Ssf => {
            // Surface the generator-weight guard before the first trial.
            small_set_flip(
                code,
                Side::X,
                &Syndrome(F2Vector::zeros(code.hz().rows())),
                1,
            )?;
            PreparedDecoder::Ssf { max_iter: 100 }
        }
    };
    let x_stab: RowSpace = code.hx().rowspace();
    let z_stab: RowSpace = code.hz().rowspace();

    let mut failures = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut failed = false;
        for (side, p, stab) in [(Side::X, noise.px, &x_stab), (Side::Z, noise.pz, &z_stab)] {
            let mut error = F2Vector::zeros(n);
            for q in 0..n {
                if p > 0.0 && rng.gen_bool(p) {
                    error.set(q, true);
                }
            }
            let h = syndrome_matrix(code, side);
            let syn = Syndrome::of_error(h, &error);
            let outcome = match &prepared {
                PreparedDecoder::Lookup { x, z } => match side {
                    Side::X => x.decode(&syn),
                    Side::Z => z.decode(&syn),
                },
                PreparedDecoder::Bp { max_iter } => {
                    let prior = p.clamp(1e-4, 0.499);
                    bp_decode(h, &syn, prior, *max_iter)?
                }
                PreparedDecoder::Ssf { max_iter } => small_set_flip(code, side, &syn, *max_iter)?,
            };
            let mut residual = outcome.correction;
            residual.xor_assign(&error);
            if !stab.contains(&residual) {
                failed = true;
            }
        }
        if failed {
            failures += 1;
        }
    }
    Ok(TrialReport {
        trials,
        logical_failures: failures,
        rate: if trials == 0 {
            0.0
        } else {
            failures as f64 / trials as f64
        },
        wilson_ci95: wilson_ci95(failures, trials),
        seed,
        decoder: decoder.to_string(),
    })
}
