//! `homprod` command-line interface.
//!
//! Codes are named either `fixture:NAME` or by a path to a JSON recipe
//! file. JSON results go to stdout; diagnostics go to stderr. Exit codes:
//! 0 success, 1 validation failure, 2 schema or parse error.

use clap::{Parser, Subcommand, ValueEnum};
use homprod::code::bbs_params;
use homprod::decode::DecoderKind;
use homprod::distance::{
    exact_distance, weight_limited_distance, DistanceReport, DistanceValue, Side,
};
use homprod::error::Error;
use homprod::mc::{run_trials, NoiseModel, CSV_HEADER};
use homprod::recipe::Recipe;
use homprod::CssCode;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "homprod", version, about = "Homological product CSS codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Exhaustive,
    #[value(alias = "weight_limited")]
    WeightLimited,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    X,
    Z,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a recipe and write the code in canonical form.
    Build {
        code: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report n and k as JSON.
    Params { code: String },
    /// Report maximum check and qubit weights as JSON.
    Audit { code: String },
    /// Compute code distance and print DistanceReport JSON.
    Distance {
        code: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Exhaustive)]
        method: MethodArg,
        /// Maximum weight for the weight-limited method.
        #[arg(long)]
        wmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Export the three-layer Tanner graph as DOT.
    Tanner {
        code: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate the logical failure rate and write a CSV row.
    Simulate {
        code: String,
        #[arg(long, default_value_t = DecoderKind::Lookup)]
        decoder: DecoderKind,
        /// Physical error probability, applied to both X and Z.
        #[arg(long, default_value_t = 0.01)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        _ => 1,
    }
}

fn load_recipe(code: &str) -> Result<Recipe, Error> {
    if let Some(name) = code.strip_prefix("fixture:") {
        return Ok(Recipe::Fixture { name: name.into() });
    }
    let text = std::fs::read_to_string(code)
        .map_err(|e| Error::Parse(format!("cannot read recipe {code:?}: {e}")))?;
    Recipe::from_json(&text)
}

/// Builds and validates; every subcommand except BBS parameter reporting
/// goes through here.
fn load_code(code: &str) -> Result<CssCode, Error> {
    let built = load_recipe(code)?.build()?;
    if !built.validate() {
        return Err(Error::Invalid(
            "check matrices do not commute: H_Z · H_Xᵀ ≠ 0".into(),
        ));
    }
    Ok(built)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn distance_report(
    code: &CssCode,
    side: Side,
    method: MethodArg,
    wmax: Option<usize>,
) -> Result<DistanceReport, Error> {
    match method {
        MethodArg::Exhaustive => exact_distance(code, side),
        MethodArg::WeightLimited => {
            let wmax = wmax.ok_or_else(|| {
                Error::Parse("--wmax is required with --method weight-limited".into())
            })?;
            weight_limited_distance(code, side, wmax)
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Build { code, out } => {
            let built = load_code(&code)?;
            let canon = serde_json::to_string_pretty(&Recipe::canonical(&built))
                .expect("recipe serialization is infallible");
            emit(&canon, &out)
        }
        Cmd::Params { code } => {
            let recipe = load_recipe(&code)?;
            if recipe.is_bbs() {
                let params = bbs_params(&recipe.build_bbs()?)?;
                println!("{}", serde_json::to_string(&params).unwrap());
                return Ok(());
            }
            let built = recipe.build()?;
            if !built.validate() {
                return Err(Error::Invalid(
                    "check matrices do not commute: H_Z · H_Xᵀ ≠ 0".into(),
                ));
            }
            println!("{}", serde_json::to_string(&built.params()).unwrap());
            Ok(())
        }
        Cmd::Audit { code } => {
            let built = load_code(&code)?;
            println!("{}", serde_json::to_string(&built.ldpc_audit()).unwrap());
            Ok(())
        }
        Cmd::Distance {
            code,
            method,
            wmax,
            side,
        } => {
            let built = load_code(&code)?;
            let json = match side {
                SideArg::X => serde_json::to_string(&distance_report(&built, Side::X, method, wmax)?),
                SideArg::Z => serde_json::to_string(&distance_report(&built, Side::Z, method, wmax)?),
                SideArg::Both => {
                    let x = distance_report(&built, Side::X, method, wmax)?;
                    let z = distance_report(&built, Side::Z, method, wmax)?;
                    let d = match (&x.value, &z.value) {
                        (DistanceValue::Exact(a), DistanceValue::Exact(b)) => Some(*a.min(b)),
                        _ => None,
                    };
                    serde_json::to_string(&serde_json::json!({"x": x, "z": z, "d": d}))
                }
            }
            .unwrap();
            println!("{json}");
            Ok(())
        }
        Cmd::Tanner { code, out } => {
            let built = load_code(&code)?;
            emit(&built.tanner_graph().to_dot(), &out)
        }
        Cmd::Simulate {
            code,
            decoder,
            p,
            trials,
            seed,
            out,
        } => {
            let built = load_code(&code)?;
            let noise = NoiseModel::new(p, p)?;
            let report = run_trials(&built, decoder, &noise, trials, seed)?;
            let name = code.strip_prefix("fixture:").unwrap_or(&code);
            let csv = format!("{CSV_HEADER}\n{}", report.to_csv_row(name, &noise));
            emit(&csv, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("homprod: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
