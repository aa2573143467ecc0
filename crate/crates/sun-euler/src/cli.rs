//! Command-line surface: every library operation behind a subcommand with
//! JSON output.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage/argument error.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::density_matrix::{density, rho_coefficients, rho_diagonal, DensitySpec};
use crate::error::Error;
use crate::euler_param::{factor_sequence, unitary, ParamVector};
use crate::fixtures::reference_suite;
use crate::group_volume::{monte_carlo_volume, volume, VolumeMethod};
use crate::haar_measure::{kernel, kernel_oracle, kernel_terms};
use crate::haar_sampler::{Sampler, SamplerConfig, ThetaMode};
use crate::lie_algebra::make_generators;
use crate::param_ranges::{ranges, RangeMode};

#[derive(Parser, Debug)]
#[command(
    name = "sun-euler",
    version,
    about = "Euler angle toolkit for SU(N): generators, unitaries, invariant measure, volumes, density matrices, sampling"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Marinov,
    Quadrature,
    Mc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Quotient,
    Covering,
}

impl From<ModeArg> for RangeMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Quotient => RangeMode::Quotient,
            ModeArg::Covering => RangeMode::Covering,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum WhatArg {
    Unitary,
    Rho,
}

#[derive(Args, Debug)]
pub struct AlphaArg {
    /// Comma-separated α_1..α_{N²−1} in radians.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Vec<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the N²−1 generator matrices as JSON.
    Generators {
        #[arg(long)]
        n: usize,
    },
    /// Print the ordered factor table (generator, parameter, kind).
    Sequence {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate U(α).
    Unitary {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        alpha: AlphaArg,
    },
    /// Evaluate the invariant-measure kernel, or compare it against the
    /// one-form determinant oracle at random interior points.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<f64>>,
        #[arg(long, default_value_t = false)]
        check_oracle: bool,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Group volume by the chosen method.
    Volume {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Per-parameter integration box.
    Ranges {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Build ρ = U ρ_d U† from θ and α.
    Rho {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<f64>,
    },
    /// Draw Haar-distributed unitaries or random density matrices,
    /// one JSON object per line.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "unitary")]
        what: WhatArg,
        #[arg(long, value_enum, default_value = "covering")]
        mode: ModeArg,
    },
    /// Replay the bundled reference-value fixtures.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Outcome of one dispatched command.
#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: f64,
}

impl CommandResult {
    /// Process exit code: 0 ok, 1 verification failure, 2 usage error.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Error => {
                if self.payload.get("code").and_then(Value::as_str)
                    == Some("verification_failure")
                {
                    1
                } else {
                    2
                }
            }
        }
    }
}

fn matrix_payload(m: &crate::matrix::ComplexMatrix) -> Value {
    serde_json::to_value(m.to_parts()).expect("matrix serializes")
}

fn execute(command: &Command) -> Result<Value, Value> {
    let argument_error = |e: Error| json!({ "code": e.code(), "message": e.to_string() });
    match command {
        Command::Generators { n } => {
            let gs = make_generators(*n).map_err(argument_error)?;
            Ok(serde_json::to_value(gs.to_json()).expect("generators serialize"))
        }
        Command::Sequence { n } => {
            let seq = factor_sequence(*n).map_err(argument_error)?;
            let rows: Vec<Value> = seq
                .factors()
                .iter()
                .map(|f| {
                    let mut row = serde_json::to_value(f).expect("factor serializes");
                    row.as_object_mut()
                        .expect("factor is an object")
                        .insert("n".into(), json!(n));
                    row
                })
                .collect();
            Ok(Value::Array(rows))
        }
        Command::Unitary { n, alpha } => {
            let p = ParamVector::new(*n, alpha.alpha.clone()).map_err(argument_error)?;
            let u = unitary(*n, &p).map_err(argument_error)?;
            Ok(json!({ "n": n, "matrix": matrix_payload(&u) }))
        }
        Command::Kernel {
            n,
            alpha,
            check_oracle,
            points,
            seed,
        } => {
            if *check_oracle {
                let ranges = crate::param_ranges::quotient_ranges(*n).map_err(argument_error)?;
                let terms = kernel_terms(*n).map_err(argument_error)?;
                let plane: Vec<usize> = terms.iter().map(|t| t.param_index).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut max_rel: f64 = 0.0;
                for _ in 0..*points {
                    let alpha: Vec<f64> = (1..=n * n - 1)
                        .map(|i| {
                            if plane.contains(&i) {
                                0.1 + rng.gen::<f64>() * (std::f64::consts::FRAC_PI_2 - 0.2)
                            } else {
                                rng.gen::<f64>() * ranges.bound(i).1
                            }
                        })
                        .collect();
                    let p = ParamVector::new(*n, alpha).map_err(argument_error)?;
                    let k = kernel(*n, &p).map_err(argument_error)?;
                    let oracle = kernel_oracle(*n, &p).map_err(argument_error)?;
                    if k.abs() > 1e-12 {
                        max_rel = max_rel.max((oracle - k.abs()).abs() / k.abs());
                    }
                }
                Ok(json!({
                    "n": n,
                    "points": points,
                    "seed": seed,
                    "max_rel_deviation": max_rel,
                    "pass": max_rel <= 1e-8,
                }))
            } else {
                let alpha = alpha.clone().ok_or_else(|| {
                    argument_error(Error::InvalidArgument(
                        "kernel needs --alpha unless --check-oracle is set".into(),
                    ))
                })?;
                let p = ParamVector::new(*n, alpha).map_err(argument_error)?;
                let value = kernel(*n, &p).map_err(argument_error)?;
                Ok(json!({ "n": n, "value": value }))
            }
        }
        Command::Volume {
            n,
            method,
            samples,
            seed,
            workers,
        } => {
            let result = match method {
                MethodArg::Marinov => volume(*n, VolumeMethod::Marinov),
                MethodArg::Quadrature => volume(*n, VolumeMethod::Quadrature),
                MethodArg::Mc => monte_carlo_volume(*n, *samples, *seed, *workers),
            }
            .map_err(argument_error)?;
            Ok(serde_json::to_value(result).expect("volume serializes"))
        }
        Command::Ranges { n, mode } => {
            let set = ranges(*n, (*mode).into()).map_err(argument_error)?;
            let rows: Vec<Value> = set
                .bounds()
                .iter()
                .enumerate()
                .map(|(i, (lo, hi))| json!({ "param": i + 1, "lo": lo, "hi": hi }))
                .collect();
            Ok(Value::Array(rows))
        }
        Command::Rho { n, theta, alpha } => {
            let p = ParamVector::new(*n, alpha.clone()).map_err(argument_error)?;
            let spec = DensitySpec::new(*n, theta.clone(), p).map_err(argument_error)?;
            let rho = density(&spec).map_err(argument_error)?;
            let diag = rho_diagonal(*n, theta).map_err(argument_error)?;
            let coeffs = rho_coefficients(*n, theta).map_err(argument_error)?;
            let coeff_rows: Vec<Value> = coeffs
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let a = i + 2;
                    json!({ "a": a, "generator": a * a - 1, "value": f })
                })
                .collect();
            Ok(json!({
                "n": n,
                "matrix": matrix_payload(&rho),
                "eigenvalues": diag.eigenvalues(),
                "coefficients": coeff_rows,
            }))
        }
        Command::Sample {
            n,
            count,
            seed,
            what,
            mode,
        } => {
            let mut sampler = Sampler::new(SamplerConfig {
                n: *n,
                seed: *seed,
                mode: (*mode).into(),
            })
            .map_err(argument_error)?;
            let mut rows = Vec::with_capacity(*count);
            for index in 0..*count {
                let m = match what {
                    WhatArg::Unitary => sampler.sample_unitary(),
                    WhatArg::Rho => sampler
                        .sample_density(ThetaMode::Uniform)
                        .map_err(argument_error)?,
                };
                rows.push(json!({ "index": index, "matrix": matrix_payload(&m) }));
            }
            Ok(Value::Array(rows))
        }
        Command::Verify { suite } => {
            if suite != "paper" {
                return Err(argument_error(Error::InvalidArgument(format!(
                    "unknown suite '{suite}'; available: paper"
                ))));
            }
            let results = reference_suite();
            let failed: Vec<&crate::fixtures::CheckResult> =
                results.iter().filter(|r| !r.passed).collect();
            let payload = json!({
                "suite": suite,
                "total": results.len(),
                "passed": results.len() - failed.len(),
                "failed": failed.len(),
                "checks": serde_json::to_value(&results).expect("checks serialize"),
            });
            if failed.is_empty() {
                Ok(payload)
            } else {
                Err(json!({
                    "code": "verification_failure",
                    "message": format!("{} of {} checks failed", failed.len(), results.len()),
                    "report": payload,
                }))
            }
        }
    }
}

/// Dispatch a parsed command.
pub fn run(command: &Command) -> CommandResult {
    let start = Instant::now();
    let (status, payload) = match execute(command) {
        Ok(payload) => (Status::Ok, payload),
        Err(payload) => (Status::Error, payload),
    };
    CommandResult {
        status,
        payload,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("arguments parse")
    }

    #[test]
    fn volume_marinov_value() {
        let cli = parse(&["sun-euler", "volume", "--n", "3", "--method", "marinov"]);
        let result = run(&cli.command);
        assert_eq!(result.status, Status::Ok);
        let value = result.payload["value"].as_f64().unwrap();
        let expected = 3.0f64.sqrt() * std::f64::consts::PI.powi(5);
        assert!((value - expected).abs() < 1e-9);
        assert!((value - 530.0416).abs() < 1e-3);
        assert_eq!(result.exit_code(), 0);
    }

    #[test]
    fn unitary_zero_alpha_is_identity() {
        let cli = parse(&["sun-euler", "unitary", "--n", "2", "--alpha", "0,0,0"]);
        let result = run(&cli.command);
        assert_eq!(result.status, Status::Ok);
        let re = &result.payload["matrix"]["re"];
        assert_eq!(re[0][0], 1.0);
        assert_eq!(re[0][1], 0.0);
        assert_eq!(re[1][1], 1.0);
    }

    #[test]
    fn sequence_rows_carry_kind_tags() {
        let cli = parse(&["sun-euler", "sequence", "--n", "3"]);
        let result = run(&cli.command);
        let rows = result.payload.as_array().unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0]["generator_index"], 3);
        assert_eq!(rows[0]["kind"], "lambda3");
        assert_eq!(rows[3]["kind"], "plane");
        assert_eq!(rows[3]["level"], 3);
        assert_eq!(rows[7]["kind"], "cartan");
    }

    #[test]
    fn bad_arguments_exit_with_usage_code() {
        let cli = parse(&["sun-euler", "unitary", "--n", "3", "--alpha", "0,0,0"]);
        let result = run(&cli.command);
        assert_eq!(result.status, Status::Error);
        assert_eq!(result.exit_code(), 2);
        assert_eq!(result.payload["code"], "param_length");
    }

    #[test]
    fn verify_paper_suite_passes() {
        let cli = parse(&["sun-euler", "verify", "--suite", "paper"]);
        let result = run(&cli.command);
        assert_eq!(result.status, Status::Ok, "{}", result.payload);
        assert_eq!(result.exit_code(), 0);
        assert_eq!(result.payload["failed"], 0);
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        let cli = parse(&["sun-euler", "verify", "--suite", "nope"]);
        let result = run(&cli.command);
        assert_eq!(result.exit_code(), 2);
    }

    #[test]
    fn sample_stream_is_seed_deterministic() {
        let cli = parse(&[
            "sun-euler", "sample", "--n", "3", "--count", "4", "--seed", "9",
        ]);
        let a = serde_json::to_string(&run(&cli.command).payload).unwrap();
        let b = serde_json::to_string(&run(&cli.command).payload).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_oracle_check_reports_pass() {
        let cli = parse(&[
            "sun-euler",
            "kernel",
            "--n",
            "3",
            "--check-oracle",
            "--points",
            "5",
            "--seed",
            "3",
        ]);
        let result = run(&cli.command);
        assert_eq!(result.status, Status::Ok);
        assert_eq!(result.payload["pass"], true);
    }
}
