use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::output::Failure;

#[derive(Debug, Parser)]
#[command(name = "oddzeta", version, about = "Linear forms in odd zeta values over inverse-totient zero sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Ψ_B, the zero set size, the period P and the factored A₁, A₂.
    Sets,
    /// The partial-fraction table a_{i,k}.
    Aux,
    /// The exact linear forms, their integrality and the series identity.
    Forms,
    /// The saddle point x₀ and log g(x₀).
    Saddle,
    /// r₀, c₀ and ζ(2)ζ(3)/ζ(6).
    Constants,
    /// Numerical probes; `--sweep` lists the swept values.
    Probe {
        #[arg(value_enum)]
        kind: ProbeKind,
    },
    /// Tests g(x₀) < e^{-(s+1)} and reports the resulting count.
    Certify,
    /// Runs the acceptance suite.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeKind {
    /// |Ψ_B|/B against ζ(2)ζ(3)/ζ(6); sweeps B.
    Density,
    /// g(x₀)^{1/(s+1)} at B = c·√(s/log s); sweeps s.
    Scaled,
    /// log r_{n,1}/n against log g(x₀); sweeps the multiplier of P.
    Convergence,
    /// Random elimination weights; sweeps nothing, `--seed` picks them.
    Weights,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RunConfig {
    /// r as "num/den".
    #[arg(long, global = true, default_value = "2")]
    pub r: String,
    /// Odd s >= 3.
    #[arg(long, global = true, default_value_t = 7)]
    pub s: u64,
    /// The totient bound B, a rational.
    #[arg(long = "B", global = true, default_value = "1")]
    #[serde(rename = "B")]
    pub bound: String,
    /// n = multiplier · P.
    #[arg(long, global = true, default_value_t = 1)]
    pub n_mult: u64,
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 60)]
    pub digits: usize,
    /// Terms summed in direct series checks.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub trunc: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated values for probes.
    #[arg(long, global = true)]
    pub sweep: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl RunConfig {
    pub fn r(&self) -> Result<BigRational, Failure> {
        parse_rational("r", &self.r)
    }

    pub fn bound(&self) -> Result<BigRational, Failure> {
        parse_rational("B", &self.bound)
    }

    pub fn s_u32(&self) -> Result<u32, Failure> {
        u32::try_from(self.s).map_err(|_| Failure::config(format!("s = {} is too large here", self.s)))
    }

    pub fn sweep<T: FromStr + Clone>(&self, default: &[T]) -> Result<Vec<T>, Failure> {
        match &self.sweep {
            None => Ok(default.to_vec()),
            Some(list) => list
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse()
                        .map_err(|_| Failure::config(format!("bad --sweep value {v:?}")))
                })
                .collect(),
        }
    }
}

fn parse_rational(name: &str, s: &str) -> Result<BigRational, Failure> {
    BigRational::from_str(s.trim())
        .map_err(|_| Failure::config(format!("--{name} {s:?} is not a rational \"num/den\"")))
}
