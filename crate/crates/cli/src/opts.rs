use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gfft_core::algorithms::Algorithm;
use gfft_core::field::DEFAULT_PRIMITIVE_POLYS;
use gfft_core::{FieldContext, FieldSpec};

#[derive(Debug, Parser)]
#[command(name = "gfft", version, about = "Semifast Fourier transforms over GF(2^m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every plan against the naive DFT and its structural identities.
    Verify(VerifyArgs),
    /// Report operation counts next to the n log n and 2n²/log n bounds.
    Bench(BenchArgs),
    /// Print the factorization matrices of small plans.
    Factor(FactorArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Field degree, a single value or an inclusive range such as `2..8`.
    #[arg(long, value_name = "M|LO..HI")]
    pub m: MRange,

    /// Comma-separated algorithm tags, or `all`.
    #[arg(long, value_name = "LIST", default_value = "all")]
    pub algo: AlgoList,

    /// Primitive polynomial in hex (bit i = coefficient of x^i); requires a single m.
    #[arg(long, value_name = "HEX", value_parser = parse_hex)]
    pub poly: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,

    /// Random vectors per (m, algorithm).
    #[arg(long, default_value_t = 100)]
    pub trials: usize,

    #[arg(long, env = "GFFT_SEED", default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: Common,

    /// Four Russians block width t; defaults to ⌊log₂ n⌋.
    #[arg(long)]
    pub block_size: Option<usize>,

    #[arg(long, value_enum, default_value_t = BenchFormat::Text)]
    pub format: BenchFormat,

    #[arg(long, env = "GFFT_SEED", default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[command(flatten)]
    pub common: Common,

    #[arg(long, value_enum, default_value_t = FactorFormat::Text)]
    pub format: FactorFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FactorFormat {
    Text,
    Latex,
}

/// Inclusive range of field degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MRange(pub RangeInclusive<u32>);

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid degree {t:?}"));
        let range = match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                num(lo)?..=num(hi)?
            }
            None => {
                let m = num(s)?;
                m..=m
            }
        };
        if range.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        Ok(MRange(range))
    }
}

impl MRange {
    pub fn degrees(&self) -> impl Iterator<Item = u32> {
        self.0.clone()
    }

    pub fn within(&self, lo: u32, hi: u32) -> bool {
        *self.0.start() >= lo && *self.0.end() <= hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgoList(pub Vec<Algorithm>);

impl FromStr for AlgoList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(AlgoList(Algorithm::ALL.to_vec()));
        }
        let mut out = Vec::new();
        for tag in s.split(',').filter(|t| !t.trim().is_empty()) {
            let a: Algorithm = tag.parse().map_err(|_| format!("unknown algorithm {tag:?}"))?;
            if !out.contains(&a) {
                out.push(a);
            }
        }
        if out.is_empty() {
            return Err("no algorithm given".into());
        }
        Ok(AlgoList(out))
    }
}

fn parse_hex(s: &str) -> Result<u32, String> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u32::from_str_radix(digits, 16).map_err(|_| format!("invalid hex polynomial {s:?}"))
}

/// A command-line mistake, reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Common {
    /// Field contexts for every requested degree.
    pub fn contexts(&self, lo: u32, hi: u32, what: &str) -> Result<Vec<FieldContext>, UsageError> {
        if !self.m.within(lo, hi) {
            return Err(UsageError(format!("m out of {what} range ({lo}..={hi})")));
        }
        match self.poly {
            Some(poly) => {
                if self.m.0.start() != self.m.0.end() {
                    return Err(UsageError("--poly needs a single --m".into()));
                }
                let m = *self.m.0.start();
                FieldSpec::new(m, poly)
                    .and_then(FieldContext::new)
                    .map(|c| vec![c])
                    .map_err(|e| UsageError(format!("--poly {poly:#x}: {e}")))
            }
            None => Ok(self.m.degrees().map(|m| FieldContext::with_degree(m).expect("degree checked")).collect()),
        }
    }
}

/// Help text listing the built-in primitive polynomials.
pub fn poly_help() -> String {
    let mut s = String::from(
        "Primitive polynomial in hex, bit i being the coefficient of x^i; requires a single m.\n\nDefaults:",
    );
    for (i, p) in DEFAULT_PRIMITIVE_POLYS.iter().enumerate() {
        s.push_str(&format!("\n  m = {:>2}: {p:#x}", i + 2));
    }
    s
}
