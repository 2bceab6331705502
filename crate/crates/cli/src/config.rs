//! Flag definitions and validation. Anything rejected here is a usage error
//! (exit code 1); errors from the computation itself map to exit code 2.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pscbound::BcStatus;

pub const ELEMENT_CAP_ENV: &str = "PSCBOUND_ELEMENT_CAP";
pub const MIN_DIM: u64 = 7;
pub const MAX_DIM: u64 = 1 << 20;

#[derive(Debug, Parser)]
#[command(
    name = "pscbound",
    version,
    about = "Exact homology dimensions and bordism rank bounds for products of \
             surface, free, and finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank lower bounds over a dimension range
    Compute(ComputeArgs),
    /// Homology dimension grid for the three coefficient modules
    Homology(HomologyArgs),
    /// Fundamental-class expansion, its collapse, and their exact equality
    Matthey(MattheyArgs),
    /// Run the exact self-verification suites
    Verify(VerifyArgs),
    /// Generate the class-data file of a group expression
    Classdata(ClassdataArgs),
}

/// Where the group comes from: an expression or a class-data file.
#[derive(Debug, Args)]
pub struct GroupSource {
    /// Group expression, e.g. "surface(1) * cyclic(3)"
    #[arg(
        long,
        value_name = "EXPR",
        conflicts_with = "class_data",
        required_unless_present = "class_data"
    )]
    pub group: Option<String>,
    /// Class-data file describing the group instead of an expression
    #[arg(long, value_name = "PATH")]
    pub class_data: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: GroupSource,
    /// Inclusive dimension range `a..b` or a single dimension, within 7..=2^20
    #[arg(long, value_name = "RANGE")]
    pub dims: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Asserted status of the rational assembly map (never computed)
    #[arg(long, value_enum, default_value_t = BcStatusArg::Unknown)]
    pub bc_status: BcStatusArg,
    /// Cap on the number of elements of the finite part
    #[arg(long, value_name = "N")]
    pub element_cap: Option<usize>,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub source: GroupSource,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, value_name = "N")]
    pub element_cap: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MattheyArgs {
    /// Degree of the geometric factor
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub p: u8,
    /// Order of the cyclic group
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub m: u64,
    /// Eigenvalue index: 0 symmetric, 1 antisymmetric
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub q: u8,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest cyclic order the suites run over
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=128))]
    pub max_modulus: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassdataArgs {
    /// Group expression to generate class data for
    #[arg(long, value_name = "EXPR")]
    pub group: String,
    #[arg(long, value_name = "N")]
    pub element_cap: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcStatusArg {
    Injective,
    Surjective,
    Isomorphism,
    Unknown,
}

impl From<BcStatusArg> for BcStatus {
    fn from(v: BcStatusArg) -> BcStatus {
        match v {
            BcStatusArg::Injective => BcStatus::Injective,
            BcStatusArg::Surjective => BcStatus::Surjective,
            BcStatusArg::Isomorphism => BcStatus::Isomorphism,
            BcStatusArg::Unknown => BcStatus::Unknown,
        }
    }
}

/// Parses `a..b` or a single `n`; inclusive, nonempty, within [7, 2^20].
pub fn parse_dims(text: &str) -> Result<(u64, u64), String> {
    let parse_one = |s: &str| -> Result<u64, String> {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad dimension {s:?} in --dims"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse_one(a)?, parse_one(b)?),
        None => {
            let n = parse_one(text)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty dimension range {lo}..{hi}"));
    }
    if lo < MIN_DIM || hi > MAX_DIM {
        return Err(format!(
            "dimensions must lie within {MIN_DIM}..{MAX_DIM} (got {lo}..{hi})"
        ));
    }
    Ok((lo, hi))
}

/// Element cap: flag wins over the environment variable, which wins over the
/// library default.
pub fn resolve_element_cap(flag: Option<usize>) -> Result<usize, String> {
    let cap = match flag {
        Some(n) => n,
        None => match std::env::var(ELEMENT_CAP_ENV) {
            Ok(text) => text
                .trim()
                .parse::<usize>()
                .map_err(|_| format!("bad value {text:?} in {ELEMENT_CAP_ENV}"))?,
            Err(_) => pscbound::DEFAULT_ELEMENT_CAP,
        },
    };
    if cap == 0 {
        return Err("element cap must be at least 1".into());
    }
    Ok(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parsing() {
        assert_eq!(parse_dims("8..12").unwrap(), (8, 12));
        assert_eq!(parse_dims("9").unwrap(), (9, 9));
        assert_eq!(parse_dims(" 7 .. 7 ").unwrap(), (7, 7));
        assert!(parse_dims("12..8").is_err());
        assert!(parse_dims("6..8").is_err());
        assert!(parse_dims("8..1048577").is_err());
        assert!(parse_dims("x").is_err());
        assert!(parse_dims("").is_err());
    }
}
