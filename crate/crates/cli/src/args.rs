use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "su21",
    version,
    about = "Exact and numeric verification of explicit SU(2,1) cohomology representatives"
)]
pub struct Cli {
    /// Output format for check reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the action tables and bracket relations from 3×3 matrices.
    VerifyStructure(StructureArgs),
    /// Check the coboundary identities, Hodge types, equivariance and non-exactness.
    VerifyTheorem(TheoremArgs),
    /// Write the cochains ψᵏ, ψ₀ᵏ and χᵏ as JSON.
    ExportGenerators(ExportArgs),
    /// Finite-difference and quadrature checks of the Wigner-function formulas.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct StructureArgs {
    /// Corrupt one expected table entry (for testing the failure path).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// A single k or a range such as `0..10` (inclusive).
    #[arg(long, value_parser = parse_k_range, conflicts_with = "k_range")]
    pub k: Option<RangeInclusive<i64>>,

    #[arg(long, value_parser = parse_k_range)]
    pub k_range: Option<RangeInclusive<i64>>,

    #[arg(long, value_enum, default_value_t = VariantChoice::Plus1)]
    pub x3_variant: VariantChoice,

    /// Double the first χ₃ coefficient (for testing the failure path).
    #[arg(long, hide = true)]
    pub perturb_coefficients: bool,
}

impl TheoremArgs {
    pub fn ks(&self) -> RangeInclusive<i64> {
        self.k.clone().or_else(|| self.k_range.clone()).unwrap_or(0..=10)
    }
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    pub k: i64,

    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest k, or a range such as `0..3`.
    #[arg(long, value_parser = parse_k_range, default_value = "0..3")]
    pub k: RangeInclusive<i64>,

    /// Largest j, e.g. `5/2` or `2.5`.
    #[arg(long, value_parser = parse_half_int, default_value = "5/2")]
    pub j_max: i64,

    /// Random group points per derivative check.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 20)]
    pub samples: u64,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Relative tolerance for the derivative checks.
    #[arg(long, value_parser = parse_positive, default_value_t = 1e-6)]
    pub tol: f64,

    #[arg(long, value_enum, default_value_t = VariantChoice::Auto)]
    pub x3_variant: VariantChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Plus1,
    Plus2,
    Auto,
}

/// `3`, `0..10` or `0..=10`; a single value `n` means `n..=n`.
pub fn parse_k_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad k `{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo < 0 || hi < lo {
        return Err(format!("k range `{s}` must satisfy 0 ≤ start ≤ end"));
    }
    Ok(lo..=hi)
}

/// Returns `2j` for inputs like `5/2`, `2.5` or `2`.
pub fn parse_half_int(s: &str) -> Result<i64, String> {
    let doubled = if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        match d.trim() {
            "1" => 2 * n,
            "2" => n,
            _ => return Err("denominator must be 1 or 2".into()),
        }
    } else {
        let v: f64 = s.trim().parse().map_err(|e| format!("bad number: {e}"))?;
        let d = 2.0 * v;
        if d.fract() != 0.0 {
            return Err(format!("`{s}` is not a half-integer"));
        }
        d as i64
    };
    if doubled < 0 {
        return Err("j must be nonnegative".into());
    }
    Ok(doubled)
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}
