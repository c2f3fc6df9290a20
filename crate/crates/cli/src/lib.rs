//! `bifcohom`: compute Poincaré series of bifunctor cohomology, solve the
//! characteristic-2 rank ledger, and replay the table of known values.
//!
//! Exit codes: 0 on success, 1 when `verify` finds an unexpected mismatch,
//! 2 on invalid input.

mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};

use bifunctor_cohom::cohom::{cohomology_series, gl_finite_series, CohomError};
use bifunctor_cohom::ledger::{init_ledger, LedgerError};
use bifunctor_cohom::{CoefficientKind, Family, Partition, Twist, TwistParams};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use render::{series_json, SeriesOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bifcohom",
    version,
    about = "Exact Poincaré series for GL bifunctor cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a series in factored form followed by its expansion.
    Series(SeriesArgs),
    /// Print only the expansion of a series.
    Expand(SeriesArgs),
    /// Solve the characteristic-2 rank ledger for a finite twist.
    Ledger(LedgerArgs),
    /// Replay the table of known values and report every claim.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// gl^{⊗n}, with --n
    Tensor,
    /// S^λ(gl), with --partition
    Schur,
    Sym2,
    Ext2,
    Gamma2,
    /// S^d(gl) ⊗ gl, with --d
    ExpSym,
    /// Λ^d(gl) ⊗ gl, with --d
    ExpExt,
    /// Γ^d(gl) ⊗ gl, with --d
    ExpGamma,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Characteristic.
    #[arg(long)]
    p: Option<u32>,
    /// Frobenius twist, a non-negative integer or "inf".
    #[arg(long)]
    r: Option<Twist>,
    /// Order of a finite field; selects the stable comparison.
    #[arg(long, conflicts_with_all = ["p", "r"])]
    q: Option<u64>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Tensor power for --kind tensor.
    #[arg(long)]
    n: Option<usize>,
    /// Partition such as "2,1".
    #[arg(long)]
    partition: Option<Partition>,
    /// Degree of A^d for the exponential kinds.
    #[arg(long)]
    d: Option<usize>,
    /// Highest degree in the expansion.
    #[arg(long, default_value_t = 48)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct LedgerArgs {
    #[arg(long)]
    r: Twist,
    /// Highest degree to tabulate; defaults to the validity window.
    #[arg(long)]
    order: Option<usize>,
    /// Also print which constraint fixed each unknown.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<CohomError> for Failure {
    fn from(e: CohomError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<LedgerError> for Failure {
    fn from(e: LedgerError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

/// Runs one command line, writing results to `out` and diagnostics to
/// `err`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Series(a) => series_cmd(&a, false, out),
        Command::Expand(a) => series_cmd(&a, true, out),
        Command::Ledger(a) => ledger_cmd(&a, out),
        Command::Verify(a) => verify_cmd(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn coefficient_kind(a: &SeriesArgs) -> Result<CoefficientKind, Failure> {
    let need_d = |fam| match a.d {
        Some(d) if d >= 1 => Ok(CoefficientKind::Exponential(fam, d)),
        Some(_) => Err(invalid("--d must be at least 1")),
        None => Err(invalid("exponential kinds need --d")),
    };
    let kind = match (a.kind, &a.partition, a.n) {
        (None | Some(KindArg::Schur), Some(l), None) => CoefficientKind::Schur(l.clone()),
        (Some(KindArg::Schur), None, _) => return Err(invalid("--kind schur needs --partition")),
        (None | Some(KindArg::Tensor), None, Some(n)) if n >= 1 => CoefficientKind::Tensor(n),
        (Some(KindArg::Tensor), None, None) => return Err(invalid("--kind tensor needs --n")),
        (Some(KindArg::Sym2), None, None) => CoefficientKind::Sym2,
        (Some(KindArg::Ext2), None, None) => CoefficientKind::Ext2,
        (Some(KindArg::Gamma2), None, None) => CoefficientKind::Gamma2,
        (Some(KindArg::ExpSym), None, None) => need_d(Family::Sym)?,
        (Some(KindArg::ExpExt), None, None) => need_d(Family::Ext)?,
        (Some(KindArg::ExpGamma), None, None) => need_d(Family::Gamma)?,
        (None, None, None) => return Err(invalid("give --kind, --partition or --n")),
        _ => return Err(invalid("conflicting --kind, --partition and --n")),
    };
    if a.d.is_some() && !matches!(kind, CoefficientKind::Exponential(..)) {
        return Err(invalid("--d only applies to the exponential kinds"));
    }
    Ok(kind)
}

fn series_cmd(a: &SeriesArgs, expansion_only: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let kind = coefficient_kind(a)?;
    let series = match a.q {
        Some(q) => gl_finite_series(q, &kind)?.series,
        None => {
            let p = a.p.ok_or_else(|| invalid("give --p (with --r) or --q"))?;
            let tp = TwistParams::new(p, a.r.unwrap_or(Twist::Infinite))
                .map_err(|e| invalid(e.to_string()))?;
            cohomology_series(tp, &kind)?
        }
    };
    let output = SeriesOutput::new(series, a.order);
    output.write(a.format, expansion_only, out)?;
    Ok(EXIT_OK)
}

fn ledger_cmd(a: &LedgerArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let Twist::Finite(r) = a.r else {
        return Err(invalid("the ledger needs a finite twist"));
    };
    if r > 6 {
        return Err(invalid("the ledger supports r <= 6"));
    }
    let state = init_ledger(r, a.order).solve()?;
    render::write_ledger(&state, a.trace, a.format, out)?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = verify::verify_tables();
    report.write(a.format, out)?;
    Ok(if report.has_unexpected_mismatch() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}
