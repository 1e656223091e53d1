//! `dunkl`: polynomial tables, zero tables, series reports and the
//! verification suites from the command line.
//!
//! Exit status: 0 success, 2 usage error, 3 precondition violation,
//! 4 verification failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{Failure, Format};

#[derive(Parser, Debug)]
#[command(name = "dunkl", version, about = "Bernoulli-Dunkl and related families, Bessel-zero series and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficient table of a polynomial family.
    Poly(PolyArgs),
    /// Positive zeros s_j (of J_{α+1}(x)/x^{α+1}) or j_l (of J_α).
    Zeros(ZerosArgs),
    /// Truncated, tail-corrected series against its closed form.
    Series(SeriesArgs),
    /// Fourier-Dunkl coefficients of a Bernoulli-Dunkl polynomial.
    Fourier(FourierArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Bernoulli,
    Aed,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(value_enum)]
    family: Family,
    /// α as "p/q" (exact) or a decimal.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long)]
    max_n: usize,
    /// Compare against the classical Bernoulli polynomials (needs α = −1/2).
    #[arg(long)]
    classical_check: bool,
    /// AED parameter u, e.g. "0.5+1.2i".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "u_at_jzero")]
    u: Option<String>,
    /// Use u = i j_l, the l-th positive zero of J_α.
    #[arg(long)]
    u_at_jzero: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZeroKindArg {
    S,
    J,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value_t = ZeroKindArg::S)]
    kind: ZeroKindArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKindArg {
    Sigma,
    Rho,
    EtaU,
    EtaL,
    OmegaU,
    OmegaL,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesKindArg,
    #[arg(long)]
    k: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Shift u for eta-u / omega-u.
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Lattice index l for eta-l / omega-l.
    #[arg(long)]
    l: Option<usize>,
    /// Truncation N.
    #[arg(long, default_value_t = 10_000)]
    terms: usize,
    /// Add the fitted tail beyond N.
    #[arg(long)]
    tail: bool,
}

#[derive(Args, Debug)]
struct FourierArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Degree of the expanded polynomial.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Coefficients are listed for |j| ≤ jmax.
    #[arg(long, default_value_t = 12)]
    jmax: usize,
    /// J of the Parseval sum and of the partial sums at --x.
    #[arg(long, default_value_t = 10_000)]
    terms: usize,
    #[arg(long)]
    tail: bool,
    #[arg(long, default_value_t = 96)]
    quad_order: usize,
    /// Interior points where partial sums are evaluated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Exact,
    Series,
    Fourier,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Comma-separated α values, e.g. "-1/2,0,1/2,2".
    #[arg(long, allow_hyphen_values = true)]
    alpha_grid: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    quad_order: Option<usize>,
    #[arg(long)]
    terms: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly(a) => commands::poly(a),
        Command::Zeros(a) => commands::zeros(a),
        Command::Series(a) => commands::series(a),
        Command::Fourier(a) => commands::fourier(a),
        Command::Verify(a) => commands::verify(a),
    };
    let outcome = result.and_then(|out| {
        output::emit(&out, cli.format, cli.output.as_deref())?;
        match out.failure {
            Some(f) => Err(f),
            None => Ok(()),
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("dunkl: {f}");
            ExitCode::from(f.code())
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Precondition(m) => write!(f, "precondition violated: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Io(m) => write!(f, "{m}"),
        }
    }
}
