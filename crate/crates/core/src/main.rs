//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for invalid arguments or I/O problems,
//! 3 when a computation fails numerically (the message names the
//! offending distance).

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hypchroma::hoffman::{hoffman_bound, limit_constants, sweep, SearchConfig};
use hypchroma::report::{csv_report, format_sig12, svg_chart};
use hypchroma::selfcheck;
use hypchroma::spherical::QuadratureConfig;
use hypchroma::spindle::build_spindle;
use hypchroma::Error;

#[derive(Parser)]
#[command(
    name = "hypchroma",
    version,
    about = "Certified spectral lower bounds for colouring hyperbolic distance graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified colouring lower bound at one distance
    Bound(BoundArgs),
    /// Tabulate the bound over a distance grid into CSV (and optionally SVG)
    Sweep(SweepArgs),
    /// Limiting constants of the bound as the distance grows
    Limit,
    /// Build and certify the seven-point spindle embedding at one distance
    Spindle(SpindleArgs),
    /// Run the built-in consistency checks
    Check,
}

#[derive(Args)]
struct BoundArgs {
    /// Graph distance (0 < d ≤ 700)
    #[arg(long, allow_negative_numbers = true)]
    d: f64,
    /// Right edge of the frequency search window
    #[arg(long, default_value_t = 60.0)]
    smax: f64,
    /// Pitch of the coarse frequency scan
    #[arg(long, default_value_t = 0.05)]
    grid_step: f64,
    /// Width to which the minimiser is refined
    #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
    tol: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// First distance of the grid (must be positive)
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    /// Last distance of the grid
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Grid pitch
    #[arg(long, allow_negative_numbers = true)]
    step: f64,
    /// CSV output path
    #[arg(long)]
    out: PathBuf,
    /// Optional SVG chart path
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct SpindleArgs {
    /// Edge length of the embedding (0 < d ≤ 700)
    #[arg(long, allow_negative_numbers = true)]
    d: f64,
    /// Optional JSON output path for the certified embedding
    #[arg(long)]
    json: Option<PathBuf>,
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
    ChecksFailed(usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::ChecksFailed(n) => write!(f, "{n} consistency group(s) failed"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Numeric(_) | Error::Quadrature(_)) => 3,
            CliError::ChecksFailed(_) => 3,
            _ => 2,
        }
    }
}

fn cmd_bound(args: BoundArgs) -> Result<(), CliError> {
    let cfg = SearchConfig {
        s_max: args.smax,
        grid_step: args.grid_step,
        refine_tol: args.tol,
        ..SearchConfig::default()
    };
    let r = hoffman_bound(args.d, &cfg, &QuadratureConfig::default())?;
    println!("d            = {}", format_sig12(r.d));
    println!("psi_min      = {}", format_sig12(r.psi_min));
    println!("s_star       = {}", format_sig12(r.s_star));
    println!("bound        = {}", format_sig12(r.bound));
    if let (Some(sup), Some(inf)) = (r.spectrum_sup, r.spectrum_inf) {
        println!("spectrum_sup = {}", format_sig12(sup));
        println!("spectrum_inf = {}", format_sig12(inf));
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let results = sweep(
        args.from,
        args.to,
        args.step,
        &SearchConfig::default(),
        &QuadratureConfig::default(),
    )?;
    fs::write(&args.out, csv_report(&results))?;
    println!("wrote {} rows to {}", results.len(), args.out.display());
    if let Some(path) = args.svg {
        let constants = limit_constants(1e-12)?;
        fs::write(&path, svg_chart(&results, constants.limit))?;
        println!("wrote chart to {}", path.display());
    }
    Ok(())
}

fn cmd_limit() -> Result<(), CliError> {
    let c = limit_constants(1e-12)?;
    println!("rho   = {}", format_sig12(c.rho));
    println!("nu    = {}", format_sig12(c.nu));
    println!("limit = {}", format_sig12(c.limit));
    Ok(())
}

fn cmd_spindle(args: SpindleArgs) -> Result<(), CliError> {
    let emb = build_spindle(args.d)?;
    println!("d             = {}", format_sig12(emb.d()));
    println!("alpha         = {}", format_sig12(emb.alpha()));
    println!("leg           = {}", format_sig12(emb.leg()));
    println!("theta         = {}", format_sig12(emb.theta()));
    println!("max_deviation = {:.3e}", emb.max_deviation());
    println!("chromatic     = {}", emb.graph().chromatic_number());
    if let Some(path) = args.json {
        fs::write(&path, emb.to_json())?;
        println!("wrote embedding to {}", path.display());
    }
    Ok(())
}

fn cmd_check() -> Result<(), CliError> {
    let reports = selfcheck::run_all();
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", r.name, r.detail);
    }
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    println!("all {} groups passed", reports.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Bound(args) => cmd_bound(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Limit => cmd_limit(),
        Command::Spindle(args) => cmd_spindle(args),
        Command::Check => cmd_check(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
