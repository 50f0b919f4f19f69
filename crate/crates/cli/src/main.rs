//! `fracplast` — nonlocal fractional plasticity on a 1D bar.
//!
//! Subcommands: `run` (single configuration), `sweep` (figure-family
//! parameter sweeps), `verify` (invariant battery). Exit codes: 0 success,
//! 1 configuration error, 2 solver failure, 3 verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracplast::config::{preset_sweep, PRESET_NAMES};
use fracplast::{BodyForceProfile, EndConvention, RunConfig, SweepSpec};
use fracplast_cli::runner::run_single;
use fracplast_cli::sweep::run_sweep;
use fracplast_cli::verify::verify;
use fracplast_cli::Failure;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable naming the default output root.
const OUT_ROOT_ENV: &str = "FRACPLAST_OUT";

#[derive(Parser)]
#[command(
    name = "fracplast",
    version,
    about = "Nonlocal fractional plasticity on a 1D bar"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one configuration and write CSV profiles plus a plot script.
    Run(RunArgs),
    /// Run a parameter sweep (preset or explicit lists) with a summary CSV.
    Sweep(SweepArgs),
    /// Run the verification battery (kernel oracles, kinematics
    /// identities, plasticity consistency).
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EndConventionArg {
    Outward,
    BothPositive,
}

impl From<EndConventionArg> for EndConvention {
    fn from(value: EndConventionArg) -> Self {
        match value {
            EndConventionArg::Outward => EndConvention::Outward,
            EndConventionArg::BothPositive => EndConvention::BothPositive,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProfileArg {
    Uniform,
    CentralSegment,
    Table,
}

impl From<ProfileArg> for BodyForceProfile {
    fn from(value: ProfileArg) -> Self {
        match value {
            ProfileArg::Uniform => BodyForceProfile::Uniform,
            ProfileArg::CentralSegment => BodyForceProfile::CentralSegment,
            ProfileArg::Table => BodyForceProfile::Table,
        }
    }
}

/// Flag overrides shared by `run` and `sweep`; flags win over file keys.
#[derive(Args, Debug, Clone)]
struct Overrides {
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    ell_fraction: Option<f64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    l: Option<f64>,
    #[arg(long = "youngs-modulus")]
    youngs_modulus: Option<f64>,
    #[arg(long = "yield-stress")]
    yield_stress: Option<f64>,
    #[arg(long)]
    u_bar_fraction: Option<f64>,
    #[arg(long)]
    n_steps: Option<usize>,
    #[arg(long)]
    end_convention: Option<EndConventionArg>,
    #[arg(long)]
    body_force_profile: Option<ProfileArg>,
    #[arg(long)]
    body_force_magnitude: Option<f64>,
    #[arg(long)]
    body_force_fraction: Option<f64>,
}

impl Overrides {
    fn apply(&self, config: &mut RunConfig) {
        if let Some(v) = self.alpha {
            config.alpha = v;
        }
        if let Some(v) = self.ell_fraction {
            config.ell_fraction = v;
        }
        if let Some(v) = self.m {
            config.m = v;
        }
        if let Some(v) = self.l {
            config.l = v;
        }
        if let Some(v) = self.youngs_modulus {
            config.youngs_modulus = v;
        }
        if let Some(v) = self.yield_stress {
            config.yield_stress = v;
        }
        if let Some(v) = self.u_bar_fraction {
            config.u_bar_fraction = v;
        }
        if let Some(v) = self.n_steps {
            config.n_steps = v;
        }
        if let Some(v) = self.end_convention {
            config.end_convention = v.into();
        }
        if let Some(v) = self.body_force_profile {
            config.body_force_profile = v.into();
        }
        if let Some(v) = self.body_force_magnitude {
            config.body_force_magnitude = v;
        }
        if let Some(v) = self.body_force_fraction {
            config.body_force_fraction = v;
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Configuration file (flat JSON key/value record).
    #[arg(long)]
    config: PathBuf,
    /// Output directory; defaults to the config's `output`, then
    /// $FRACPLAST_OUT, then ./out.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Args)]
struct SweepArgs {
    /// Preset family: fig-r1 | fig-r2 | fig-r3 | fig-r4 | fig-r5.
    #[arg(long, conflicts_with_all = ["alphas", "ells", "ms"])]
    preset: Option<String>,
    /// Explicit order list, e.g. --alphas 0.5,0.95.
    #[arg(long, value_delimiter = ',')]
    alphas: Vec<f64>,
    /// Explicit ell/l list, e.g. --ells 0.2,0.1,0.02.
    #[arg(long, value_delimiter = ',')]
    ells: Vec<f64>,
    /// Explicit quadrature list, e.g. --ms 2,4,10.
    #[arg(long, value_delimiter = ',')]
    ms: Vec<usize>,
    /// Base configuration file for material/loading data.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output root; one subdirectory per sweep point plus summary.csv.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker pool size (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fault-injection self-test: scales quadrature weights by 1 + X;
    /// any nonzero value must make the battery fail.
    #[arg(long, default_value_t = 0.0)]
    perturb_weights: f64,
    /// Optional CSV residual report path.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn load_config(path: &PathBuf) -> Result<RunConfig, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Config(format!("cannot read {}: {e}", path.display())))?;
    let config: RunConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    Ok(config)
}

fn resolve_out(flag: Option<PathBuf>, config_out: Option<&PathBuf>) -> PathBuf {
    flag.or_else(|| config_out.cloned())
        .or_else(|| std::env::var_os(OUT_ROOT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"))
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let mut config = load_config(&args.config)?;
    args.overrides.apply(&mut config);
    config.validate()?;
    let out_dir = resolve_out(args.out, config.output.as_ref());
    run_single(&config, &out_dir)?;
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Failure> {
    let mut base = match &args.config {
        Some(path) => load_config(path)?,
        None => RunConfig::baseline(1.0, 0.1, 2),
    };
    args.overrides.apply(&mut base);
    let sweep = match &args.preset {
        Some(name) => {
            let mut preset = preset_sweep(name).ok_or_else(|| {
                Failure::Config(format!(
                    "unknown preset '{name}'; available: {}",
                    PRESET_NAMES.join(", ")
                ))
            })?;
            preset.base = base;
            preset
        }
        None => {
            if args.alphas.is_empty() || args.ells.is_empty() || args.ms.is_empty() {
                return Err(Failure::Config(
                    "sweep needs --preset or all of --alphas, --ells, --ms".into(),
                ));
            }
            SweepSpec {
                alphas: args.alphas.clone(),
                ell_fractions: args.ells.clone(),
                ms: args.ms.clone(),
                base,
            }
        }
    };
    let out_root = resolve_out(args.out, sweep.base.output.as_ref());
    let outcome = run_sweep(&sweep, &out_root, args.jobs)?;
    println!(
        "sweep: {} points, {} failed -> {}",
        outcome.rows.len(),
        outcome.failed,
        outcome.summary_path.display()
    );
    if outcome.failed > 0 {
        return Err(Failure::Solver(format!(
            "{} sweep point(s) failed; see {}",
            outcome.failed,
            outcome.summary_path.display()
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => verify(args.perturb_weights, args.report.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
