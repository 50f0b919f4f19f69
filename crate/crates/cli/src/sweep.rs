//! Figure-family sweeps: a worker pool over the parameter cross product,
//! one output directory per point, and a deterministic summary CSV.

use crate::output::format_significant;
use crate::runner::execute_run;
use crate::Failure;
use fracplast::{RunConfig, SweepSpec};
use rayon::prelude::*;
use std::fs;
use std::path::{Path, PathBuf};

pub const SUMMARY_FILE: &str = "summary.csv";

/// Subdirectory name of one sweep point, e.g. `a0.95_l0.1_m2`.
pub fn point_dir_name(config: &RunConfig) -> String {
    format!("a{}_l{}_m{}", config.alpha, config.ell_fraction, config.m)
}

#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub alpha: f64,
    pub ell_fraction: f64,
    pub m: usize,
    pub dx: f64,
    pub peak_eps_plastic: Option<f64>,
    pub plastic_zone_width: Option<f64>,
    pub max_displacement: Option<f64>,
    pub status: String,
}

#[derive(Debug)]
pub struct SweepOutcome {
    pub rows: Vec<SummaryRow>,
    pub summary_path: PathBuf,
    pub failed: usize,
}

fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut out =
        String::from("alpha,ell_fraction,m,dx,peak_eps_p,plastic_zone_width,max_U,status\n");
    for row in rows {
        let fmt_opt = |v: Option<f64>| v.map(format_significant).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.alpha,
            row.ell_fraction,
            row.m,
            format_significant(row.dx),
            fmt_opt(row.peak_eps_plastic),
            fmt_opt(row.plastic_zone_width),
            fmt_opt(row.max_displacement),
            row.status,
        ));
    }
    out
}

fn run_point(config: &RunConfig, out_root: &Path) -> SummaryRow {
    let dx = config.ell() / config.m as f64;
    let dir = out_root.join(point_dir_name(config));
    match execute_run(config, &dir) {
        Ok(summary) => SummaryRow {
            alpha: config.alpha,
            ell_fraction: config.ell_fraction,
            m: config.m,
            dx: summary.dx,
            peak_eps_plastic: Some(summary.peak_eps_plastic),
            plastic_zone_width: Some(summary.plastic_zone_width),
            max_displacement: Some(summary.max_displacement),
            status: "ok".to_string(),
        },
        Err(failure) => SummaryRow {
            alpha: config.alpha,
            ell_fraction: config.ell_fraction,
            m: config.m,
            dx,
            peak_eps_plastic: None,
            plastic_zone_width: None,
            max_displacement: None,
            // Keep the CSV grammar intact whatever the message contains.
            status: failure.to_string().replace([',', '\n'], ";"),
        },
    }
}

/// Expands the sweep, runs every point on the worker pool (failing points
/// are recorded and the sweep continues), and writes `summary.csv` in
/// deterministic point order.
pub fn run_sweep(
    sweep: &SweepSpec,
    out_root: &Path,
    jobs: Option<usize>,
) -> Result<SweepOutcome, Failure> {
    let points = sweep.points()?;
    fs::create_dir_all(out_root)?;

    let execute =
        || -> Vec<SummaryRow> { points.par_iter().map(|c| run_point(c, out_root)).collect() };
    let rows = match jobs {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::Config(format!("worker pool: {e}")))?
            .install(execute),
        None => execute(),
    };

    let summary_path = out_root.join(SUMMARY_FILE);
    fs::write(&summary_path, summary_csv(&rows))?;
    let failed = rows.iter().filter(|r| r.status != "ok").count();
    Ok(SweepOutcome {
        rows,
        summary_path,
        failed,
    })
}
