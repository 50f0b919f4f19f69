//! Single-run execution: solve, write the output files, summarise.

use crate::output::{
    write_history_csv, write_plot_script, write_profile_csv, HISTORY_FILE, PLOT_FILE, PROFILE_FILE,
};
use crate::Failure;
use fracplast::{run, RunConfig};
use std::fs;
use std::path::Path;

/// Headline numbers of a finished run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSummary {
    pub dx: f64,
    pub peak_eps_plastic: f64,
    pub plastic_zone_width: f64,
    pub max_displacement: f64,
}

/// One-paragraph echo of the configuration actually run.
pub fn config_header(config: &RunConfig) -> String {
    format!(
        "run: alpha = {}, ell = {} l, m = {} | l = {} m, E = {} Pa, sigma_Y = {} Pa, \
         U_bar = {} l, b = {} N/m^3 ({:?}), steps = {}, ends = {:?}",
        config.alpha,
        config.ell_fraction,
        config.m,
        config.l,
        config.youngs_modulus,
        config.yield_stress,
        config.u_bar_fraction,
        config.body_force_magnitude,
        config.body_force_profile,
        config.n_steps,
        config.end_convention,
    )
}

/// Solves one configuration and writes `profile_final.csv`, `history.csv`,
/// and the plot script into `out_dir` (created if missing).
pub fn execute_run(config: &RunConfig, out_dir: &Path) -> Result<RunSummary, Failure> {
    let history = run(config)?;
    fs::create_dir_all(out_dir)?;
    let last = history.final_state();
    write_profile_csv(&out_dir.join(PROFILE_FILE), &history.grid, last)?;
    write_history_csv(&out_dir.join(HISTORY_FILE), &history)?;
    write_plot_script(&out_dir.join(PLOT_FILE))?;
    Ok(RunSummary {
        dx: history.grid.dx(),
        peak_eps_plastic: last.peak_plastic_strain(),
        plastic_zone_width: last.plastic_zone_width(history.grid.dx()),
        max_displacement: last.max_displacement(),
    })
}

/// `execute_run` plus the header echo on stdout.
pub fn run_single(config: &RunConfig, out_dir: &Path) -> Result<RunSummary, Failure> {
    println!("{}", config_header(config));
    let summary = execute_run(config, out_dir)?;
    println!(
        "done: dx = {}, peak eps_p = {:.6e}, zone width = {:.4}, max |U| = {:.6e} -> {}",
        summary.dx,
        summary.peak_eps_plastic,
        summary.plastic_zone_width,
        summary.max_displacement,
        out_dir.display()
    );
    Ok(summary)
}
