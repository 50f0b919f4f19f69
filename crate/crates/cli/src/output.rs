//! CSV and plot-script emission.
//!
//! CSV contract: header `x,u,eps_total,eps_elastic,eps_plastic,sigma`,
//! decimal notation with 17 significant digits, LF line endings. 17
//! significant digits round-trip every f64, so identical runs produce
//! byte-identical files.

use fracplast::solver::grid::Grid1D;
use fracplast::{FieldState, RunHistory};
use std::fs;
use std::io::Write;
use std::path::Path;

/// Decimal notation with 17 significant digits (no exponent form).
pub fn format_significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

pub const PROFILE_FILE: &str = "profile_final.csv";
pub const HISTORY_FILE: &str = "history.csv";
pub const PLOT_FILE: &str = "plot.gp";

/// Final-step per-node fields.
pub fn write_profile_csv(path: &Path, grid: &Grid1D, state: &FieldState) -> std::io::Result<()> {
    let mut out = String::from("x,u,eps_total,eps_elastic,eps_plastic,sigma\n");
    for i in 0..state.n_nodes() {
        let eps_elastic = state.eps_total[i] - state.eps_plastic[i];
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            format_significant(grid.node_x(i)),
            format_significant(state.u[i]),
            format_significant(state.eps_total[i]),
            format_significant(eps_elastic),
            format_significant(state.eps_plastic[i]),
            format_significant(state.sigma[i]),
        ));
    }
    fs::write(path, out)
}

/// Peak plastic strain and plastic-zone width after every load step.
pub fn write_history_csv(path: &Path, history: &RunHistory) -> std::io::Result<()> {
    let dx = history.grid.dx();
    let mut out = String::from("step,peak_eps_plastic,plastic_zone_width\n");
    for (k, state) in history.states.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            k + 1,
            format_significant(state.peak_plastic_strain()),
            format_significant(state.plastic_zone_width(dx)),
        ));
    }
    fs::write(path, out)
}

/// Gnuplot script rendering the plastic strain profile.
pub fn write_plot_script(path: &Path) -> std::io::Result<()> {
    let mut file = fs::File::create(path)?;
    writeln!(
        file,
        "set datafile separator ','\n\
         set xlabel 'X [m]'\n\
         set ylabel 'plastic strain [-]'\n\
         set grid\n\
         set terminal pngcairo size 900,600\n\
         set output 'eps_plastic.png'\n\
         plot '{PROFILE_FILE}' every ::1 using 1:5 with linespoints lw 2 title 'eps\\_plastic'"
    )
}
