//! Run configuration, body-force profiles, and sweep presets.
//!
//! Configurations are flat key/value records (JSON-compatible). The grid
//! is never specified directly: the triple `(alpha, ell_fraction, m)`
//! fixes the spacing through `dx = ℓ/m`, and the interval count follows
//! as `n = l/dx`, which must be an integer.

use crate::error::{Error, Result};
use crate::kernel::FractionalOperatorSpec;
use crate::plasticity::MaterialParams;
use crate::solver::grid::Grid1D;
use crate::solver::LoadProgram;
use serde::Deserialize;
use std::path::PathBuf;

/// The ten fractional orders exercised by the parameter studies.
pub const ORDER_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

/// Direction convention for the prescribed end displacements.
///
/// `Outward` applies `-Ǔ` at `X = 0` and `+Ǔ` at `X = l` (tension);
/// `BothPositive` applies `+Ǔ` at both ends, which by itself is a rigid
/// translation and strains the bar only through the body force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndConvention {
    #[default]
    Outward,
    BothPositive,
}

/// Spatial shape of the body force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyForceProfile {
    /// Constant magnitude at every node.
    Uniform,
    /// Magnitude on the centred segment of width `body_force_fraction * l`
    /// (half-open, so a node sitting exactly on the upper edge is outside),
    /// zero elsewhere. Nodes sample the profile pointwise.
    #[default]
    CentralSegment,
    /// Per-node values given directly by `body_force_values`.
    Table,
}

fn default_length() -> f64 {
    1.0
}
fn default_youngs() -> f64 {
    205e9
}
fn default_yield() -> f64 {
    1.2e9
}
fn default_u_bar_fraction() -> f64 {
    0.003
}
fn default_n_steps() -> usize {
    100
}
fn default_body_force() -> f64 {
    615e6
}
fn default_body_force_fraction() -> f64 {
    0.1
}

/// One fully specified solver run.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Order of the fractional continuum, in (0, 1].
    pub alpha: f64,
    /// Length scale as a fraction of the bar length, `ℓ/l`.
    pub ell_fraction: f64,
    /// Quadrature subintervals per half-interval; fixes `dx = ℓ/m`.
    pub m: usize,
    /// Bar length, m.
    #[serde(default = "default_length")]
    pub l: f64,
    /// Young's modulus, Pa.
    #[serde(default = "default_youngs", rename = "E")]
    pub youngs_modulus: f64,
    /// Flow stress, Pa.
    #[serde(default = "default_yield", rename = "sigma_Y")]
    pub yield_stress: f64,
    /// Prescribed end displacement as a fraction of the bar length, `Ǔ/l`.
    #[serde(default = "default_u_bar_fraction")]
    pub u_bar_fraction: f64,
    #[serde(default = "default_n_steps")]
    pub n_steps: usize,
    #[serde(default)]
    pub end_convention: EndConvention,
    #[serde(default)]
    pub body_force_profile: BodyForceProfile,
    /// Body-force magnitude, N/m^3.
    #[serde(default = "default_body_force")]
    pub body_force_magnitude: f64,
    /// Width of the loaded central segment as a fraction of `l`.
    #[serde(default = "default_body_force_fraction")]
    pub body_force_fraction: f64,
    /// Per-node body force for the `table` profile.
    #[serde(default)]
    pub body_force_values: Option<Vec<f64>>,
    /// Output directory (optional; the CLI may override).
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Baseline bar with the default material and loading data; only the
    /// operator triple varies.
    pub fn baseline(alpha: f64, ell_fraction: f64, m: usize) -> Self {
        Self {
            alpha,
            ell_fraction,
            m,
            l: default_length(),
            youngs_modulus: default_youngs(),
            yield_stress: default_yield(),
            u_bar_fraction: default_u_bar_fraction(),
            n_steps: default_n_steps(),
            end_convention: EndConvention::default(),
            body_force_profile: BodyForceProfile::default(),
            body_force_magnitude: default_body_force(),
            body_force_fraction: default_body_force_fraction(),
            body_force_values: None,
            output: None,
        }
    }

    /// Length scale `ℓ = ell_fraction * l`.
    pub fn ell(&self) -> f64 {
        self.ell_fraction * self.l
    }

    /// End displacement magnitude `Ǔ = u_bar_fraction * l`.
    pub fn u_bar(&self) -> f64 {
        self.u_bar_fraction * self.l
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::Config(format!(
                "alpha must lie in (0,1], got {}",
                self.alpha
            )));
        }
        if !(self.ell_fraction > 0.0 && self.ell_fraction <= 1.0) {
            return Err(Error::Config(format!(
                "ell_fraction must lie in (0,1], got {}",
                self.ell_fraction
            )));
        }
        if !(self.l > 0.0) {
            return Err(Error::Config(format!("l must be positive, got {}", self.l)));
        }
        if !(self.u_bar_fraction >= 0.0) {
            return Err(Error::Config(format!(
                "u_bar_fraction must be non-negative, got {}",
                self.u_bar_fraction
            )));
        }
        if self.n_steps < 1 {
            return Err(Error::Config("n_steps must be at least 1".into()));
        }
        if !self.body_force_magnitude.is_finite() {
            return Err(Error::Config(format!(
                "body_force_magnitude must be finite, got {}",
                self.body_force_magnitude
            )));
        }
        match self.body_force_profile {
            BodyForceProfile::CentralSegment => {
                if !(self.body_force_fraction > 0.0 && self.body_force_fraction <= 1.0) {
                    return Err(Error::Config(format!(
                        "body_force_fraction must lie in (0,1], got {}",
                        self.body_force_fraction
                    )));
                }
            }
            BodyForceProfile::Table => {
                if self.body_force_values.is_none() {
                    return Err(Error::Config(
                        "body_force_profile = table requires body_force_values".into(),
                    ));
                }
            }
            BodyForceProfile::Uniform => {}
        }
        self.params()?;
        // Builds the operator and grid, surfacing the dx = ell/m constraint,
        // then resolves the profile so a mis-sized table is caught here.
        let grid = self.grid()?;
        self.body_force_nodes(&grid)?;
        Ok(())
    }

    pub fn spec(&self) -> Result<FractionalOperatorSpec> {
        FractionalOperatorSpec::new(self.alpha, self.ell(), self.m)
    }

    pub fn grid(&self) -> Result<Grid1D> {
        Grid1D::new(self.l, &self.spec()?)
    }

    pub fn params(&self) -> Result<MaterialParams> {
        MaterialParams::new(self.youngs_modulus, self.yield_stress)
    }

    /// Per-node body force values on the physical grid.
    pub fn body_force_nodes(&self, grid: &Grid1D) -> Result<Vec<f64>> {
        match self.body_force_profile {
            BodyForceProfile::Uniform => Ok(vec![self.body_force_magnitude; grid.n_nodes()]),
            BodyForceProfile::CentralSegment => {
                let width = self.body_force_fraction * self.l;
                let lo = 0.5 * (self.l - width);
                let hi = 0.5 * (self.l + width);
                // Nodes sample the indicator pointwise; a node sitting on a
                // segment edge (up to rounding) takes half weight, which
                // keeps the profile symmetric on symmetric grids and the
                // total load at magnitude * width whenever the grid
                // resolves the segment at all.
                let eps = 1e-9 * self.l;
                Ok((0..grid.n_nodes())
                    .map(|i| {
                        let x = grid.node_x(i);
                        if (x - lo).abs() < eps || (x - hi).abs() < eps {
                            0.5 * self.body_force_magnitude
                        } else if x > lo && x < hi {
                            self.body_force_magnitude
                        } else {
                            0.0
                        }
                    })
                    .collect())
            }
            BodyForceProfile::Table => {
                let values = self.body_force_values.as_ref().ok_or_else(|| {
                    Error::Config("body_force_profile = table requires body_force_values".into())
                })?;
                if values.len() != grid.n_nodes() {
                    return Err(Error::Config(format!(
                        "body_force_values has {} entries but the grid has {} nodes",
                        values.len(),
                        grid.n_nodes()
                    )));
                }
                Ok(values.clone())
            }
        }
    }

    pub fn program(&self, grid: &Grid1D) -> Result<LoadProgram> {
        Ok(LoadProgram {
            end_displacement: self.u_bar(),
            n_steps: self.n_steps,
            end_convention: self.end_convention,
            body_force: self.body_force_nodes(grid)?,
        })
    }
}

/// Cross product of operator triples over a shared base configuration.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub alphas: Vec<f64>,
    pub ell_fractions: Vec<f64>,
    pub ms: Vec<usize>,
    pub base: RunConfig,
}

impl SweepSpec {
    /// Expands and validates every point, in deterministic
    /// alpha-major / ell / m order.
    pub fn points(&self) -> Result<Vec<RunConfig>> {
        if self.alphas.is_empty() || self.ell_fractions.is_empty() || self.ms.is_empty() {
            return Err(Error::Config(
                "sweep requires non-empty alpha, ell, and m lists".into(),
            ));
        }
        let mut points = Vec::new();
        for &alpha in &self.alphas {
            for &ell_fraction in &self.ell_fractions {
                for &m in &self.ms {
                    let mut config = self.base.clone();
                    config.alpha = alpha;
                    config.ell_fraction = ell_fraction;
                    config.m = m;
                    config.validate()?;
                    points.push(config);
                }
            }
        }
        Ok(points)
    }
}

pub const PRESET_NAMES: [&str; 5] = ["fig-r1", "fig-r2", "fig-r3", "fig-r4", "fig-r5"];

/// Named sweep families of the parameter studies:
///
/// * `fig-r1` — classical sensitivity: α = 1 at ΔX in {0.2l, 0.1l, 0.02l};
/// * `fig-r2` — the α x ℓ grid at m = 2;
/// * `fig-r3`/`fig-r4`/`fig-r5` — quadrature sensitivity at α = 0.95 / 0.5 /
///   0.2 over ℓ in {0.2l, 0.1l, 0.02l} and m in {2, 4, 10}.
pub fn preset_sweep(name: &str) -> Option<SweepSpec> {
    let base = RunConfig::baseline(1.0, 0.1, 2);
    let m_family = |alpha: f64| SweepSpec {
        alphas: vec![alpha],
        ell_fractions: vec![0.2, 0.1, 0.02],
        ms: vec![2, 4, 10],
        base: base.clone(),
    };
    match name {
        // dx = ell/m, so m = 2 with ell in {0.4, 0.2, 0.04} realises the
        // three classical spacings (ell itself is inert at alpha = 1).
        "fig-r1" => Some(SweepSpec {
            alphas: vec![1.0],
            ell_fractions: vec![0.4, 0.2, 0.04],
            ms: vec![2],
            base,
        }),
        "fig-r2" => Some(SweepSpec {
            alphas: ORDER_GRID.to_vec(),
            ell_fractions: vec![0.02, 0.1, 0.2],
            ms: vec![2],
            base,
        }),
        "fig-r3" => Some(m_family(0.95)),
        "fig-r4" => Some(m_family(0.5)),
        "fig-r5" => Some(m_family(0.2)),
        _ => None,
    }
}
