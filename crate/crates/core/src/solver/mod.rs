//! Incremental nonlocal equilibrium on a 1D bar with fictitious boundary
//! nodes, fractional strain increments, and the elasto-plastic load march.
//!
//! Each load step solves the purely elastic incremental equilibrium
//! `∂/∂X(Grad ΔŨ) + Δb/E = 0` for the interior displacement increments,
//! accumulates displacements and fractional strains, and corrects the
//! stress pointwise by return mapping. No global re-equilibration follows
//! the plastic correction; the stress field is not re-balanced after
//! yielding. The end displacements and the body force ramp proportionally,
//! so the per-step linear system is load-step independent and is solved
//! once.

pub mod banded;
pub mod grid;
pub mod stencil;

mod classical;

pub use classical::classical_reference;

use crate::config::{EndConvention, RunConfig};
use crate::error::{Error, Result};
use crate::kernel::FractionalOperatorSpec;
use crate::plasticity::{update_point, MaterialParams, PointState};
use banded::BandedMatrix;
use grid::Grid1D;
use stencil::{equilibrium_stencil, strain_stencil, PositionClass};

/// Boundary displacement program and per-node body force (full magnitude;
/// applied in `n_steps` proportional increments).
#[derive(Debug, Clone)]
pub struct LoadProgram {
    pub end_displacement: f64,
    pub n_steps: usize,
    pub end_convention: EndConvention,
    pub body_force: Vec<f64>,
}

impl LoadProgram {
    /// Per-step increments of the left and right end displacements.
    pub fn end_increments(&self) -> (f64, f64) {
        let d = self.end_displacement / self.n_steps as f64;
        match self.end_convention {
            EndConvention::Outward => (-d, d),
            EndConvention::BothPositive => (d, d),
        }
    }
}

/// Per-node fields on the physical grid after a load step.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldState {
    pub u: Vec<f64>,
    pub eps_total: Vec<f64>,
    pub eps_plastic: Vec<f64>,
    pub sigma: Vec<f64>,
    pub dgamma_last: Vec<f64>,
}

impl FieldState {
    fn zeros(n_nodes: usize) -> Self {
        Self {
            u: vec![0.0; n_nodes],
            eps_total: vec![0.0; n_nodes],
            eps_plastic: vec![0.0; n_nodes],
            sigma: vec![0.0; n_nodes],
            dgamma_last: vec![0.0; n_nodes],
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.u.len()
    }

    /// Largest plastic strain magnitude over the bar.
    pub fn peak_plastic_strain(&self) -> f64 {
        self.eps_plastic.iter().fold(0.0, |a, &e| a.max(e.abs()))
    }

    /// Measure of the plastified node set: node count times spacing.
    pub fn plastic_zone_width(&self, dx: f64) -> f64 {
        let count = self.eps_plastic.iter().filter(|e| e.abs() > 1e-12).count();
        count as f64 * dx
    }

    pub fn max_displacement(&self) -> f64 {
        self.u.iter().fold(0.0, |a, &v| a.max(v.abs()))
    }
}

/// Snapshots of every load step of one run.
#[derive(Debug, Clone)]
pub struct RunHistory {
    pub grid: Grid1D,
    pub states: Vec<FieldState>,
}

impl RunHistory {
    pub fn final_state(&self) -> &FieldState {
        self.states.last().expect("a run has at least one step")
    }
}

/// Assembled per-step system over the interior unknowns `ΔU_1..ΔU_{n-1}`.
#[derive(Debug, Clone)]
pub struct BandedSystem {
    pub matrix: BandedMatrix,
    pub rhs: Vec<f64>,
}

/// Builds the incremental equilibrium system. Dirichlet nodes 0 and n and
/// all fictitious nodes carry the boundary increments and are folded into
/// the right-hand side together with `-Δb_i/E`.
pub fn assemble(
    spec: &FractionalOperatorSpec,
    grid: &Grid1D,
    program: &LoadProgram,
    params: &MaterialParams,
) -> Result<BandedSystem> {
    if grid.m() != spec.m() || (grid.dx() - spec.step()).abs() > 1e-12 * grid.dx() {
        return Err(Error::Config(format!(
            "grid spacing {} does not match the operator step {}",
            grid.dx(),
            spec.step()
        )));
    }
    if program.body_force.len() != grid.n_nodes() {
        return Err(Error::Config(format!(
            "body force has {} entries for {} nodes",
            program.body_force.len(),
            grid.n_nodes()
        )));
    }
    let n = grid.n_intervals();
    let st = equilibrium_stencil(spec);
    let bandwidth = spec.m() + 1;
    let mut matrix = BandedMatrix::zeros(n - 1, bandwidth, bandwidth);
    let mut rhs = vec![0.0; n - 1];
    let (dl, dr) = program.end_increments();
    let steps = program.n_steps as f64;
    for i in 1..n {
        let row = i - 1;
        rhs[row] = -(program.body_force[i] / steps) / params.youngs_modulus;
        for (o, c) in st.iter() {
            let j = i as isize + o;
            if j <= 0 {
                rhs[row] -= c * dl;
            } else if j >= n as isize {
                rhs[row] -= c * dr;
            } else {
                matrix.add(row, (j - 1) as usize, c);
            }
        }
    }
    Ok(BandedSystem { matrix, rhs })
}

/// Direct banded solve with a residual check against the assembled matrix.
pub fn solve_increment(system: &BandedSystem) -> Result<Vec<f64>> {
    let solution = system.matrix.factor()?.solve(&system.rhs);
    let product = system.matrix.matvec(&solution);
    let residual = product
        .iter()
        .zip(&system.rhs)
        .fold(0.0_f64, |a, (p, r)| a.max((p - r).abs()));
    let scale = system.rhs.iter().fold(0.0_f64, |a, r| a.max(r.abs()));
    let limit = 1e-10 * scale;
    if residual > limit {
        return Err(Error::Residual { residual, limit });
    }
    Ok(solution)
}

/// Full increment vector over fictitious + physical nodes: interior
/// unknowns in the middle, the boundary increments at nodes 0 and n and on
/// both fictitious wings.
pub fn extend_with_boundary_increments(
    interior: &[f64],
    dl: f64,
    dr: f64,
    grid: &Grid1D,
) -> Vec<f64> {
    let n = grid.n_intervals();
    assert_eq!(interior.len(), n - 1);
    let mut ext = vec![0.0; grid.extended_len()];
    for k in 0..=grid.m() {
        ext[k] = dl;
        ext[grid.extended_len() - 1 - k] = dr;
    }
    ext[grid.extended_index(1)..grid.extended_index(n)].copy_from_slice(interior);
    ext
}

/// Fractional strain increments at every physical node: forward stencil at
/// node 0, central at 1..n-1, backward at n.
pub fn strain_increments(
    extended: &[f64],
    spec: &FractionalOperatorSpec,
    grid: &Grid1D,
) -> Result<Vec<f64>> {
    if extended.len() != grid.extended_len() {
        return Err(Error::ContractViolation(format!(
            "extended increment vector has {} entries, expected {}",
            extended.len(),
            grid.extended_len()
        )));
    }
    let n = grid.n_intervals();
    let forward = strain_stencil(spec, PositionClass::LeftBoundary);
    let central = strain_stencil(spec, PositionClass::Interior);
    let backward = strain_stencil(spec, PositionClass::RightBoundary);
    Ok((0..=n)
        .map(|i| {
            let st = if i == 0 {
                &forward
            } else if i == n {
                &backward
            } else {
                &central
            };
            st.apply(extended, grid.extended_index(i))
        })
        .collect())
}

/// Marches identical per-step increments through the plasticity update and
/// snapshots each step.
pub(crate) fn march_uniform_increments(
    du_physical: &[f64],
    d_eps: &[f64],
    params: &MaterialParams,
    n_steps: usize,
) -> Vec<FieldState> {
    let n_nodes = du_physical.len();
    assert_eq!(d_eps.len(), n_nodes);
    let mut points = vec![PointState::default(); n_nodes];
    let mut u = vec![0.0; n_nodes];
    let mut states = Vec::with_capacity(n_steps);
    for _ in 0..n_steps {
        let mut snapshot = FieldState::zeros(n_nodes);
        for i in 0..n_nodes {
            u[i] += du_physical[i];
            points[i] = update_point(&points[i], d_eps[i], params);
            snapshot.u[i] = u[i];
            snapshot.eps_total[i] = points[i].eps_total;
            snapshot.eps_plastic[i] = points[i].eps_plastic;
            snapshot.sigma[i] = points[i].sigma;
            snapshot.dgamma_last[i] = points[i].dgamma_last;
        }
        states.push(snapshot);
    }
    states
}

/// Runs the full incremental elasto-plastic program for one configuration.
pub fn run(config: &RunConfig) -> Result<RunHistory> {
    config.validate()?;
    let spec = config.spec()?;
    let grid = config.grid()?;
    let params = config.params()?;
    let program = config.program(&grid)?;

    let system = assemble(&spec, &grid, &program, &params).map_err(|e| e.at_step(1))?;
    let du = solve_increment(&system).map_err(|e| e.at_step(1))?;
    let (dl, dr) = program.end_increments();
    let extended = extend_with_boundary_increments(&du, dl, dr, &grid);
    let d_eps = strain_increments(&extended, &spec, &grid)?;
    let du_physical = &extended[grid.extended_index(0)..=grid.extended_index(grid.n_intervals())];

    let states = march_uniform_increments(du_physical, &d_eps, &params, program.n_steps);
    Ok(RunHistory { grid, states })
}
