//! Independent classical (local) reference solver.
//!
//! Solves the same incremental program with hard-coded classical
//! differences — second difference for equilibrium on a tridiagonal
//! system (Thomas algorithm), forward/central/backward first differences
//! for strains — touching none of the fractional-kernel machinery. Serves
//! as the oracle for the α = 1 collapse of the nonlocal solver.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::kernel::FractionalOperatorSpec;
use crate::solver::grid::Grid1D;
use crate::solver::stencil::Stencil;
use crate::solver::{extend_with_boundary_increments, march_uniform_increments, RunHistory};

/// Tridiagonal solve; `sub[0]` and `sup[n-1]` are ignored.
fn thomas(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut beta = vec![0.0; n];
    let mut d = rhs.to_vec();
    beta[0] = diag[0];
    if beta[0] == 0.0 {
        return Err(Error::SingularSystem { node: 0 });
    }
    for i in 1..n {
        let f = sub[i] / beta[i - 1];
        beta[i] = diag[i] - f * sup[i - 1];
        d[i] -= f * d[i - 1];
        if beta[i] == 0.0 {
            return Err(Error::SingularSystem { node: i });
        }
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1] / beta[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (d[i] - sup[i] * x[i + 1]) / beta[i];
    }
    Ok(x)
}

/// Runs the load program with the classical local operator, forcing
/// α = 1 regardless of the configured order. The grid spacing still
/// follows `dx = ℓ/m` so results are comparable point for point.
pub fn classical_reference(config: &RunConfig) -> Result<RunHistory> {
    config.validate()?;
    let spacing_spec = FractionalOperatorSpec::new(1.0, config.ell(), config.m)?;
    let grid = Grid1D::new(config.l, &spacing_spec)?;
    let params = config.params()?;
    let program = config.program(&grid)?;

    let n = grid.n_intervals();
    let dx = grid.dx();
    let (dl, dr) = program.end_increments();
    let steps = program.n_steps as f64;

    // (ΔU_{i-1} - 2 ΔU_i + ΔU_{i+1}) / ΔX² = -Δb_i / E
    let n_unknowns = n - 1;
    let sub = vec![1.0 / (dx * dx); n_unknowns];
    let diag = vec![-2.0 / (dx * dx); n_unknowns];
    let sup = vec![1.0 / (dx * dx); n_unknowns];
    let mut rhs = vec![0.0; n_unknowns];
    for i in 1..n {
        let row = i - 1;
        rhs[row] = -(program.body_force[i] / steps) / params.youngs_modulus;
        if i == 1 {
            rhs[row] -= 1.0 / (dx * dx) * dl;
        }
        if i == n - 1 {
            rhs[row] -= 1.0 / (dx * dx) * dr;
        }
    }
    let du = thomas(&sub, &diag, &sup, &rhs).map_err(|e| e.at_step(1))?;

    let extended = extend_with_boundary_increments(&du, dl, dr, &grid);
    let forward = Stencil::new(0, vec![-1.0 / dx, 1.0 / dx]);
    let central = Stencil::new(-1, vec![-1.0 / (2.0 * dx), 0.0, 1.0 / (2.0 * dx)]);
    let backward = Stencil::new(-1, vec![-1.0 / dx, 1.0 / dx]);
    let d_eps: Vec<f64> = (0..=n)
        .map(|i| {
            let st = if i == 0 {
                &forward
            } else if i == n {
                &backward
            } else {
                &central
            };
            st.apply(&extended, grid.extended_index(i))
        })
        .collect();
    let du_physical = &extended[grid.extended_index(0)..=grid.extended_index(n)];

    let states = march_uniform_increments(du_physical, &d_eps, &params, program.n_steps);
    Ok(RunHistory { grid, states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::BodyForceProfile;
    use crate::solver::run;
    use approx::assert_abs_diff_eq;

    #[test]
    fn elastic_linear_profile_without_body_force() {
        let mut config = RunConfig::baseline(1.0, 0.1, 2);
        config.body_force_magnitude = 0.0;
        config.yield_stress = f64::INFINITY;
        let history = classical_reference(&config).unwrap();
        let last = history.final_state();
        let l = history.grid.length();
        for i in 0..last.n_nodes() {
            let x = history.grid.node_x(i);
            let expected = -0.003 + 0.006 * x / l;
            assert_abs_diff_eq!(last.u[i], expected, epsilon = 1e-14);
            assert_abs_diff_eq!(last.eps_total[i], 0.006, epsilon = 1e-12);
        }
    }

    #[test]
    fn uniform_body_force_with_pinned_equal_ends_is_symmetric() {
        let mut config = RunConfig::baseline(1.0, 0.1, 2);
        config.u_bar_fraction = 0.0;
        config.yield_stress = f64::INFINITY;
        config.body_force_profile = BodyForceProfile::Uniform;
        let history = classical_reference(&config).unwrap();
        let last = history.final_state();
        let n = last.n_nodes();
        for i in 0..n {
            assert_abs_diff_eq!(last.u[i], last.u[n - 1 - i], epsilon = 1e-15);
        }
        assert!(last.u[n / 2] > 0.0);
    }

    #[test]
    fn matches_the_fractional_solver_at_alpha_one() {
        for ell_fraction in [0.4, 0.2, 0.04] {
            let config = RunConfig::baseline(1.0, ell_fraction, 2);
            let fractional = run(&config).unwrap();
            let classical = classical_reference(&config).unwrap();
            assert_eq!(fractional.states.len(), classical.states.len());
            for (a, b) in fractional.states.iter().zip(&classical.states) {
                for i in 0..a.n_nodes() {
                    assert_abs_diff_eq!(a.u[i], b.u[i], epsilon = 1e-10);
                    assert_abs_diff_eq!(a.eps_plastic[i], b.eps_plastic[i], epsilon = 1e-10);
                    assert_abs_diff_eq!(a.sigma[i], b.sigma[i], epsilon = 1e-10 * 1e9);
                }
            }
        }
    }
}
