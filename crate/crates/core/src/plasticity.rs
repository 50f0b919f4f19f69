//! 1D rate-independent perfect plasticity: elastic trial, yield check,
//! and return mapping.
//!
//! The yield condition is `f = |σ| - σ_Y`; the return map projects a
//! trial stress back onto the yield surface with consistency increment
//! `Δγ = f_trial / E`, which for perfect plasticity lands exactly on
//! `|σ| = σ_Y`.

use crate::error::{Error, Result};

/// Elastic modulus and flow stress of the bar material.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    /// Young's modulus, Pa.
    pub youngs_modulus: f64,
    /// Flow (yield) stress, Pa.
    pub yield_stress: f64,
}

impl MaterialParams {
    pub fn new(youngs_modulus: f64, yield_stress: f64) -> Result<Self> {
        if !(youngs_modulus > 0.0) {
            return Err(Error::Config(format!(
                "Young's modulus must be positive, got {youngs_modulus}"
            )));
        }
        if !(yield_stress > 0.0) {
            return Err(Error::Config(format!(
                "yield stress must be positive, got {yield_stress}"
            )));
        }
        Ok(Self {
            youngs_modulus,
            yield_stress,
        })
    }

    /// Strain at first yield, `σ_Y / E`.
    pub fn yield_strain(&self) -> f64 {
        self.yield_stress / self.youngs_modulus
    }
}

/// Evolving state of one material point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PointState {
    pub eps_total: f64,
    pub eps_plastic: f64,
    /// Stress, Pa; always `E (ε - ε_p)`.
    pub sigma: f64,
    /// Consistency increment of the most recent update; zero on elastic steps.
    pub dgamma_last: f64,
}

impl PointState {
    /// Yield function value at the current stress.
    pub fn yield_value(&self, params: &MaterialParams) -> f64 {
        self.sigma.abs() - params.yield_stress
    }

    pub fn eps_elastic(&self) -> f64 {
        self.eps_total - self.eps_plastic
    }
}

/// Elastic predictor: trial stress and trial yield value for a strain
/// increment `d_eps` applied to `state`.
pub fn elastic_trial(state: &PointState, d_eps: f64, params: &MaterialParams) -> (f64, f64) {
    let sigma_trial = params.youngs_modulus * (state.eps_total + d_eps - state.eps_plastic);
    let f_trial = sigma_trial.abs() - params.yield_stress;
    (sigma_trial, f_trial)
}

/// Plastic corrector. `state` must already carry the updated total strain;
/// requires `f_trial > 0`.
pub fn return_map(
    sigma_trial: f64,
    f_trial: f64,
    state: &PointState,
    params: &MaterialParams,
) -> Result<PointState> {
    if f_trial <= 0.0 {
        return Err(Error::ContractViolation(format!(
            "return map called on an elastic trial state (f_trial = {f_trial})"
        )));
    }
    let dgamma = f_trial / params.youngs_modulus;
    let direction = sigma_trial.signum();
    let eps_plastic = state.eps_plastic + dgamma * direction;
    // Evaluating the elastic law on the corrected plastic strain keeps
    // sigma = E (eps - eps_p) bit-exact; it equals the projected stress
    // sigma_trial - dgamma E sign, i.e. sign * sigma_Y, to rounding.
    let sigma = params.youngs_modulus * (state.eps_total - eps_plastic);
    Ok(PointState {
        eps_total: state.eps_total,
        eps_plastic,
        sigma,
        dgamma_last: dgamma,
    })
}

/// One strain-driven update: elastic trial, yield check, and return map
/// on the plastic branch.
pub fn update_point(state: &PointState, d_eps: f64, params: &MaterialParams) -> PointState {
    let (sigma_trial, f_trial) = elastic_trial(state, d_eps, params);
    let trial_state = PointState {
        eps_total: state.eps_total + d_eps,
        eps_plastic: state.eps_plastic,
        sigma: sigma_trial,
        dgamma_last: 0.0,
    };
    if f_trial <= 0.0 {
        trial_state
    } else {
        return_map(sigma_trial, f_trial, &trial_state, params)
            .expect("plastic branch implies f_trial > 0")
    }
}
