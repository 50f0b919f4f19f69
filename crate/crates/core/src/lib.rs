//! Nonlocal fractional kinematics and rate-independent plasticity.
//!
//! The crate provides:
//!
//! * [`kernel`] — quadrature weights and evaluation of left/right Caputo
//!   and Riesz-Caputo fractional derivatives on finite intervals;
//! * [`kinematics`] — a numerical verification lab for fractional
//!   deformation gradients, rigid-body/objectivity identities, and strain
//!   measures in 1D and 2D;
//! * [`plasticity`] — 1D rate-independent perfect plasticity with return
//!   mapping;
//! * [`solver`] — the incremental nonlocal boundary-value solver on a 1D
//!   bar with fictitious boundary nodes, plus an independent classical
//!   reference;
//! * [`config`] — run configurations and the named sweep presets.

// Validation deliberately writes `!(x > 0.0)` so NaN is rejected while
// +inf stays admissible (an infinite yield stress models an elastic body).
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod gamma;
pub mod kernel;
pub mod kinematics;
pub mod plasticity;
pub mod solver;

pub use config::{BodyForceProfile, EndConvention, RunConfig, SweepSpec};
pub use error::{Error, Result};
pub use kernel::{FractionalOperatorSpec, InnerScheme, StencilCoefficients};
pub use plasticity::{MaterialParams, PointState};
pub use solver::{classical_reference, run, FieldState, LoadProgram, RunHistory};
