//! 1D grid with fictitious boundary nodes.
//!
//! The quadrature nodes of the nonlocal operator coincide with grid
//! nodes, which ties the spacing to the operator: `ΔX = h = ℓ/m`. Each
//! side of the bar carries `m` fictitious nodes so that every physical
//! node owns its full `2m + 3`-point stencil support.

use crate::error::{Error, Result};
use crate::kernel::FractionalOperatorSpec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    length: f64,
    n_intervals: usize,
    dx: f64,
    m: usize,
}

impl Grid1D {
    pub fn new(length: f64, spec: &FractionalOperatorSpec) -> Result<Self> {
        if !(length > 0.0) {
            return Err(Error::Config(format!(
                "bar length must be positive, got {length}"
            )));
        }
        if spec.ell() > length * (1.0 + 1e-12) {
            return Err(Error::Config(format!(
                "nonlocal horizon ell = {} exceeds the bar length {length}",
                spec.ell()
            )));
        }
        let dx = spec.step();
        let n_real = length / dx;
        let n = n_real.round();
        if (n_real - n).abs() > 1e-9 * n_real.max(1.0) {
            return Err(Error::Config(format!(
                "grid spacing dx = ell/m = {dx} must divide the bar length {length} \
                 into an integer interval count (got {n_real})"
            )));
        }
        let n_intervals = n as usize;
        if n_intervals < 2 {
            return Err(Error::Config(format!(
                "grid needs at least 2 intervals for an interior unknown, got {n_intervals}"
            )));
        }
        Ok(Self {
            length,
            n_intervals,
            dx,
            m: spec.m(),
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Physical intervals; physical nodes are `X_0 .. X_n`.
    pub fn n_intervals(&self) -> usize {
        self.n_intervals
    }

    pub fn n_nodes(&self) -> usize {
        self.n_intervals + 1
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Fictitious nodes per side.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node_x(&self, i: usize) -> f64 {
        i as f64 * self.dx
    }

    /// Length of the extended node vector including both fictitious wings.
    pub fn extended_len(&self) -> usize {
        self.n_nodes() + 2 * self.m
    }

    /// Index of physical node `i` inside the extended vector.
    pub fn extended_index(&self, i: usize) -> usize {
        self.m + i
    }
}
