//! Grid stencils of the discretised nonlocal operators.
//!
//! Both stencil families start from the symmetric Riesz-Caputo node
//! weights `ω` over the quadrature offsets `-m..=m`
//! (`ω = [B, C_1.., C_{m-1}, 2, D_1.., D_{m-1}, B]`) and compose them with
//! a classical inner difference for the first derivative at each
//! quadrature node:
//!
//! * strain stencils use the forward / central / backward inner difference
//!   named for the node's position class;
//! * the equilibrium stencil uses forward inner differences followed by a
//!   backward outer difference of the resulting gradient between nodes
//!   `i` and `i-1`, which reduces to the symmetric second difference
//!   `ω_{o-1} - 2 ω_o + ω_{o+1}` of the node weights.
//!
//! For m = 2 the compositions reproduce the closed-form seven-point
//! coefficient lists term for term; at α = 1 they collapse to the
//! classical first/second difference stencils.

use crate::kernel::{FractionalOperatorSpec, StencilCoefficients};

/// A finite-difference stencil: full per-node multipliers (the factor
/// `F = ℓ^{α-1} E A` and the grid scaling are folded in) over a contiguous
/// range of node offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct Stencil {
    min_offset: isize,
    coeffs: Vec<f64>,
}

impl Stencil {
    pub fn new(min_offset: isize, coeffs: Vec<f64>) -> Self {
        Self { min_offset, coeffs }
    }

    pub fn min_offset(&self) -> isize {
        self.min_offset
    }

    pub fn max_offset(&self) -> isize {
        self.min_offset + self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Pairs `(node offset, multiplier)` in ascending offset order.
    pub fn iter(&self) -> impl Iterator<Item = (isize, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.min_offset + k as isize, c))
    }

    /// Dot product with `values` around `values[centre]`.
    pub fn apply(&self, values: &[f64], centre: usize) -> f64 {
        let mut acc = 0.0;
        for (o, c) in self.iter() {
            acc += c * values[(centre as isize + o) as usize];
        }
        acc
    }
}

/// Node position class selecting the inner difference of the strain stencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionClass {
    LeftBoundary,
    Interior,
    RightBoundary,
}

/// Symmetric Riesz-Caputo node weights over quadrature offsets `-m..=m`;
/// the centre weight is 2 (the evaluation node enters both one-sided sums).
pub fn rc_node_weights(spec: &FractionalOperatorSpec) -> Vec<f64> {
    let m = spec.m();
    let coeffs = StencilCoefficients::from_spec(spec);
    let mut w = Vec::with_capacity(2 * m + 1);
    w.push(coeffs.endpoint_weight);
    w.extend_from_slice(&coeffs.left_middle);
    w.push(2.0);
    w.extend_from_slice(&coeffs.right_middle);
    w.push(coeffs.endpoint_weight);
    w
}

fn padded(w: &[f64], m: usize, k: isize) -> f64 {
    let idx = k + m as isize;
    if idx < 0 || idx >= w.len() as isize {
        0.0
    } else {
        w[idx as usize]
    }
}

/// Stencil of the incremental equilibrium operator `∂/∂X (Grad ΔŨ)` over
/// node offsets `-(m+1)..=(m+1)`; multipliers carry `F / ΔX²`.
pub fn equilibrium_stencil(spec: &FractionalOperatorSpec) -> Stencil {
    let m = spec.m() as isize;
    let dx = spec.step();
    let scale = StencilCoefficients::from_spec(spec).combined_scale / (dx * dx);
    let w = rc_node_weights(spec);
    let coeffs = (-(m + 1)..=(m + 1))
        .map(|o| {
            let bracket = padded(&w, spec.m(), o - 1) - 2.0 * padded(&w, spec.m(), o)
                + padded(&w, spec.m(), o + 1);
            bracket * scale
        })
        .collect();
    Stencil::new(-(m + 1), coeffs)
}

/// Stencil of the fractional strain operator `Grad ΔŨ` at a node of the
/// given position class; multipliers carry `F / ΔX` (boundary classes) or
/// `F / (2ΔX)` (interior).
pub fn strain_stencil(spec: &FractionalOperatorSpec, class: PositionClass) -> Stencil {
    let m = spec.m() as isize;
    let dx = spec.step();
    let f = StencilCoefficients::from_spec(spec).combined_scale;
    let w = rc_node_weights(spec);
    let g = |k: isize| padded(&w, spec.m(), k);
    match class {
        PositionClass::LeftBoundary => {
            let scale = f / dx;
            let coeffs = (-m..=(m + 1)).map(|o| (g(o - 1) - g(o)) * scale).collect();
            Stencil::new(-m, coeffs)
        }
        PositionClass::Interior => {
            let scale = f / (2.0 * dx);
            let coeffs = (-(m + 1)..=(m + 1))
                .map(|o| (g(o - 1) - g(o + 1)) * scale)
                .collect();
            Stencil::new(-(m + 1), coeffs)
        }
        PositionClass::RightBoundary => {
            let scale = f / dx;
            let coeffs = (-(m + 1)..=m).map(|o| (g(o) - g(o + 1)) * scale).collect();
            Stencil::new(-(m + 1), coeffs)
        }
    }
}
