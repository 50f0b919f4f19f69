//! Left/right Caputo and Riesz-Caputo fractional derivatives of sampled
//! functions on finite intervals.
//!
//! For an order α in (0, 1] the Riesz-Caputo derivative over the symmetric
//! interval `[X - ℓ, X + ℓ]` is
//!
//! ```text
//! RC D^α f(X) = (Γ(2-α)/2) · (leftCaputo - rightCaputo),
//! ```
//!
//! where each one-sided Caputo derivative integrates `f'` against the
//! weakly singular kernel `|X - τ|^{-α}`. Discretisation uses the modified
//! trapezoidal rule: `f'` is replaced by its piecewise-linear interpolant
//! on `m` equal subintervals per side, and the hat functions are
//! integrated against the kernel exactly. That yields per-side weights
//!
//! ```text
//! w_0 = B = (m-1)^{2-α} - (m+α-2) m^{1-α}      (far endpoint)
//! w_j = (m-j+1)^{2-α} - 2(m-j)^{2-α} + (m-j-1)^{2-α}   (interior, left)
//! w_m = 1                                      (evaluation point)
//! ```
//!
//! with the common factor `A = h^{1-α}/Γ(3-α)` kept separate. At α = 1
//! every endpoint and interior weight vanishes and the operator collapses
//! to the classical derivative at the evaluation point.

use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Order, length scale, and quadrature resolution of the nonlocal operator.
///
/// The operator acts on the interval `[X - ℓ, X + ℓ]` (length `L = 2ℓ`)
/// with quadrature step `h = ℓ / m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOperatorSpec {
    alpha: f64,
    ell: f64,
    m: usize,
}

impl FractionalOperatorSpec {
    pub fn new(alpha: f64, ell: f64, m: usize) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) || !alpha.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "alpha must lie in (0,1], got {alpha}"
            )));
        }
        if !(ell > 0.0) || !ell.is_finite() {
            return Err(Error::InvalidSpec(format!(
                "length scale must be positive, got {ell}"
            )));
        }
        if m < 2 {
            return Err(Error::InvalidSpec(format!(
                "quadrature needs m >= 2 subintervals per side, got {m}"
            )));
        }
        Ok(Self { alpha, ell, m })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Length scale ℓ; also half the operator interval.
    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Quadrature subintervals per half-interval.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Quadrature step `h = ℓ / m`.
    pub fn step(&self) -> f64 {
        self.ell / self.m as f64
    }

    /// Operator interval length `L = 2ℓ`.
    pub fn interval_length(&self) -> f64 {
        2.0 * self.ell
    }
}

/// The scalar factors and middle-weight arrays of the discretised operator.
///
/// `combined_scale` is the factor multiplying the composed finite-difference
/// stencils: `F = ℓ^{α-1} · E · A`.
#[derive(Debug, Clone, PartialEq)]
pub struct StencilCoefficients {
    /// `A = h^{1-α} / Γ(3-α)`; common factor of every per-side weight.
    pub trapezoid_scale: f64,
    /// `B`; weight of the far endpoint of each one-sided quadrature.
    pub endpoint_weight: f64,
    /// `C_j`, j = 1..m-1; interior weights of the left-sided quadrature.
    pub left_middle: Vec<f64>,
    /// `D_j`, j = 1..m-1; interior weights of the right-sided quadrature.
    pub right_middle: Vec<f64>,
    /// `E = Γ(2-α)/2`; symmetrising prefactor of the Riesz-Caputo form.
    pub riesz_prefactor: f64,
    /// `F = ℓ^{α-1} · E · A`.
    pub combined_scale: f64,
}

/// `(k+1)^p - 2 k^p + (k-1)^p` with `p = 2 - α`; the hat-function weight
/// of an interior quadrature node `k` steps away from the singularity.
fn three_term(k: usize, p: f64) -> f64 {
    let k = k as f64;
    (k + 1.0).powf(p) - 2.0 * k.powf(p) + (k - 1.0).powf(p)
}

fn endpoint_weight(alpha: f64, m: usize) -> f64 {
    let mf = m as f64;
    (mf - 1.0).powf(2.0 - alpha) - (mf + alpha - 2.0) * mf.powf(1.0 - alpha)
}

impl StencilCoefficients {
    pub fn from_spec(spec: &FractionalOperatorSpec) -> Self {
        let alpha = spec.alpha();
        let m = spec.m();
        let h = spec.step();
        let p = 2.0 - alpha;
        let left_middle: Vec<f64> = (1..m).map(|j| three_term(m - j, p)).collect();
        let right_middle: Vec<f64> = (1..m).map(|j| three_term(j, p)).collect();
        let trapezoid_scale = h.powf(1.0 - alpha) / gamma(3.0 - alpha);
        let riesz_prefactor = 0.5 * gamma(2.0 - alpha);
        let combined_scale = spec.ell().powf(alpha - 1.0) * riesz_prefactor * trapezoid_scale;
        Self {
            trapezoid_scale,
            endpoint_weight: endpoint_weight(alpha, m),
            left_middle,
            right_middle,
            riesz_prefactor,
            combined_scale,
        }
    }
}

/// Weights `w_0..w_m` of the left-sided Caputo quadrature over nodes
/// `X - ℓ = X̌_0 < ... < X̌_m = X`, so that
/// `leftCaputo ≈ A · Σ_j w_j f'(X̌_j)`. The factor `A` is not folded in.
pub fn caputo_left_weights(spec: &FractionalOperatorSpec) -> Vec<f64> {
    let m = spec.m();
    let p = 2.0 - spec.alpha();
    let mut w = Vec::with_capacity(m + 1);
    w.push(endpoint_weight(spec.alpha(), m));
    for j in 1..m {
        w.push(three_term(m - j, p));
    }
    w.push(1.0);
    w
}

/// Weights `v_0..v_m` of the right-sided Caputo quadrature over nodes
/// `X = X̌_0 < ... < X̌_m = X + ℓ`. The right Caputo derivative carries an
/// overall minus sign for order n = 1:
/// `rightCaputo ≈ -A · Σ_j v_j f'(X̌_j)`.
pub fn caputo_right_weights(spec: &FractionalOperatorSpec) -> Vec<f64> {
    let m = spec.m();
    let p = 2.0 - spec.alpha();
    let mut v = Vec::with_capacity(m + 1);
    v.push(1.0);
    for j in 1..m {
        v.push(three_term(j, p));
    }
    v.push(endpoint_weight(spec.alpha(), m));
    v
}

fn check_len(actual: usize, expected: usize, what: &str) -> Result<()> {
    if actual != expected {
        return Err(Error::ContractViolation(format!(
            "{what}: expected {expected} samples, got {actual}"
        )));
    }
    Ok(())
}

/// Left Caputo derivative at `X` from first-derivative samples at the
/// `m + 1` quadrature nodes covering `[X - ℓ, X]`.
pub fn caputo_left_from_fprime(spec: &FractionalOperatorSpec, fprime: &[f64]) -> Result<f64> {
    check_len(fprime.len(), spec.m() + 1, "left Caputo")?;
    let coeffs = StencilCoefficients::from_spec(spec);
    let weights = caputo_left_weights(spec);
    let sum: f64 = weights.iter().zip(fprime).map(|(w, f)| w * f).sum();
    Ok(coeffs.trapezoid_scale * sum)
}

/// Right Caputo derivative at `X` from first-derivative samples at the
/// `m + 1` quadrature nodes covering `[X, X + ℓ]`; includes the order-1
/// sign so a constant-slope function yields a negative value.
pub fn caputo_right_from_fprime(spec: &FractionalOperatorSpec, fprime: &[f64]) -> Result<f64> {
    check_len(fprime.len(), spec.m() + 1, "right Caputo")?;
    let coeffs = StencilCoefficients::from_spec(spec);
    let weights = caputo_right_weights(spec);
    let sum: f64 = weights.iter().zip(fprime).map(|(w, f)| w * f).sum();
    Ok(-coeffs.trapezoid_scale * sum)
}

/// Riesz-Caputo derivative at the interval centre from first-derivative
/// samples at the `2m + 1` quadrature nodes covering `[X - ℓ, X + ℓ]`
/// (centre at index `m`). Computes `E · (leftCaputo - rightCaputo)`.
pub fn rc_derivative_from_fprime(spec: &FractionalOperatorSpec, fprime: &[f64]) -> Result<f64> {
    let m = spec.m();
    check_len(fprime.len(), 2 * m + 1, "Riesz-Caputo")?;
    let coeffs = StencilCoefficients::from_spec(spec);
    let left = caputo_left_from_fprime(spec, &fprime[..=m])?;
    let right = caputo_right_from_fprime(spec, &fprime[m..])?;
    Ok(coeffs.riesz_prefactor * (left - right))
}

/// Classical inner difference used to approximate `f'` at the quadrature
/// nodes before the fractional weights are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerScheme {
    Forward,
    Central,
    Backward,
}

/// Riesz-Caputo derivative of a sampled function.
///
/// `samples` holds `f` at the `2m + 3` equispaced nodes centred on the
/// evaluation point (spacing `h`, centre at index `m + 1`); the extra node
/// on each side feeds the chosen inner difference at the outermost
/// quadrature nodes.
pub fn rc_derivative_of_samples(
    spec: &FractionalOperatorSpec,
    samples: &[f64],
    scheme: InnerScheme,
) -> Result<f64> {
    let m = spec.m();
    check_len(samples.len(), 2 * m + 3, "sampled Riesz-Caputo")?;
    let h = spec.step();
    let fprime: Vec<f64> = (0..=2 * m)
        .map(|k| {
            let s = k + 1; // sample index of quadrature node k
            match scheme {
                InnerScheme::Forward => (samples[s + 1] - samples[s]) / h,
                InnerScheme::Central => (samples[s + 1] - samples[s - 1]) / (2.0 * h),
                InnerScheme::Backward => (samples[s] - samples[s - 1]) / h,
            }
        })
        .collect();
    rc_derivative_from_fprime(spec, &fprime)
}
