//! Verification battery: kernel oracles, kinematics identities, and
//! plasticity consistency, printed as a pass/fail table.
//!
//! `perturb_weights` multiplies the quadrature weights used by the
//! weight-level checks by `1 + x`; any nonzero perturbation must trip the
//! battery, which doubles as a self-test of the harness.

use crate::Failure;
use fracplast::gamma::gamma;
use fracplast::kernel::{
    caputo_left_weights, caputo_right_weights, rc_derivative_of_samples, FractionalOperatorSpec,
    InnerScheme, StencilCoefficients,
};
use fracplast::kinematics::{
    composite_tensors, objectivity_check, rigid_motion_deviation,
    rigid_motion_deviation_with_prefactor, strain_measures,
};
use fracplast::plasticity::{update_point, MaterialParams, PointState};
use fracplast::{classical_reference, run, RunConfig};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

const ORDER_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const RESOLUTIONS: [usize; 4] = [2, 4, 10, 100];

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub deviation: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

#[derive(Debug)]
pub struct BatteryReport {
    pub checks: Vec<CheckResult>,
}

impl BatteryReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  deviation {:>12.4e}  tolerance {:>9.1e}  {}",
                check.name,
                check.deviation,
                check.tolerance,
                if check.passed() { "PASS" } else { "FAIL" },
            );
        }
        let _ = writeln!(
            out,
            "{}: {} of {} checks passed",
            if self.all_passed() { "OK" } else { "FAILED" },
            self.checks.iter().filter(|c| c.passed()).count(),
            self.checks.len()
        );
        out
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("check,deviation,tolerance,status\n");
        for check in &self.checks {
            let _ = writeln!(
                out,
                "{},{:e},{:e},{}",
                check.name,
                check.deviation,
                check.tolerance,
                if check.passed() { "pass" } else { "fail" }
            );
        }
        out
    }
}

fn spec(alpha: f64, ell: f64, m: usize) -> FractionalOperatorSpec {
    FractionalOperatorSpec::new(alpha, ell, m).expect("battery specs are valid")
}

/// Σ w_j of one side against the exact constant-integrand value
/// (2 - α) m^{1-α}.
fn weight_sum_identity(perturb: f64) -> CheckResult {
    let mut worst = 0.0_f64;
    for &alpha in &ORDER_GRID {
        for &m in &RESOLUTIONS {
            let w = caputo_left_weights(&spec(alpha, 1.0, m));
            let sum: f64 = w.iter().map(|v| v * (1.0 + perturb)).sum();
            let expected = (2.0 - alpha) * (m as f64).powf(1.0 - alpha);
            worst = worst.max((sum - expected).abs() / expected);
        }
    }
    CheckResult {
        name: "kernel weight-sum identity",
        deviation: worst,
        tolerance: 1e-10,
    }
}

/// ℓ^{α-1} RC of the identity map equals 1 for every order/resolution.
fn affine_exactness(perturb: f64) -> CheckResult {
    let mut worst = 0.0_f64;
    for &alpha in &ORDER_GRID {
        for &m in &RESOLUTIONS {
            let sp = spec(alpha, 0.42, m);
            let coeffs = StencilCoefficients::from_spec(&sp);
            let left: f64 = caputo_left_weights(&sp)
                .iter()
                .map(|w| w * (1.0 + perturb))
                .sum();
            let right: f64 = caputo_right_weights(&sp)
                .iter()
                .map(|w| w * (1.0 + perturb))
                .sum();
            let rc = coeffs.riesz_prefactor * coeffs.trapezoid_scale * (left + right);
            worst = worst.max((sp.ell().powf(alpha - 1.0) * rc - 1.0).abs());
        }
    }
    CheckResult {
        name: "kernel affine exactness",
        deviation: worst,
        tolerance: 1e-10,
    }
}

fn constant_annihilation() -> CheckResult {
    let mut worst = 0.0_f64;
    for &alpha in &ORDER_GRID {
        let sp = spec(alpha, 0.3, 4);
        let samples = vec![3.7; 11];
        let rc = rc_derivative_of_samples(&sp, &samples, InnerScheme::Central).unwrap();
        worst = worst.max(rc.abs());
    }
    CheckResult {
        name: "kernel annihilates constants",
        deviation: worst,
        tolerance: 0.0,
    }
}

fn caputo_linear_closed_form() -> CheckResult {
    // Left Caputo derivative of f(t) = t equals (X-a)^{1-α}/Γ(2-α) at
    // every resolution (the quadrature is exact on constant integrands).
    let mut worst = 0.0_f64;
    for &alpha in &ORDER_GRID[..9] {
        for &m in &RESOLUTIONS {
            let sp = spec(alpha, 0.7, m);
            let got = fracplast::kernel::caputo_left_from_fprime(&sp, &vec![1.0; m + 1]).unwrap();
            let expected = 0.7_f64.powf(1.0 - alpha) / gamma(2.0 - alpha);
            worst = worst.max((got - expected).abs() / expected);
        }
    }
    CheckResult {
        name: "left Caputo of identity (closed form)",
        deviation: worst,
        tolerance: 1e-12,
    }
}

fn alpha_one_kernel_collapse() -> CheckResult {
    let mut worst = 0.0_f64;
    for m in [2usize, 5, 10] {
        let sp = spec(1.0, 0.4, m);
        let h = sp.step();
        let samples: Vec<f64> = (0..2 * m + 3)
            .map(|s| ((s as f64 - (m + 1) as f64) * h).sin())
            .collect();
        let rc = rc_derivative_of_samples(&sp, &samples, InnerScheme::Central).unwrap();
        let classical = (samples[m + 2] - samples[m]) / (2.0 * h);
        worst = worst.max((rc - classical).abs());
    }
    CheckResult {
        name: "alpha = 1 kernel collapse",
        deviation: worst,
        tolerance: 1e-12,
    }
}

fn rotation(theta: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()])
}

fn rigid_body_checks(rng: &mut ChaCha8Rng) -> CheckResult {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let alpha = rng.gen_range(0.05..=1.0);
        let m = *[2usize, 3, 4, 10].get(rng.gen_range(0..4)).unwrap();
        let dev = rigid_motion_deviation(&rotation(theta), &spec(alpha, 0.3, m)).unwrap();
        worst = worst.max(dev);
    }
    CheckResult {
        name: "rigid-body rotation (ell = L/2)",
        deviation: worst,
        tolerance: 1e-10,
    }
}

fn length_scale_necessity(rng: &mut ChaCha8Rng) -> CheckResult {
    // Decoupling the prefactor from the half-interval scales the gradient
    // by (prefactor/ell)^{α-1}; the measured deviation must match.
    let mut worst = 0.0_f64;
    for _ in 0..6 {
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let alpha = rng.gen_range(0.1..0.95);
        let ratio = rng.gen_range(1.2..3.0);
        let sp = spec(alpha, 0.3, 2);
        let dev =
            rigid_motion_deviation_with_prefactor(&rotation(theta), &sp, ratio * sp.ell()).unwrap();
        let expected = (ratio.powf(alpha - 1.0) - 1.0).abs();
        worst = worst.max((dev - expected).abs());
    }
    CheckResult {
        name: "length-scale necessity (ell = L/2 breaks otherwise)",
        deviation: worst,
        tolerance: 1e-12,
    }
}

fn random_invertible(rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    loop {
        let m: DMatrix<f64> = DMatrix::from_fn(2, 2, |_, _| rng.gen_range(-1.0..1.0))
            + DMatrix::identity(2, 2) * rng.gen_range(0.5..1.5);
        if m.determinant().abs() > 0.2 {
            return m;
        }
    }
}

fn objectivity_battery(rng: &mut ChaCha8Rng) -> CheckResult {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let material = random_invertible(rng);
        let spatial = random_invertible(rng);
        let classical = random_invertible(rng);
        let tensors = composite_tensors(&material, &spatial, &classical).unwrap();
        let q = rotation(rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI));
        let report = objectivity_check(&tensors, &q).unwrap();
        worst = worst.max(report.max_residual());
    }
    CheckResult {
        name: "objectivity transformation residuals",
        deviation: worst,
        tolerance: 1e-12,
    }
}

fn strain_round_trip(rng: &mut ChaCha8Rng) -> CheckResult {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let f = random_invertible(rng);
        let set = strain_measures(&f).unwrap();
        let pulled = f.transpose() * &set.almansi * &f;
        let drift = (&pulled - &set.green)
            .iter()
            .fold(0.0_f64, |a, &v| a.max(v.abs()));
        worst = worst.max(drift);
    }
    CheckResult {
        name: "strain pull-back round trip",
        deviation: worst,
        tolerance: 1e-12,
    }
}

fn plasticity_kkt(rng: &mut ChaCha8Rng) -> CheckResult {
    let params = MaterialParams::new(205e9, 1.2e9).unwrap();
    let tol = 1e-10 * params.yield_stress;
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let steps = rng.gen_range(1..30);
        let mut state = PointState::default();
        let mut mirrored = PointState::default();
        for _ in 0..steps {
            let d = rng.gen_range(-4e-3..4e-3);
            state = update_point(&state, d, &params);
            mirrored = update_point(&mirrored, -d, &params);
            let f = state.yield_value(&params);
            worst = worst.max(-state.dgamma_last); // dgamma >= 0
            worst = worst.max(f); // f <= 0
            worst = worst.max((state.dgamma_last * f).abs()); // complementarity
            worst = worst.max((mirrored.sigma + state.sigma).abs());
            worst = worst.max((mirrored.eps_plastic + state.eps_plastic).abs());
        }
    }
    CheckResult {
        name: "plasticity KKT + sign equivariance (1000 histories)",
        deviation: worst,
        tolerance: tol,
    }
}

fn alpha_one_run_equivalence() -> CheckResult {
    let mut config = RunConfig::baseline(1.0, 0.2, 2);
    config.n_steps = 10;
    let fractional = run(&config).unwrap();
    let classical = classical_reference(&config).unwrap();
    let mut worst = 0.0_f64;
    for (a, b) in fractional.states.iter().zip(&classical.states) {
        for i in 0..a.n_nodes() {
            worst = worst.max((a.u[i] - b.u[i]).abs());
            worst = worst.max((a.eps_plastic[i] - b.eps_plastic[i]).abs());
            worst = worst.max((a.sigma[i] - b.sigma[i]).abs() / 1e9);
        }
    }
    CheckResult {
        name: "alpha = 1 full-run equivalence",
        deviation: worst,
        tolerance: 1e-10,
    }
}

/// Runs the whole battery. `perturb_weights` feeds the fault-injection
/// self-test; 0.0 is the production setting.
pub fn run_battery(perturb_weights: f64) -> BatteryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let checks = vec![
        weight_sum_identity(perturb_weights),
        affine_exactness(perturb_weights),
        constant_annihilation(),
        caputo_linear_closed_form(),
        alpha_one_kernel_collapse(),
        rigid_body_checks(&mut rng),
        length_scale_necessity(&mut rng),
        objectivity_battery(&mut rng),
        strain_round_trip(&mut rng),
        plasticity_kkt(&mut rng),
        alpha_one_run_equivalence(),
    ];
    BatteryReport { checks }
}

/// Battery entry point with table output; `Err` carries exit code 3.
pub fn verify(perturb_weights: f64, report_csv: Option<&std::path::Path>) -> Result<(), Failure> {
    let report = run_battery(perturb_weights);
    print!("{}", report.table());
    if let Some(path) = report_csv {
        std::fs::write(path, report.csv())
            .map_err(|e| Failure::Config(format!("cannot write report: {e}")))?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name)
            .collect();
        Err(Failure::Verification(format!(
            "{} check(s) failed: {}",
            failed.len(),
            failed.join("; ")
        )))
    }
}
