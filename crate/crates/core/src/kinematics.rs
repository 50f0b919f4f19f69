//! Numerical verification lab for nonlocal fractional kinematics in 1D
//! and 2D: fractional deformation gradients of motions, rigid-body and
//! objectivity identities, strain measures, and the α = 1 collapse to
//! classical continuum mechanics.
//!
//! Fractional gradients are computed axis by axis: the partial
//! Riesz-Caputo derivative along each coordinate with the others frozen,
//! times the dimensional prefactor `ℓ^{α-1}`. Motions are callables
//! sampled on demand, so the quadrature always sees exact nodes.

use crate::error::{Error, Result};
use crate::kernel::{rc_derivative_of_samples, FractionalOperatorSpec, InnerScheme};
use nalgebra::{DMatrix, DVector};

/// A point map `R^d -> R^d` sampled on demand.
pub type PointFn = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A motion of the body: the forward map `φ` and, when available, its
/// inverse `φ⁻¹` for spatial-side operators.
pub struct Motion {
    dim: usize,
    forward: PointFn,
    inverse: Option<PointFn>,
}

impl Motion {
    pub fn new(dim: usize, forward: PointFn) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::ContractViolation(format!(
                "motions are supported in 1 or 2 dimensions, got {dim}"
            )));
        }
        Ok(Self {
            dim,
            forward,
            inverse: None,
        })
    }

    pub fn with_inverse(dim: usize, forward: PointFn, inverse: PointFn) -> Result<Self> {
        let mut motion = Self::new(dim, forward)?;
        motion.inverse = Some(inverse);
        Ok(motion)
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(dim, Box::new(|x: &[f64]| x.to_vec())).expect("dim checked by caller")
    }

    /// Affine motion `x = M X + c`; the inverse is attached when `M` is
    /// invertible.
    pub fn linear(matrix: DMatrix<f64>, offset: DVector<f64>) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || offset.len() != dim {
            return Err(Error::ContractViolation(
                "linear motion needs a square matrix and a matching offset".into(),
            ));
        }
        let m = matrix.clone();
        let c = offset.clone();
        let forward: PointFn = Box::new(move |x: &[f64]| {
            let v = &m * DVector::from_column_slice(x) + &c;
            v.as_slice().to_vec()
        });
        match matrix.clone().try_inverse() {
            Some(inv) => {
                let inverse: PointFn = Box::new(move |x: &[f64]| {
                    let v = &inv * (DVector::from_column_slice(x) - &offset);
                    v.as_slice().to_vec()
                });
                Self::with_inverse(dim, forward, inverse)
            }
            None => Self::new(dim, forward),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self, x: &[f64]) -> Vec<f64> {
        (self.forward)(x)
    }

    pub fn map_inverse(&self, x: &[f64]) -> Option<Vec<f64>> {
        self.inverse.as_ref().map(|f| f(x))
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }
}

/// Fractional gradient of an arbitrary vector field: component `(a, A)` is
/// `prefactor_ell^{α-1}` times the partial RC derivative of component `a`
/// along axis `A` over `[point_A - ℓ, point_A + ℓ]`.
pub fn fractional_field_gradient(
    field: &dyn Fn(&[f64]) -> Vec<f64>,
    dim: usize,
    point: &[f64],
    spec: &FractionalOperatorSpec,
    prefactor_ell: f64,
) -> Result<DMatrix<f64>> {
    if point.len() != dim {
        return Err(Error::ContractViolation(format!(
            "point has {} coordinates for a {dim}-dimensional field",
            point.len()
        )));
    }
    if !(prefactor_ell > 0.0) {
        return Err(Error::ContractViolation(format!(
            "length-scale prefactor must be positive, got {prefactor_ell}"
        )));
    }
    let m = spec.m();
    let h = spec.step();
    let scale = prefactor_ell.powf(spec.alpha() - 1.0);
    let mut gradient = DMatrix::zeros(dim, dim);
    let mut shifted = point.to_vec();
    for axis in 0..dim {
        // 2m + 3 samples feed the central inner difference at every
        // quadrature node.
        let mut component_samples = vec![Vec::with_capacity(2 * m + 3); dim];
        for k in -(m as isize + 1)..=(m as isize + 1) {
            shifted.copy_from_slice(point);
            shifted[axis] += k as f64 * h;
            let value = field(&shifted);
            if value.len() != dim {
                return Err(Error::ContractViolation(format!(
                    "field returned {} components in dimension {dim}",
                    value.len()
                )));
            }
            for (a, v) in value.iter().enumerate() {
                component_samples[a].push(*v);
            }
        }
        for a in 0..dim {
            let rc = rc_derivative_of_samples(spec, &component_samples[a], InnerScheme::Central)?;
            gradient[(a, axis)] = scale * rc;
        }
    }
    Ok(gradient)
}

/// Material fractional deformation gradient `F̃_X = ℓ^{α-1} D^α φ` at a
/// material point; the interval half-length and the prefactor share the
/// operator's length scale (isotropic nonlocality).
pub fn fractional_deformation_gradient(
    motion: &Motion,
    point: &[f64],
    spec: &FractionalOperatorSpec,
) -> Result<DMatrix<f64>> {
    fractional_field_gradient(&|x| motion.map(x), motion.dim(), point, spec, spec.ell())
}

/// Spatial fractional deformation gradient `F̃_x = ℓ^{α-1} D^α φ⁻¹` at a
/// spatial point; requires the inverse motion.
pub fn spatial_fractional_deformation_gradient(
    motion: &Motion,
    spatial_point: &[f64],
    spec: &FractionalOperatorSpec,
) -> Result<DMatrix<f64>> {
    if !motion.has_inverse() {
        return Err(Error::ContractViolation(
            "spatial gradient needs the inverse motion".into(),
        ));
    }
    fractional_field_gradient(
        &|x| motion.map_inverse(x).expect("inverse checked above"),
        motion.dim(),
        spatial_point,
        spec,
        spec.ell(),
    )
}

fn invert(m: &DMatrix<f64>, name: &str) -> Result<DMatrix<f64>> {
    m.clone()
        .try_inverse()
        .ok_or_else(|| Error::SingularTensor(name.to_string()))
}

/// Determinants of the deformation-gradient family.
#[derive(Debug, Clone, PartialEq)]
pub struct Jacobians {
    pub classical: f64,
    pub material: f64,
    pub spatial: f64,
    pub composite: f64,
    pub composite_material: f64,
    pub composite_spatial: f64,
}

/// The classical gradient, both fractional gradients, and the three
/// composite tensors built from them:
/// `composite = F̃_X F⁻¹ F̃_x⁻¹` (maps fractional material line elements to
/// fractional spatial ones), `composite_spatial = F̃_x F`, and
/// `composite_material = F̃_X F⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationTensors {
    pub classical: DMatrix<f64>,
    pub material: DMatrix<f64>,
    pub spatial: DMatrix<f64>,
    pub composite: DMatrix<f64>,
    pub composite_material: DMatrix<f64>,
    pub composite_spatial: DMatrix<f64>,
    pub jacobians: Jacobians,
}

/// Builds all composite tensors and their determinants from the material
/// and spatial fractional gradients plus the classical gradient.
pub fn composite_tensors(
    material: &DMatrix<f64>,
    spatial: &DMatrix<f64>,
    classical: &DMatrix<f64>,
) -> Result<DeformationTensors> {
    let classical_inv = invert(classical, "classical deformation gradient")?;
    let spatial_inv = invert(spatial, "spatial fractional deformation gradient")?;
    let composite = material * &classical_inv * &spatial_inv;
    let composite_material = material * &classical_inv;
    let composite_spatial = spatial * classical;
    let jacobians = Jacobians {
        classical: classical.determinant(),
        material: material.determinant(),
        spatial: spatial.determinant(),
        composite: composite.determinant(),
        composite_material: composite_material.determinant(),
        composite_spatial: composite_spatial.determinant(),
    };
    Ok(DeformationTensors {
        classical: classical.clone(),
        material: material.clone(),
        spatial: spatial.clone(),
        composite,
        composite_material,
        composite_spatial,
        jacobians,
    })
}

fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .fold(0.0_f64, |a, &s| a.max(s))
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |a, &v| a.max(v.abs()))
}

/// Operator-norm deviation of the fractional gradient of the rigid motion
/// `φ(X) = R X` from `R` itself, with the length scale tied to half the
/// operator interval. Exact quadrature on affine motions keeps this at
/// rounding level.
pub fn rigid_motion_deviation(
    rotation: &DMatrix<f64>,
    spec: &FractionalOperatorSpec,
) -> Result<f64> {
    rigid_motion_deviation_with_prefactor(rotation, spec, spec.ell())
}

/// Same deviation with a decoupled prefactor length: choosing
/// `prefactor_ell != ℓ` breaks the pure rotation by the scalar factor
/// `(prefactor_ell/ℓ)^{α-1}`.
pub fn rigid_motion_deviation_with_prefactor(
    rotation: &DMatrix<f64>,
    spec: &FractionalOperatorSpec,
    prefactor_ell: f64,
) -> Result<f64> {
    let dim = rotation.nrows();
    let motion = Motion::linear(rotation.clone(), DVector::zeros(dim))?;
    let origin = vec![0.0; dim];
    let gradient =
        fractional_field_gradient(&|x| motion.map(x), dim, &origin, spec, prefactor_ell)?;
    Ok(spectral_norm(&(gradient - rotation)))
}

/// Residuals of the six transformation rules under a superposed rigid
/// motion `Q`: the three primitive rules define the starred tensors, the
/// three composite rules are then checked against recomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectivityReport {
    /// `F* = Q F`
    pub classical: f64,
    /// `F̃_X* = Q F̃_X`
    pub material: f64,
    /// `F̃_x* = F̃_x Q⁻¹`
    pub spatial: f64,
    /// `αF* = Q αF`
    pub composite: f64,
    /// `αF_X* = Q αF_X Qᵀ`
    pub composite_material: f64,
    /// `αF_x* = αF_x`
    pub composite_spatial: f64,
}

impl ObjectivityReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.classical,
            self.material,
            self.spatial,
            self.composite,
            self.composite_material,
            self.composite_spatial,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Checks the objectivity transformations for a proper orthogonal `Q`.
pub fn objectivity_check(
    tensors: &DeformationTensors,
    q: &DMatrix<f64>,
) -> Result<ObjectivityReport> {
    let dim = q.nrows();
    let identity = DMatrix::identity(dim, dim);
    if max_abs(&(q.transpose() * q - &identity)) > 1e-10 {
        return Err(Error::ContractViolation(
            "objectivity check requires an orthogonal Q".into(),
        ));
    }
    if (q.determinant() - 1.0).abs() > 1e-10 {
        return Err(Error::ContractViolation(
            "objectivity check requires det Q = +1".into(),
        ));
    }
    let q_t = q.transpose();

    let classical_star = q * &tensors.classical;
    let material_star = q * &tensors.material;
    let spatial_star = &tensors.spatial * &q_t;

    let classical_star_inv = invert(&classical_star, "starred classical gradient")?;
    let spatial_star_inv = invert(&spatial_star, "starred spatial gradient")?;
    let composite_star = &material_star * &classical_star_inv * &spatial_star_inv;
    let composite_material_star = &material_star * &classical_star_inv;
    let composite_spatial_star = &spatial_star * &classical_star;

    Ok(ObjectivityReport {
        classical: max_abs(&(&classical_star - q * &tensors.classical)),
        material: max_abs(&(&material_star - q * &tensors.material)),
        spatial: max_abs(&(&spatial_star - &tensors.spatial * &q_t)),
        composite: max_abs(&(&composite_star - q * &tensors.composite)),
        composite_material: max_abs(
            &(&composite_material_star - q * &tensors.composite_material * &q_t),
        ),
        composite_spatial: max_abs(&(&composite_spatial_star - &tensors.composite_spatial)),
    })
}

/// Strain measures derived from one deformation-gradient-like tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct StrainSet {
    /// Green-Lagrange type, `E = (F⋄ᵀ F⋄ - I)/2`.
    pub green: DMatrix<f64>,
    /// Euler-Almansi type, `e = (i - F⋄⁻ᵀ F⋄⁻¹)/2`.
    pub almansi: DMatrix<f64>,
    /// Right Cauchy-Green type, `C = F⋄ᵀ F⋄`.
    pub right_cauchy_green: DMatrix<f64>,
    /// Inverse left Cauchy-Green (Finger) type, `c = F⋄⁻ᵀ F⋄⁻¹`.
    pub finger_inverse: DMatrix<f64>,
    /// Infinitesimal form, `(F⋄ + F⋄ᵀ)/2 - I`.
    pub infinitesimal: DMatrix<f64>,
}

/// Builds the strain family from `F⋄` and verifies the pull-back round
/// trip `F⋄ᵀ e F⋄ = E` internally.
pub fn strain_measures(f_diamond: &DMatrix<f64>) -> Result<StrainSet> {
    let dim = f_diamond.nrows();
    let identity = DMatrix::identity(dim, dim);
    let inv = invert(f_diamond, "strain-generating tensor")?;
    let green = 0.5 * (f_diamond.transpose() * f_diamond - &identity);
    let almansi = 0.5 * (&identity - inv.transpose() * &inv);
    let right_cauchy_green = f_diamond.transpose() * f_diamond;
    let finger_inverse = inv.transpose() * &inv;
    let infinitesimal = 0.5 * (f_diamond + f_diamond.transpose()) - &identity;

    let pulled_back = f_diamond.transpose() * &almansi * f_diamond;
    let drift = max_abs(&(&pulled_back - &green));
    if drift > 1e-10 * (1.0 + max_abs(&green)) {
        return Err(Error::ContractViolation(format!(
            "pull-back round trip drifted by {drift:.3e}; tensor too ill-conditioned"
        )));
    }
    Ok(StrainSet {
        green,
        almansi,
        right_cauchy_green,
        finger_inverse,
        infinitesimal,
    })
}

/// Maps a material volume element and a material surface element through
/// `F⋄`: `dv = det F⋄ dV`, `ds = det F⋄ · F⋄⁻ᵀ dS`.
pub fn volume_surface_map(
    f_diamond: &DMatrix<f64>,
    volume_element: f64,
    surface_element: &DVector<f64>,
) -> Result<(f64, DVector<f64>)> {
    let det = f_diamond.determinant();
    let inv = invert(f_diamond, "volume/surface map tensor")?;
    let mapped_surface = det * (inv.transpose() * surface_element);
    Ok((det * volume_element, mapped_surface))
}

/// Infinitesimal fractional strain of a displacement field: the symmetric
/// part of `ℓ^{α-1} D^α U` at the point.
pub fn infinitesimal_fractional_strain(
    displacement: &dyn Fn(&[f64]) -> Vec<f64>,
    dim: usize,
    point: &[f64],
    spec: &FractionalOperatorSpec,
) -> Result<DMatrix<f64>> {
    let gradient = fractional_field_gradient(displacement, dim, point, spec, spec.ell())?;
    Ok(0.5 * (&gradient + gradient.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn spec(alpha: f64, ell: f64, m: usize) -> FractionalOperatorSpec {
        FractionalOperatorSpec::new(alpha, ell, m).unwrap()
    }

    fn rotation(theta: f64) -> DMatrix<f64> {
        DMatrix::from_row_slice(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()])
    }

    /// Invertible planar motion with a closed-form inverse:
    /// x = (X + 0.1 Y², Y + 0.2 X).
    fn shear_motion() -> Motion {
        Motion::with_inverse(
            2,
            Box::new(|p: &[f64]| vec![p[0] + 0.1 * p[1] * p[1], p[1] + 0.2 * p[0]]),
            Box::new(|x: &[f64]| {
                // Solve Y + 0.2 (x0 - 0.1 Y²) = x1 for Y, then X follows.
                let a = -0.02;
                let b = 1.0;
                let c = 0.2 * x[0] - x[1];
                let y = (-b + (b * b - 4.0 * a * c).sqrt()) / (2.0 * a);
                vec![x[0] - 0.1 * y * y, y]
            }),
        )
        .unwrap()
    }

    #[test]
    fn shear_motion_inverse_actually_inverts() {
        let motion = shear_motion();
        for p in [[0.3, -0.2], [0.0, 0.0], [-0.4, 0.5]] {
            let x = motion.map(&p);
            let back = motion.map_inverse(&x).unwrap();
            assert_abs_diff_eq!(back[0], p[0], epsilon = 1e-12);
            assert_abs_diff_eq!(back[1], p[1], epsilon = 1e-12);
        }
    }

    #[test]
    fn identity_motion_has_identity_gradient() {
        for alpha in [0.2, 0.5, 1.0] {
            let motion = Motion::identity(2);
            let g = fractional_deformation_gradient(&motion, &[0.1, -0.3], &spec(alpha, 0.25, 3))
                .unwrap();
            assert_abs_diff_eq!(
                max_abs(&(g - DMatrix::identity(2, 2))),
                0.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn affine_motions_are_recovered_exactly() {
        // phi(X) = M X + c: the gradient equals M for every order and
        // resolution when the prefactor matches the half-interval.
        let m_mat = DMatrix::from_row_slice(2, 2, &[1.3, -0.4, 0.25, 0.8]);
        let offset = DVector::from_column_slice(&[0.7, -1.1]);
        let motion = Motion::linear(m_mat.clone(), offset).unwrap();
        for alpha in [0.1, 0.45, 0.9, 1.0] {
            for m in [2usize, 4, 10] {
                let g =
                    fractional_deformation_gradient(&motion, &[0.6, -0.2], &spec(alpha, 0.25, m))
                        .unwrap();
                assert!(
                    max_abs(&(g - m_mat.clone())) <= 1e-10,
                    "alpha={alpha}, m={m}"
                );
            }
        }
    }

    #[test]
    fn rotation_is_recovered_when_ell_is_half_the_interval() {
        for alpha in [0.1, 0.5, 0.9, 1.0] {
            let r = rotation(30.0_f64.to_radians());
            let dev = rigid_motion_deviation(&r, &spec(alpha, 0.3, 2)).unwrap();
            assert!(dev <= 1e-10, "alpha={alpha}: deviation {dev}");
        }
    }

    #[test]
    fn wrong_prefactor_breaks_the_rotation_by_the_predicted_factor() {
        // prefactor = L = 2ℓ gives |2^{α-1} - 1| in operator norm.
        for alpha in [0.3, 0.5, 0.8] {
            let sp = spec(alpha, 0.3, 2);
            let r = rotation(30.0_f64.to_radians());
            let dev = rigid_motion_deviation_with_prefactor(&r, &sp, sp.interval_length()).unwrap();
            let expected = (2.0_f64.powf(alpha - 1.0) - 1.0).abs();
            assert_abs_diff_eq!(dev, expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn spatial_gradient_of_a_rotation_is_its_inverse() {
        let theta = 30.0_f64.to_radians();
        let r = rotation(theta);
        let motion = Motion::linear(r.clone(), DVector::zeros(2)).unwrap();
        let sp = spec(0.5, 0.3, 2);
        let g = spatial_fractional_deformation_gradient(&motion, &[0.2, 0.1], &sp).unwrap();
        let r_inv = rotation(-theta);
        assert_abs_diff_eq!(max_abs(&(g - r_inv)), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn alpha_one_matches_the_classical_gradient_within_truncation() {
        // Smooth nonlinear motion; central differences are second order.
        let motion = Motion::new(
            1,
            Box::new(|p: &[f64]| vec![p[0] + 0.1 * p[0] * p[0] * p[0]]),
        )
        .unwrap();
        let sp = spec(1.0, 0.01, 2);
        let x = 0.4;
        let g = fractional_deformation_gradient(&motion, &[x], &sp).unwrap();
        let exact = 1.0 + 0.3 * x * x;
        assert_abs_diff_eq!(g[(0, 0)], exact, epsilon = 1e-5);
    }

    #[test]
    fn composite_tensors_collapse_at_alpha_one() {
        let f = DMatrix::from_row_slice(2, 2, &[1.2, 0.3, -0.1, 0.9]);
        let f_inv = f.clone().try_inverse().unwrap();
        let t = composite_tensors(&f, &f_inv, &f).unwrap();
        let identity = DMatrix::identity(2, 2);
        assert_abs_diff_eq!(max_abs(&(&t.composite - &f)), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(
            max_abs(&(&t.composite_spatial - &identity)),
            0.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            max_abs(&(&t.composite_material - &identity)),
            0.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            t.jacobians.composite,
            t.jacobians.classical,
            epsilon = 1e-13
        );
    }

    #[test]
    fn rigid_rotation_gradients_are_mutually_inverse() {
        let theta = 40.0_f64.to_radians();
        let r = rotation(theta);
        let motion = Motion::linear(r.clone(), DVector::zeros(2)).unwrap();
        let sp = spec(0.5, 0.3, 2);
        let material = fractional_deformation_gradient(&motion, &[0.0, 0.0], &sp).unwrap();
        let spatial = spatial_fractional_deformation_gradient(&motion, &[0.0, 0.0], &sp).unwrap();
        let identity = DMatrix::identity(2, 2);
        assert_abs_diff_eq!(
            max_abs(&(&material * &spatial - &identity)),
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            max_abs(&(&spatial * &material - &identity)),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn nonlinear_motion_gradients_do_not_invert_each_other() {
        // 1D motion with curvature: the product F̃_x F̃_X measurably
        // deviates from the identity at fractional order.
        let motion = Motion::with_inverse(
            1,
            Box::new(|p: &[f64]| vec![p[0] + 0.1 * p[0] * p[0]]),
            Box::new(|x: &[f64]| vec![((1.0 + 0.4 * x[0]).sqrt() - 1.0) / 0.2]),
        )
        .unwrap();
        let sp = spec(0.5, 0.2, 2);
        let point = 0.3;
        let spatial_point = motion.map(&[point]);
        let material = fractional_deformation_gradient(&motion, &[point], &sp).unwrap();
        let spatial =
            spatial_fractional_deformation_gradient(&motion, &spatial_point, &sp).unwrap();
        let product = &spatial * &material;
        let deviation = (product[(0, 0)] - 1.0).abs();
        assert!(deviation > 1e-4, "deviation {deviation} unexpectedly small");
    }

    #[test]
    fn objectivity_residuals_vanish_for_numerically_built_tensors() {
        let motion = shear_motion();
        let sp = spec(0.5, 0.1, 2);
        let point = [0.25, -0.15];
        let spatial_point = motion.map(&point);
        let material = fractional_deformation_gradient(&motion, &point, &sp).unwrap();
        let spatial =
            spatial_fractional_deformation_gradient(&motion, &spatial_point, &sp).unwrap();
        // Classical gradient by central difference (exact here up to h²;
        // only algebraic consistency matters for the residuals).
        let h = 1e-6;
        let classical = DMatrix::from_fn(2, 2, |a, b| {
            let mut plus = point.to_vec();
            let mut minus = point.to_vec();
            plus[b] += h;
            minus[b] -= h;
            (motion.map(&plus)[a] - motion.map(&minus)[a]) / (2.0 * h)
        });
        let tensors = composite_tensors(&material, &spatial, &classical).unwrap();
        for theta in [0.0, 45.0_f64.to_radians(), 90.0_f64.to_radians()] {
            let report = objectivity_check(&tensors, &rotation(theta)).unwrap();
            assert!(
                report.max_residual() <= 1e-12,
                "theta={theta}: residuals {report:?}"
            );
        }
    }

    #[test]
    fn objectivity_rejects_non_orthogonal_q() {
        let f = DMatrix::from_row_slice(2, 2, &[1.1, 0.0, 0.0, 0.9]);
        let t = composite_tensors(&f, &f.clone().try_inverse().unwrap(), &f).unwrap();
        let skew = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.0, 1.0]);
        assert!(objectivity_check(&t, &skew).is_err());
    }

    #[test]
    fn strain_measures_of_identity_vanish() {
        let set = strain_measures(&DMatrix::identity(2, 2)).unwrap();
        assert_abs_diff_eq!(max_abs(&set.green), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(max_abs(&set.almansi), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            max_abs(&(set.right_cauchy_green - DMatrix::identity(2, 2))),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn strain_measures_of_a_diagonal_stretch() {
        let f = DMatrix::from_row_slice(2, 2, &[1.2, 0.0, 0.0, 1.0]);
        let set = strain_measures(&f).unwrap();
        assert_abs_diff_eq!(set.green[(0, 0)], 0.22, epsilon = 1e-15);
        assert_abs_diff_eq!(set.green[(1, 1)], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            set.almansi[(0, 0)],
            0.5 * (1.0 - 1.0 / 1.44),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(set.almansi[(1, 1)], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rigid_rotation_produces_no_strain() {
        let set = strain_measures(&rotation(25.0_f64.to_radians())).unwrap();
        assert_abs_diff_eq!(max_abs(&set.green), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(max_abs(&set.almansi), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn strain_round_trip_holds_for_generic_tensors() {
        let f = DMatrix::from_row_slice(2, 2, &[1.3, 0.4, -0.2, 0.8]);
        let set = strain_measures(&f).unwrap();
        let pulled = f.transpose() * &set.almansi * &f;
        assert_abs_diff_eq!(max_abs(&(pulled - set.green)), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn volume_and_surface_elements_map_as_expected() {
        let identity = DMatrix::identity(2, 2);
        let ds = DVector::from_column_slice(&[1.0, 0.0]);
        let (dv, mapped) = volume_surface_map(&identity, 1.0, &ds).unwrap();
        assert_eq!(dv, 1.0);
        assert_abs_diff_eq!((mapped - &ds).norm(), 0.0, epsilon = 1e-15);

        let f = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        let (dv, mapped) = volume_surface_map(&f, 1.0, &ds).unwrap();
        assert_abs_diff_eq!(dv, 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(mapped[0], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(mapped[1], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn infinitesimal_strain_of_zero_displacement_vanishes() {
        let sp = spec(0.5, 0.2, 2);
        let eps = infinitesimal_fractional_strain(&|_: &[f64]| vec![0.0, 0.0], 2, &[0.1, 0.1], &sp)
            .unwrap();
        assert_abs_diff_eq!(max_abs(&eps), 0.0, epsilon = 1e-16);
    }

    #[test]
    fn infinitesimal_strain_of_linear_displacement_is_the_slope() {
        for alpha in [0.2, 0.6, 1.0] {
            let sp = spec(alpha, 0.2, 4);
            let c = 1.3e-3;
            let eps =
                infinitesimal_fractional_strain(&move |p: &[f64]| vec![c * p[0]], 1, &[0.5], &sp)
                    .unwrap();
            assert_abs_diff_eq!(eps[(0, 0)], c, epsilon = 1e-15);
        }
    }

    #[test]
    fn infinitesimal_strain_collapses_to_the_classical_form_at_alpha_one() {
        // U = (a x + b y, c y): classical small strain is
        // [[a, b/2], [b/2, c]].
        let (a, b, c) = (1.0e-3, 4.0e-4, -2.0e-4);
        let sp = spec(1.0, 0.2, 2);
        let eps = infinitesimal_fractional_strain(
            &move |p: &[f64]| vec![a * p[0] + b * p[1], c * p[1]],
            2,
            &[0.3, -0.2],
            &sp,
        )
        .unwrap();
        assert_abs_diff_eq!(eps[(0, 0)], a, epsilon = 1e-15);
        assert_abs_diff_eq!(eps[(0, 1)], b / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eps[(1, 0)], b / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eps[(1, 1)], c, epsilon = 1e-15);
    }
}
