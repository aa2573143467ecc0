//! N×N density matrices ρ = U ρ_d U†: the diagonal eigenvalue profile from
//! sphere angles θ, its expansion coefficients over the Cartan generators,
//! and the conjugated full matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::euler_param::{unitary, ParamVector};
use crate::lie_algebra::cartan_scale;
use crate::matrix::ComplexMatrix;

/// Tolerance slack for θ range validation, so endpoints computed with the
/// same expressions pass exactly.
const THETA_EPS: f64 = 1e-12;

/// Eigenvalue profile of ρ_d.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalDensity {
    n: usize,
    eigenvalues: Vec<f64>,
}

impl DiagonalDensity {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Λ_1..Λ_N in the construction order (Λ_1 first).
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.n);
        for (i, &v) in self.eigenvalues.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }
}

/// Sphere angles plus Euler parameters defining ρ = U ρ_d U†.
#[derive(Clone, Debug)]
pub struct DensitySpec {
    n: usize,
    theta: Vec<f64>,
    alpha: ParamVector,
}

impl DensitySpec {
    /// Validates θ against the restricted ranges
    /// cos⁻¹(1/√(j+1)) ≤ θ_j ≤ π/2, which fix the eigenvalue ordering.
    pub fn new(n: usize, theta: Vec<f64>, alpha: ParamVector) -> Result<Self> {
        let ranges = theta_ranges(n)?;
        validate_theta_shape(n, &theta, &alpha)?;
        for (j, (&t, &(lo, hi))) in theta.iter().zip(&ranges).enumerate() {
            if t < lo - THETA_EPS || t > hi + THETA_EPS {
                return Err(Error::ThetaOutOfRange {
                    index: j + 1,
                    value: t,
                    lo,
                    hi,
                });
            }
        }
        Ok(Self { n, theta, alpha })
    }

    /// Accepts any θ in the full box [0, π/2]; eigenvalues then come out in
    /// no particular order but ρ stays a valid density matrix.
    pub fn with_full_theta_box(n: usize, theta: Vec<f64>, alpha: ParamVector) -> Result<Self> {
        validate_theta_shape(n, &theta, &alpha)?;
        for (j, &t) in theta.iter().enumerate() {
            if !(-THETA_EPS..=std::f64::consts::FRAC_PI_2 + THETA_EPS).contains(&t) {
                return Err(Error::ThetaOutOfRange {
                    index: j + 1,
                    value: t,
                    lo: 0.0,
                    hi: std::f64::consts::FRAC_PI_2,
                });
            }
        }
        Ok(Self { n, theta, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn alpha(&self) -> &ParamVector {
        &self.alpha
    }
}

fn validate_theta_shape(n: usize, theta: &[f64], alpha: &ParamVector) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if theta.len() != n - 1 {
        return Err(Error::ThetaLength {
            n,
            expected: n - 1,
            got: theta.len(),
        });
    }
    if alpha.n() != n {
        return Err(Error::ParamLength {
            n,
            expected: n * n - 1,
            got: alpha.as_slice().len(),
        });
    }
    Ok(())
}

/// Per-angle bounds [cos⁻¹(1/√(j+1)), π/2] for j = 1..N−1. At the lower
/// endpoints ρ_d is maximally mixed.
pub fn theta_ranges(n: usize) -> Result<Vec<(f64, f64)>> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    Ok((1..n)
        .map(|j| {
            (
                (1.0 / ((j + 1) as f64).sqrt()).acos(),
                std::f64::consts::FRAC_PI_2,
            )
        })
        .collect())
}

/// Eigenvalues Λ_1 = ∏_j sin²θ_j, Λ_i = cos²θ_{i−1}·∏_{j≥i} sin²θ_j,
/// Λ_N = cos²θ_{N−1}. Accepts any θ in [0, π/2].
pub fn rho_diagonal(n: usize, theta: &[f64]) -> Result<DiagonalDensity> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if theta.len() != n - 1 {
        return Err(Error::ThetaLength {
            n,
            expected: n - 1,
            got: theta.len(),
        });
    }
    for (j, &t) in theta.iter().enumerate() {
        if !(-THETA_EPS..=std::f64::consts::FRAC_PI_2 + THETA_EPS).contains(&t) {
            return Err(Error::ThetaOutOfRange {
                index: j + 1,
                value: t,
                lo: 0.0,
                hi: std::f64::consts::FRAC_PI_2,
            });
        }
    }
    // Suffix products of sin²θ_j.
    let sin_sq: Vec<f64> = theta.iter().map(|t| t.sin().powi(2)).collect();
    let mut suffix = vec![1.0; n];
    for i in (0..n - 1).rev() {
        suffix[i] = suffix[i + 1] * sin_sq[i];
    }
    let mut eigenvalues = Vec::with_capacity(n);
    eigenvalues.push(suffix[0]);
    for i in 2..=n {
        let cos_sq = theta[i - 2].cos().powi(2);
        eigenvalues.push(cos_sq * suffix[i - 1]);
    }
    Ok(DiagonalDensity { n, eigenvalues })
}

/// Expansion coefficients f_a of ρ_d = I/N + Σ_{a=2..N} f_a·λ_{a²−1},
/// computed as f_a = ½·Tr[ρ_d·λ_{a²−1}]. Index 0 holds a = 2.
pub fn rho_coefficients(n: usize, theta: &[f64]) -> Result<Vec<f64>> {
    let diag = rho_diagonal(n, theta)?;
    let lam = diag.eigenvalues();
    let mut coeffs = Vec::with_capacity(n - 1);
    let mut head_sum = lam[0];
    for a in 2..=n {
        let s = cartan_scale(a);
        coeffs.push(0.5 * s * (head_sum - (a as f64 - 1.0) * lam[a - 1]));
        head_sum += lam[a - 1];
    }
    Ok(coeffs)
}

/// ρ = U ρ_d U†, validated Hermitian, unit trace, and with the spectrum of
/// ρ_d.
pub fn density(spec: &DensitySpec) -> Result<ComplexMatrix> {
    let n = spec.n();
    let diag = rho_diagonal(n, spec.theta())?;
    let u = unitary(n, spec.alpha())?;
    let rho = u.mul(&diag.matrix()).mul(&u.dagger());

    // Contract checks; failures mean a bug upstream, not bad input.
    if rho.max_abs_diff(&rho.dagger()) > 1e-12 {
        return Err(Error::Inconsistent("density matrix is not Hermitian".into()));
    }
    if (rho.trace().re - 1.0).abs() > 1e-12 || rho.trace().im.abs() > 1e-12 {
        return Err(Error::Inconsistent("density matrix trace is not 1".into()));
    }
    let mut spectrum = rho.hermitian_eigenvalues();
    let mut expected = diag.eigenvalues().to_vec();
    spectrum.sort_by(|a, b| a.partial_cmp(b).unwrap());
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for (s, e) in spectrum.iter().zip(&expected) {
        if (s - e).abs() > 1e-10 {
            return Err(Error::Inconsistent(format!(
                "density spectrum deviates from the diagonal profile: {s} vs {e}"
            )));
        }
    }
    Ok(rho)
}
