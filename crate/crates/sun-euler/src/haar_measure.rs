//! The Haar measure of SU(N) in Euler angles: the closed-form kernel
//! K_SU(N), and an independent oracle that rebuilds the measure as the
//! determinant of the left-invariant one-form coefficients of u = Uᵀ.
//!
//! The kernel is a product with one trigonometric factor per plane
//! parameter: sin(2α) for k = 2, cos^{2k−3}(α)sin(α) for 2 < k < m, and
//! cos(α)sin^{2m−3}(α) for k = m. The oracle never expands a series:
//! ∂u/∂α_l · u⁻¹ = E·(iC)·E† with E the exact product of the factors
//! preceding α_l in u, so each coefficient row is a conjugation and a
//! trace away.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler_param::{
    apply_factor_right, factor_sequence, j_offset, FactorKind, ParamVector,
};
use crate::lie_algebra::make_generators;
use crate::matrix::{real_det, ComplexMatrix};

/// Which trigonometric factor a plane parameter contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum KernelCase {
    /// k = 2: sin(2α).
    Sin2,
    /// 2 < k < m: cos^{2k−3}(α)·sin(α).
    CosPower { exponent: u32 },
    /// k = m: cos(α)·sin^{2m−3}(α).
    SinPower { exponent: u32 },
}

/// One factor Ker(k, j(m)) of the kernel product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KernelTerm {
    pub k: usize,
    pub m: usize,
    pub param_index: usize,
    #[serde(flatten)]
    pub case: KernelCase,
}

impl KernelTerm {
    pub fn eval(&self, angle: f64) -> f64 {
        match self.case {
            KernelCase::Sin2 => (2.0 * angle).sin(),
            KernelCase::CosPower { exponent } => {
                angle.cos().powi(exponent as i32) * angle.sin()
            }
            KernelCase::SinPower { exponent } => {
                angle.cos() * angle.sin().powi(exponent as i32)
            }
        }
    }

    /// ∫₀^hi of this factor, in closed form.
    pub fn integral_to(&self, hi: f64) -> f64 {
        match self.case {
            KernelCase::Sin2 => hi.sin().powi(2),
            KernelCase::CosPower { exponent } => {
                let e = exponent as i32 + 1;
                (1.0 - hi.cos().powi(e)) / e as f64
            }
            KernelCase::SinPower { exponent } => {
                let e = exponent as i32 + 1;
                hi.sin().powi(e) / e as f64
            }
        }
    }
}

/// One term per (m, k), m = N..2, k = 2..m, bound to α_{2(k−1)+j(m)}.
pub fn kernel_terms(n: usize) -> Result<Vec<KernelTerm>> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut terms = Vec::with_capacity(n * (n - 1) / 2);
    for m in (2..=n).rev() {
        let offset = j_offset(m, n)?;
        for k in 2..=m {
            let case = if k == 2 {
                KernelCase::Sin2
            } else if k == m {
                KernelCase::SinPower {
                    exponent: 2 * m as u32 - 3,
                }
            } else {
                KernelCase::CosPower {
                    exponent: 2 * k as u32 - 3,
                }
            };
            terms.push(KernelTerm {
                k,
                m,
                param_index: 2 * (k - 1) + offset,
                case,
            });
        }
    }
    Ok(terms)
}

/// K_SU(N)(α): the product of all kernel terms. Depends only on the plane
/// parameters.
pub fn kernel(n: usize, p: &ParamVector) -> Result<f64> {
    if p.n() != n {
        return Err(Error::ParamLength {
            n,
            expected: n * n - 1,
            got: p.as_slice().len(),
        });
    }
    Ok(kernel_terms(n)?
        .iter()
        .map(|t| t.eval(p.alpha(t.param_index)))
        .product())
}

/// The (N²−1)×(N²−1) expansion coefficients c_lj of the left-invariant
/// one-forms of u = Uᵀ: row l is the parameter, column j the transposed
/// generator.
#[derive(Clone, Debug)]
pub struct OneFormCoefficients {
    n: usize,
    c: Vec<f64>,
}

impl OneFormCoefficients {
    pub fn n(&self) -> usize {
        self.n
    }

    /// c_lj, both indices 1-based.
    pub fn entry(&self, l: usize, j: usize) -> f64 {
        let d = self.n * self.n - 1;
        self.c[(l - 1) * d + (j - 1)]
    }

    /// Determinant of the full coefficient matrix.
    pub fn det(&self) -> f64 {
        let d = self.n * self.n - 1;
        real_det(self.c.clone(), d)
    }

    /// Determinant of the 2(N−1)×2(N−1) block with rows l = 1..2(N−1) and
    /// columns j = (N−1)²..N²−2 — the top-level factor that multiplies the
    /// SU(N−1) measure.
    pub fn block_det(&self) -> f64 {
        let n = self.n;
        let size = 2 * (n - 1);
        let col_lo = (n - 1) * (n - 1);
        let mut sub = Vec::with_capacity(size * size);
        for l in 1..=size {
            for j in col_lo..=n * n - 2 {
                sub.push(self.entry(l, j));
            }
        }
        real_det(sub, size)
    }
}

/// Factors of u = Uᵀ in product order: the reversed factor sequence, with
/// the sign of every plane generator flipped.
fn transposed_factor_list(n: usize) -> Result<Vec<(crate::euler_param::EulerFactor, f64)>> {
    let seq = factor_sequence(n)?;
    Ok(seq
        .factors()
        .iter()
        .rev()
        .map(|f| {
            let sign = match f.kind {
                FactorKind::Plane(_) => -1.0,
                _ => 1.0,
            };
            (*f, sign)
        })
        .collect())
}

/// Build c_lj at the point α by exact conjugation: for each parameter l,
/// M_l = E·(i·sign·λ_g)·E† with E the product of the factors of u that
/// precede α_l, then c_lj = −i/2 · Tr[λ_jᵀ · M_l].
pub fn one_form_coefficients(n: usize, p: &ParamVector) -> Result<OneFormCoefficients> {
    if p.n() != n {
        return Err(Error::ParamLength {
            n,
            expected: n * n - 1,
            got: p.as_slice().len(),
        });
    }
    let d = n * n - 1;
    let gs = make_generators(n)?;
    let transposed: Vec<ComplexMatrix> = (1..=d).map(|j| gs.lambda(j).transpose()).collect();
    let factors = transposed_factor_list(n)?;

    let mut c = vec![0.0; d * d];
    let mut prefix = ComplexMatrix::identity(n);
    for (factor, sign) in factors {
        let l = factor.param_index;
        // M_l = prefix · (i·sign·λ_g) · prefix†
        let generator = gs.lambda(factor.generator_index);
        let conj = prefix
            .mul(&generator.scale(Complex64::new(0.0, sign)))
            .mul(&prefix.dagger());
        for (j, lambda_t) in transposed.iter().enumerate() {
            let t = lambda_t.trace_of_product(&conj);
            c[(l - 1) * d + j] = (Complex64::new(0.0, -0.5) * t).re;
        }
        apply_factor_right(&mut prefix, &factor, sign * p.alpha(l));
    }
    Ok(OneFormCoefficients { n, c })
}

/// |Det[c_lj]|: the measure density rebuilt from one-forms. Matches
/// |kernel(n, p)| on interior points.
pub fn kernel_oracle(n: usize, p: &ParamVector) -> Result<f64> {
    Ok(one_form_coefficients(n, p)?.det().abs())
}
