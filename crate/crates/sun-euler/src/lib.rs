//! Euler-angle toolkit for the special unitary groups SU(N).
//!
//! The group is parameterized as an ordered product of one-parameter
//! exponentials of fixed generators, which makes everything downstream
//! closed-form:
//!
//! * [`lie_algebra`] — the N²−1 generator matrices, structure constants,
//!   and the subalgebra split behind the decomposition;
//! * [`euler_param`] — the factor ordering and evaluation of U(α), U†, Uᵀ;
//! * [`haar_measure`] — the invariant-measure kernel and a determinant
//!   oracle built from left-invariant one-forms;
//! * [`group_volume`] — group volumes by closed formula, exact per-factor
//!   quadrature, and Monte Carlo;
//! * [`param_ranges`] — quotient (SU(N)/Z_N) and covering parameter boxes;
//! * [`density_matrix`] — ρ = U ρ_d U† with sphere-angle eigenvalues;
//! * [`haar_sampler`] — Haar-distributed sampling by per-parameter
//!   inverse-CDF draws;
//! * [`fixtures`] — the executable reference-value suite behind
//!   `sun-euler verify`.

pub mod cli;
pub mod density_matrix;
pub mod error;
pub mod euler_param;
pub mod fixtures;
pub mod group_volume;
pub mod haar_measure;
pub mod haar_sampler;
pub mod lie_algebra;
pub mod matrix;
pub mod param_ranges;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, MatrixParts};
