//! Haar-distributed SU(N) sampling by independent per-parameter draws.
//!
//! The measure factorizes over the Euler parameters, so each plane angle is
//! drawn by inverting the CDF of its own kernel factor and every flat
//! direction is uniform over its range. Density matrices combine a sampled
//! U with θ angles drawn uniformly over their ranges (a convenient choice —
//! the θ box carries no canonical measure here, so `Uniform` θ output is
//! *not* Haar over mixed states; only the unitary factor is).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::density_matrix::{density, theta_ranges, DensitySpec};
use crate::error::Result;
use crate::euler_param::{unitary, ParamVector};
use crate::haar_measure::{kernel_terms, KernelCase};
use crate::matrix::ComplexMatrix;
use crate::param_ranges::{ranges, RangeMode, RangeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaMode {
    /// θ pinned to the lower endpoints: ρ = I/N for every draw.
    Endpoints,
    /// θ uniform over the restricted ranges.
    Uniform,
}

#[derive(Clone, Copy, Debug)]
pub struct SamplerConfig {
    pub n: usize,
    pub seed: u64,
    /// Range set for the flat (λ₃ and Cartan) directions. Covering spans
    /// the whole group; quotient spans SU(N)/Z_N. Moments of sampled
    /// matrices are identical either way.
    pub mode: RangeMode,
}

/// Per-parameter draw rule.
#[derive(Clone, Copy, Debug)]
enum DrawRule {
    Uniform { hi: f64 },
    Plane { case: KernelCase },
}

/// Deterministic sampler; a fixed (n, seed, mode) reproduces the exact
/// stream.
pub struct Sampler {
    cfg: SamplerConfig,
    rng: ChaCha8Rng,
    rules: Vec<DrawRule>,
    theta_bounds: Vec<(f64, f64)>,
}

/// Invert the CDF of one kernel factor on [0, π/2].
///
/// sin(2α) has CDF sin²α; cos^{2k−3}·sin has CDF 1 − cos^{2k−2};
/// cos·sin^{2m−3} has CDF sin^{2m−2} (each normalized to 1).
pub fn plane_inverse_cdf(case: KernelCase, u: f64) -> f64 {
    match case {
        KernelCase::Sin2 => u.sqrt().asin(),
        KernelCase::CosPower { exponent } => {
            (1.0 - u).powf(1.0 / (exponent as f64 + 1.0)).acos()
        }
        KernelCase::SinPower { exponent } => u.powf(1.0 / (exponent as f64 + 1.0)).asin(),
    }
}

impl Sampler {
    pub fn new(cfg: SamplerConfig) -> Result<Self> {
        let range_set: RangeSet = ranges(cfg.n, cfg.mode)?;
        let terms = kernel_terms(cfg.n)?;
        let mut rules: Vec<DrawRule> = (1..=cfg.n * cfg.n - 1)
            .map(|param| DrawRule::Uniform {
                hi: range_set.bound(param).1,
            })
            .collect();
        for t in &terms {
            rules[t.param_index - 1] = DrawRule::Plane { case: t.case };
        }
        Ok(Self {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            rules,
            theta_bounds: theta_ranges(cfg.n)?,
        })
    }

    pub fn config(&self) -> SamplerConfig {
        self.cfg
    }

    /// One draw of the full parameter vector.
    pub fn sample_angles(&mut self) -> ParamVector {
        let alpha: Vec<f64> = self
            .rules
            .iter()
            .map(|rule| {
                let u = self.rng.gen::<f64>();
                match *rule {
                    DrawRule::Uniform { hi } => u * hi,
                    DrawRule::Plane { case } => plane_inverse_cdf(case, u),
                }
            })
            .collect();
        ParamVector::new(self.cfg.n, alpha).expect("sampler draws full-length vectors")
    }

    /// One Haar-distributed U ∈ SU(N).
    pub fn sample_unitary(&mut self) -> ComplexMatrix {
        let p = self.sample_angles();
        unitary(self.cfg.n, &p).expect("sampled parameters are well-formed")
    }

    /// One random density matrix ρ = U ρ_d(θ) U†.
    pub fn sample_density(&mut self, theta_mode: ThetaMode) -> Result<ComplexMatrix> {
        let theta: Vec<f64> = match theta_mode {
            ThetaMode::Endpoints => self.theta_bounds.iter().map(|&(lo, _)| lo).collect(),
            ThetaMode::Uniform => self
                .theta_bounds
                .clone()
                .iter()
                .map(|&(lo, hi)| lo + self.rng.gen::<f64>() * (hi - lo))
                .collect(),
        };
        let alpha = self.sample_angles();
        let spec = DensitySpec::new(self.cfg.n, theta, alpha)?;
        density(&spec)
    }
}
