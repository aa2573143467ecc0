//! SU(N) group volumes three ways: the closed product formula, exact
//! per-factor quadrature of the kernel over the quotient box times the
//! normalization Ω_N, and Monte Carlo over the same box.
//!
//! The two exact routes keep all rational bookkeeping in `Ratio<i128>` and
//! touch floating point once at the end, as value = q·π^e·√r, so they agree
//! to a few ulps.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::haar_measure::kernel_terms;
use crate::param_ranges::{quotient_ranges, RangeSet};

type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeMethod {
    Marinov,
    Quadrature,
    MonteCarlo,
}

/// A computed volume. `stderr` is 0 and `samples`/`seed` are absent for the
/// exact methods.
#[derive(Clone, Debug, Serialize)]
pub struct VolumeResult {
    pub n: usize,
    pub method: VolumeMethod,
    pub value: f64,
    pub stderr: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Exact value q·π^pi_exp·√radicand.
#[derive(Clone, Debug)]
struct ExactVolume {
    rational: Rational,
    pi_exp: u32,
    radicand: Rational,
}

/// Reduced ratios stay below 2⁵³ here, so the conversion is exact.
fn ratio_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl ExactVolume {
    fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rational)
            * PI.powi(self.pi_exp as i32)
            * ratio_to_f64(&self.radicand).sqrt()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    Ok(())
}

/// Ω_N = 2^{(N−2)(N−1)/2}·N!, the count of identified copies of V′ inside
/// the full group (center elements times doubled SU(2) subgroup factors).
pub fn omega(n: usize) -> Result<u128> {
    check_n(n)?;
    let eps = (n - 2) as u32 * (n - 1) as u32 / 2;
    let factorial: u128 = (2..=n as u128).product();
    Ok((1u128 << eps) * factorial)
}

fn marinov_exact(n: usize) -> ExactVolume {
    // 2^{(N−1)/2}·π^{(N−1)(N+2)/2}·√N·∏_{k=1}^{N−1} 1/k!
    let mut inv_factorials = Rational::from_integer(1);
    let mut k_factorial: i128 = 1;
    for k in 1..n as i128 {
        k_factorial *= k;
        inv_factorials /= Rational::from_integer(k_factorial);
    }
    ExactVolume {
        rational: inv_factorials,
        pi_exp: ((n - 1) * (n + 2) / 2) as u32,
        radicand: Rational::from_integer((1i128 << (n - 1)) * n as i128),
    }
}

/// The closed volume formula V = 2^{(N−1)/2}·π^{(N−1)(N+2)/2}·√N·∏ 1/k!.
pub fn marinov_volume(n: usize) -> Result<f64> {
    check_n(n)?;
    Ok(marinov_exact(n).to_f64())
}

/// Per-plane-factor integral over [0, π/2]: 1 for k = 2, else 1/(2(k−1)),
/// which also covers k = m since ∫cos·sin^{2m−3} = 1/(2(m−1)).
fn factor_integral(k: usize, m: usize) -> Rational {
    if k == 2 {
        Rational::from_integer(1)
    } else if k == m {
        Rational::new(1, 2 * (m as i128 - 1))
    } else {
        Rational::new(1, 2 * (k as i128 - 1))
    }
}

/// Assemble the volume factor by factor: Ω_N × π^{N(N−1)/2} from the λ₃
/// parameters × ∏_a π√(2/(a(a−1))) from the Cartan tail × the product of
/// the plane-factor integrals.
pub fn quadrature_volume(n: usize) -> Result<f64> {
    check_n(n)?;
    let mut rational = Rational::from_integer(omega(n)? as i128);
    let mut pi_exp = (n * (n - 1) / 2) as u32;
    let mut radicand = Rational::from_integer(1);
    for a in 2..=n as i128 {
        pi_exp += 1;
        radicand *= Rational::new(2, a * (a - 1));
    }
    for m in (2..=n).rev() {
        for k in 2..=m {
            rational *= factor_integral(k, m);
        }
    }
    Ok(ExactVolume {
        rational,
        pi_exp,
        radicand,
    }
    .to_f64())
}

/// Integrate the kernel over an arbitrary box using the closed per-factor
/// antiderivatives: plane parameters contribute their factor integral, flat
/// parameters contribute their width.
pub fn integral_over_ranges(ranges: &RangeSet) -> Result<f64> {
    let n = ranges.n();
    let terms = kernel_terms(n)?;
    let mut value = 1.0;
    let mut is_plane = vec![false; n * n];
    for t in &terms {
        is_plane[t.param_index] = true;
        let (lo, hi) = ranges.bound(t.param_index);
        if lo != 0.0 {
            return Err(Error::InvalidArgument(
                "kernel factor integrals assume lower bound 0".into(),
            ));
        }
        value *= t.integral_to(hi);
    }
    for (param, &plane) in is_plane.iter().enumerate().take(n * n).skip(1) {
        if !plane {
            let (lo, hi) = ranges.bound(param);
            value *= hi - lo;
        }
    }
    Ok(value)
}

struct WorkerSum {
    sum: f64,
    sum_sq: f64,
}

/// Monte Carlo estimate of the volume: Ω_N·vol(V′)·mean(K) over uniform
/// points of the quotient box, with the sample stream split determinately
/// across workers. Identical (seed, workers) reproduce bit-identical
/// results.
pub fn monte_carlo_volume(
    n: usize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<VolumeResult> {
    check_n(n)?;
    const MIN_SAMPLES: u64 = 10_000;
    if samples < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: samples,
        });
    }
    if workers == 0 {
        return Err(Error::NoWorkers);
    }

    let ranges = quotient_ranges(n)?;
    let widths: Vec<f64> = ranges.bounds().iter().map(|(lo, hi)| hi - lo).collect();
    let terms = kernel_terms(n)?;
    let box_volume = ranges.box_volume();
    let omega_f = omega(n)? as f64;

    let per_worker = samples / workers as u64;
    let remainder = samples % workers as u64;
    log::debug!("mc volume n={n}: {workers} workers, {samples} samples, seed {seed}");

    let partials: Vec<WorkerSum> = (0..workers as u64)
        .into_par_iter()
        .map(|w| {
            let quota = per_worker + u64::from(w < remainder);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(w);
            let mut point = vec![0.0f64; widths.len()];
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..quota {
                for (x, &width) in point.iter_mut().zip(&widths) {
                    *x = rng.gen::<f64>() * width;
                }
                let k: f64 = terms
                    .iter()
                    .map(|t| t.eval(point[t.param_index - 1]))
                    .product();
                sum += k;
                sum_sq += k * k;
            }
            WorkerSum { sum, sum_sq }
        })
        .collect();

    let total: f64 = partials.iter().map(|p| p.sum).sum();
    let total_sq: f64 = partials.iter().map(|p| p.sum_sq).sum();
    let s = samples as f64;
    let mean = total / s;
    let variance = ((total_sq - s * mean * mean) / (s - 1.0)).max(0.0);
    Ok(VolumeResult {
        n,
        method: VolumeMethod::MonteCarlo,
        value: omega_f * box_volume * mean,
        stderr: omega_f * box_volume * (variance / s).sqrt(),
        samples: Some(samples),
        seed: Some(seed),
    })
}

/// Convenience constructors for the exact methods as `VolumeResult`s.
pub fn volume(n: usize, method: VolumeMethod) -> Result<VolumeResult> {
    let value = match method {
        VolumeMethod::Marinov => marinov_volume(n)?,
        VolumeMethod::Quadrature => quadrature_volume(n)?,
        VolumeMethod::MonteCarlo => {
            return Err(Error::InvalidArgument(
                "monte carlo needs samples/seed/workers; call monte_carlo_volume".into(),
            ))
        }
    };
    Ok(VolumeResult {
        n,
        method,
        value,
        stderr: 0.0,
        samples: None,
        seed: None,
    })
}
