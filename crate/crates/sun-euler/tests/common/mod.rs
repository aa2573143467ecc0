//! Shared helpers for the integration suites: an independent Haar sampler
//! built from QR-orthonormalized Gaussian matrices, and Kolmogorov–Smirnov
//! distances.

// Each integration test binary compiles this module and uses a subset.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use sun_euler::ComplexMatrix;

/// Haar-distributed U ∈ SU(N) via the Ginibre + QR route: orthonormalize a
/// complex Gaussian matrix column by column (the normalization constants
/// are real positive, so Q is Haar on U(N)), then strip the determinant
/// phase.
pub fn ginibre_su(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
                })
                .collect()
        })
        .collect();
    for j in 0..n {
        let (done, rest) = cols.split_at_mut(j);
        let current = &mut rest[0];
        for prev in done.iter() {
            let proj: Complex64 = prev.iter().zip(current.iter()).map(|(p, c)| p.conj() * c).sum();
            for (c, p) in current.iter_mut().zip(prev.iter()) {
                *c -= proj * p;
            }
        }
        let norm: f64 = current.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for c in current.iter_mut() {
            *c /= norm;
        }
    }
    let q = ComplexMatrix::from_fn(n, |r, c| cols[c][r]);
    let det = q.det();
    let phase = Complex64::from_polar(1.0, -det.arg() / n as f64);
    q.scale(phase)
}

/// KS distance between an empirical sample and an exact CDF.
pub fn ks_one_sample(values: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len() as f64;
    let mut ks: f64 = 0.0;
    for (i, &x) in values.iter().enumerate() {
        let c = cdf(x);
        ks = ks.max((c - i as f64 / n).abs());
        ks = ks.max((c - (i + 1) as f64 / n).abs());
    }
    ks
}

/// Two-sample KS distance.
pub fn ks_two_sample(a: &mut [f64], b: &mut [f64]) -> f64 {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut ks: f64 = 0.0;
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        ks = ks.max((i as f64 / na - j as f64 / nb).abs());
    }
    ks
}
