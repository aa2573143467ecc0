//! Parameter boxes: the quotient ranges V′ covering SU(N)/Z_N once, and the
//! enlarged covering ranges whose box integrates to the full group volume
//! with no Ω_N prefactor.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler_param::{factor_sequence, j_offset, FactorKind};
use crate::lie_algebra::cartan_scale;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RangeMode {
    Quotient,
    Covering,
}

/// Per-parameter bounds, indexed by param 1..N²−1. All lower bounds are 0.
#[derive(Clone, Debug)]
pub struct RangeSet {
    n: usize,
    mode: RangeMode,
    bounds: Vec<(f64, f64)>,
}

impl RangeSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> RangeMode {
        self.mode
    }

    /// (lo, hi) of α_param_index, 1-based.
    pub fn bound(&self, param_index: usize) -> (f64, f64) {
        self.bounds[param_index - 1]
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    /// Product of all widths.
    pub fn box_volume(&self) -> f64 {
        self.bounds.iter().map(|(lo, hi)| hi - lo).product()
    }
}

/// Upper bound of the Cartan tail parameter at level a: π√(2/(a(a−1))).
/// a = 2 gives π, the tail λ₃ bound.
pub fn cartan_bound(a: usize) -> f64 {
    PI * cartan_scale(a)
}

/// Ranges of V′ (one copy of SU(N)/Z_N): λ₃ ↦ [0,π], plane ↦ [0,π/2],
/// Cartan level a ↦ [0, π√(2/(a(a−1)))].
pub fn quotient_ranges(n: usize) -> Result<RangeSet> {
    let seq = factor_sequence(n)?;
    let mut bounds = vec![(0.0, 0.0); n * n - 1];
    for f in seq.factors() {
        let hi = match f.kind {
            FactorKind::Lambda3 => PI,
            FactorKind::Plane(_) => PI / 2.0,
            FactorKind::Cartan(a) => cartan_bound(a),
        };
        bounds[f.param_index - 1] = (0.0, hi);
    }
    Ok(RangeSet {
        n,
        mode: RangeMode::Quotient,
        bounds,
    })
}

/// Ranges covering the full group: plane bounds stay [0,π/2]; in each
/// m-block the first λ₃ parameter keeps [0,π] and the later ones take
/// [0,2π]; the Cartan tail bound at level a is scaled by a.
pub fn covering_ranges(n: usize) -> Result<RangeSet> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut bounds = vec![(0.0, 0.0); n * n - 1];
    for m in (2..=n).rev() {
        let offset = j_offset(m, n)?;
        for k in 2..=m {
            let lambda3_param = (2 * k - 3) + offset;
            let plane_param = 2 * (k - 1) + offset;
            bounds[lambda3_param - 1] = (0.0, if k == 2 { PI } else { 2.0 * PI });
            bounds[plane_param - 1] = (0.0, PI / 2.0);
        }
    }
    for a in 2..=n {
        let param = n * n - n + a - 1;
        bounds[param - 1] = (0.0, a as f64 * cartan_bound(a));
    }
    Ok(RangeSet {
        n,
        mode: RangeMode::Covering,
        bounds,
    })
}

pub fn ranges(n: usize, mode: RangeMode) -> Result<RangeSet> {
    match mode {
        RangeMode::Quotient => quotient_ranges(n),
        RangeMode::Covering => covering_ranges(n),
    }
}
