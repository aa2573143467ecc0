//! The ordered Euler factor sequence for SU(N) and evaluation of
//! U(α), U†(α), and u = Uᵀ from closed-form factor exponentials.
//!
//! U is the left-to-right product, for m = N down to 2 and k = 2..m, of the
//! pairs exp(iλ₃ α_{(2k−3)+j(m)})·exp(iλ_{(k−1)²+1} α_{2(k−1)+j(m)}),
//! followed by the diagonal tail exp(iλ_{a²−1} α_{N²−N+a−1}) for a = 2..N.
//! Every factor exponential has a closed form (diagonal phases or a real
//! plane rotation), so no general matrix exponentiation is involved.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_algebra::cartan_scale;
use crate::matrix::ComplexMatrix;

/// What a factor exponentiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "level", rename_all = "lowercase")]
pub enum FactorKind {
    /// λ₃ inside a mixing block.
    Lambda3,
    /// λ_{(k−1)²+1}, the antisymmetric (1, k)-plane generator.
    Plane(usize),
    /// λ_{a²−1} in the diagonal tail; the tail λ₃ is the a = 2 case.
    Cartan(usize),
}

/// One exponential factor of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerFactor {
    /// 1-based λ index.
    pub generator_index: usize,
    /// 1-based α index.
    pub param_index: usize,
    #[serde(flatten)]
    pub kind: FactorKind,
}

/// The full ordered factor list for SU(N); length N²−1.
#[derive(Clone, Debug)]
pub struct FactorSequence {
    n: usize,
    factors: Vec<EulerFactor>,
}

impl FactorSequence {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[EulerFactor] {
        &self.factors
    }
}

/// Parameter vector α ∈ R^{N²−1}, addressed 1-based like the subscripts.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamVector {
    n: usize,
    alpha: Vec<f64>,
}

impl ParamVector {
    pub fn new(n: usize, alpha: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let expected = n * n - 1;
        if alpha.len() != expected {
            return Err(Error::ParamLength {
                n,
                expected,
                got: alpha.len(),
            });
        }
        Ok(Self { n, alpha })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![0.0; n * n - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// α_param_index, 1-based.
    #[inline]
    pub fn alpha(&self, param_index: usize) -> f64 {
        self.alpha[param_index - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.alpha
    }
}

/// Parameter offset j(m) of the m-block: 0 for m = N, else
/// Σ_{l=0}^{N−m−1} 2(m+l) = (N−m)(N+m−1).
pub fn j_offset(m: usize, n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if m < 2 || m > n {
        return Err(Error::BlockIndexOutOfRange { m, n });
    }
    Ok((n - m) * (n + m - 1))
}

/// Build the ordered factor sequence for SU(N).
pub fn factor_sequence(n: usize) -> Result<FactorSequence> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut factors = Vec::with_capacity(n * n - 1);
    for m in (2..=n).rev() {
        let offset = j_offset(m, n)?;
        for k in 2..=m {
            factors.push(EulerFactor {
                generator_index: 3,
                param_index: (2 * k - 3) + offset,
                kind: FactorKind::Lambda3,
            });
            factors.push(EulerFactor {
                generator_index: (k - 1) * (k - 1) + 1,
                param_index: 2 * (k - 1) + offset,
                kind: FactorKind::Plane(k),
            });
        }
    }
    for a in 2..=n {
        factors.push(EulerFactor {
            generator_index: a * a - 1,
            param_index: n * n - n + a - 1,
            kind: FactorKind::Cartan(a),
        });
    }
    debug_assert_eq!(factors.len(), n * n - 1);
    Ok(FactorSequence { n, factors })
}

/// Apply `m ← m · exp(i·λ·angle)` in place for the factor's generator.
/// Plane factors touch two columns, diagonal factors rescale columns, so a
/// full product costs O(N) per factor instead of a dense multiply.
pub(crate) fn apply_factor_right(m: &mut ComplexMatrix, factor: &EulerFactor, angle: f64) {
    match factor.kind {
        FactorKind::Lambda3 => {
            m.scale_column(0, Complex64::from_polar(1.0, angle));
            m.scale_column(1, Complex64::from_polar(1.0, -angle));
        }
        FactorKind::Plane(k) => {
            m.rotate_columns(0, k - 1, angle.cos(), angle.sin());
        }
        FactorKind::Cartan(a) => {
            let s = cartan_scale(a);
            for col in 0..a - 1 {
                m.scale_column(col, Complex64::from_polar(1.0, s * angle));
            }
            m.scale_column(a - 1, Complex64::from_polar(1.0, -((a - 1) as f64) * s * angle));
        }
    }
}

/// Closed form of exp(i·λ·angle) for one factor, as a dense matrix.
pub fn factor_exponential(factor: &EulerFactor, angle: f64, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(n);
    apply_factor_right(&mut m, factor, angle);
    m
}

fn product(
    n: usize,
    order: impl Iterator<Item = EulerFactor>,
    angle_of: impl Fn(&EulerFactor) -> f64,
) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(n);
    for factor in order {
        apply_factor_right(&mut m, &factor, angle_of(&factor));
    }
    m
}

fn check_dims(n: usize, p: &ParamVector) -> Result<()> {
    if p.n() != n {
        return Err(Error::ParamLength {
            n,
            expected: n * n - 1,
            got: p.as_slice().len(),
        });
    }
    Ok(())
}

/// U(α): the factor product in sequence order.
pub fn unitary(n: usize, p: &ParamVector) -> Result<ComplexMatrix> {
    check_dims(n, p)?;
    let seq = factor_sequence(n)?;
    Ok(product(n, seq.factors().iter().copied(), |f| {
        p.alpha(f.param_index)
    }))
}

/// U†(α): the reversed product with every angle negated.
pub fn unitary_dagger(n: usize, p: &ParamVector) -> Result<ComplexMatrix> {
    check_dims(n, p)?;
    let seq = factor_sequence(n)?;
    Ok(product(n, seq.factors().iter().rev().copied(), |f| {
        -p.alpha(f.param_index)
    }))
}

/// u = Uᵀ(α): the reversed product with only the plane angles negated
/// (transposition flips the sign of the plane generators and fixes the
/// diagonal ones).
pub fn unitary_transpose(n: usize, p: &ParamVector) -> Result<ComplexMatrix> {
    check_dims(n, p)?;
    let seq = factor_sequence(n)?;
    Ok(product(n, seq.factors().iter().rev().copied(), |f| {
        match f.kind {
            FactorKind::Plane(_) => -p.alpha(f.param_index),
            _ => p.alpha(f.param_index),
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_algebra::make_generators;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_params(n: usize, rng: &mut impl Rng) -> ParamVector {
        let alpha = (0..n * n - 1).map(|_| rng.gen::<f64>() * PI).collect();
        ParamVector::new(n, alpha).unwrap()
    }

    #[test]
    fn j_offset_reproduces_worked_values() {
        assert_eq!(j_offset(5, 5).unwrap(), 0);
        assert_eq!(j_offset(4, 5).unwrap(), 8);
        assert_eq!(j_offset(3, 5).unwrap(), 14);
        assert_eq!(j_offset(2, 5).unwrap(), 18);

        assert_eq!(j_offset(6, 6).unwrap(), 0);
        assert_eq!(j_offset(5, 6).unwrap(), 10);
        assert_eq!(j_offset(4, 6).unwrap(), 18);
        assert_eq!(j_offset(3, 6).unwrap(), 24);
        assert_eq!(j_offset(2, 6).unwrap(), 28);

        for n in 2..=12 {
            assert_eq!(j_offset(n, n).unwrap(), 0);
        }
        assert!(matches!(
            j_offset(1, 5),
            Err(Error::BlockIndexOutOfRange { .. })
        ));
        assert!(matches!(
            j_offset(6, 5),
            Err(Error::BlockIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn j_offset_closed_form_equals_sum() {
        for n in 2..=12usize {
            for m in 2..=n {
                let sum: usize = if m == n {
                    0
                } else {
                    (0..=n - m - 1).map(|l| 2 * (m + l)).sum()
                };
                assert_eq!(j_offset(m, n).unwrap(), sum, "m={m}, n={n}");
            }
        }
    }

    fn sequence_pairs(n: usize) -> Vec<(usize, usize)> {
        factor_sequence(n)
            .unwrap()
            .factors()
            .iter()
            .map(|f| (f.generator_index, f.param_index))
            .collect()
    }

    #[test]
    fn su2_su3_su4_sequences_match_printed_lists() {
        assert_eq!(sequence_pairs(2), vec![(3, 1), (2, 2), (3, 3)]);
        assert_eq!(
            sequence_pairs(3),
            vec![
                (3, 1),
                (2, 2),
                (3, 3),
                (5, 4),
                (3, 5),
                (2, 6),
                (3, 7),
                (8, 8)
            ]
        );
        assert_eq!(
            sequence_pairs(4),
            vec![
                (3, 1),
                (2, 2),
                (3, 3),
                (5, 4),
                (3, 5),
                (10, 6),
                (3, 7),
                (2, 8),
                (3, 9),
                (5, 10),
                (3, 11),
                (2, 12),
                (3, 13),
                (8, 14),
                (15, 15)
            ]
        );
    }

    #[test]
    fn su5_sequence_has_24_factors_with_printed_tail() {
        let pairs = sequence_pairs(5);
        assert_eq!(pairs.len(), 24);
        assert_eq!(
            &pairs[..8],
            &[
                (3, 1),
                (2, 2),
                (3, 3),
                (5, 4),
                (3, 5),
                (10, 6),
                (3, 7),
                (17, 8)
            ]
        );
        assert_eq!(&pairs[20..], &[(3, 21), (8, 22), (15, 23), (24, 24)]);
    }

    #[test]
    fn sequence_structure_invariants() {
        for n in 2..=9usize {
            let seq = factor_sequence(n).unwrap();
            assert_eq!(seq.factors().len(), n * n - 1);
            let mut params: Vec<usize> =
                seq.factors().iter().map(|f| f.param_index).collect();
            params.sort_unstable();
            assert_eq!(params, (1..=n * n - 1).collect::<Vec<_>>());

            let planes = seq
                .factors()
                .iter()
                .filter(|f| matches!(f.kind, FactorKind::Plane(_)))
                .count();
            let lambda3s = seq
                .factors()
                .iter()
                .filter(|f| f.kind == FactorKind::Lambda3)
                .count();
            let cartans: Vec<&EulerFactor> = seq
                .factors()
                .iter()
                .filter(|f| matches!(f.kind, FactorKind::Cartan(_)))
                .collect();
            assert_eq!(planes, n * (n - 1) / 2);
            assert_eq!(lambda3s, n * (n - 1) / 2);
            assert_eq!(cartans.len(), n - 1);
            // Tail is the last N−1 factors: λ3, λ8, …, λ_{N²−1} in order.
            for (i, f) in cartans.iter().enumerate() {
                let a = i + 2;
                assert_eq!(f.kind, FactorKind::Cartan(a));
                assert_eq!(f.generator_index, a * a - 1);
                assert_eq!(f.param_index, n * n - n + a - 1);
            }
            assert_eq!(
                seq.factors()[n * n - n..]
                    .iter()
                    .map(|f| f.generator_index)
                    .collect::<Vec<_>>(),
                (2..=n).map(|a| a * a - 1).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn factor_kinds_agree_with_generator_indices() {
        for n in 2..=9usize {
            for f in factor_sequence(n).unwrap().factors() {
                match f.kind {
                    FactorKind::Lambda3 => assert_eq!(f.generator_index, 3),
                    FactorKind::Plane(k) => {
                        assert_eq!(f.generator_index, (k - 1) * (k - 1) + 1)
                    }
                    FactorKind::Cartan(a) => assert_eq!(f.generator_index, a * a - 1),
                }
            }
        }
    }

    #[test]
    fn factor_exponential_matches_eigendecomposition_exponential() {
        // exp(iλθ) from the Hermitian eigendecomposition of λ.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(2..=6usize);
            let seq = factor_sequence(n).unwrap();
            let f = seq.factors()[rng.gen_range(0..seq.factors().len())];
            let angle = (rng.gen::<f64>() - 0.5) * 4.0 * PI;

            let gs = make_generators(n).unwrap();
            let lambda = gs.lambda(f.generator_index);
            let (values, vectors) = lambda.hermitian_eigen();
            let mut phases = ComplexMatrix::zeros(n);
            for (i, &d) in values.iter().enumerate() {
                phases.set(i, i, Complex64::from_polar(1.0, d * angle));
            }
            let oracle = vectors.mul(&phases).mul(&vectors.dagger());

            let closed = factor_exponential(&f, angle, n);
            assert!(
                closed.max_abs_diff(&oracle) < 1e-12,
                "factor {:?} angle {angle}",
                f
            );
        }
    }

    #[test]
    fn lambda3_factor_at_zero_is_identity() {
        let f = EulerFactor {
            generator_index: 3,
            param_index: 1,
            kind: FactorKind::Lambda3,
        };
        let m = factor_exponential(&f, 0.0, 4);
        assert!(m.max_abs_diff(&ComplexMatrix::identity(4)) == 0.0);
    }

    #[test]
    fn su2_quarter_turn_gives_antidiagonal_rotation() {
        // exp(iλ3·0)·exp(iλ2·π/2) = [[0, 1], [−1, 0]].
        let p = ParamVector::new(2, vec![0.0, PI / 2.0, 0.0]).unwrap();
        let seq = factor_sequence(2).unwrap();
        let mut m = ComplexMatrix::identity(2);
        apply_factor_right(&mut m, &seq.factors()[0], 0.0);
        apply_factor_right(&mut m, &seq.factors()[1], p.alpha(2));
        assert!((m.get(0, 1) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((m.get(1, 0) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(m.get(0, 0).norm() < 1e-15);
    }

    #[test]
    fn unitary_at_zero_is_identity() {
        for n in 2..=6 {
            let u = unitary(n, &ParamVector::zeros(n).unwrap()).unwrap();
            assert!(u.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-15);
        }
    }

    #[test]
    fn su2_unitary_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let (t, f, s) = (
                rng.gen::<f64>() * PI,
                rng.gen::<f64>() * PI / 2.0,
                rng.gen::<f64>() * 2.0 * PI,
            );
            let u = unitary(2, &ParamVector::new(2, vec![t, f, s]).unwrap()).unwrap();
            let expected = ComplexMatrix::from_fn(2, |r, c| match (r, c) {
                (0, 0) => Complex64::from_polar(f.cos(), t + s),
                (0, 1) => Complex64::from_polar(f.sin(), t - s),
                (1, 0) => -Complex64::from_polar(f.sin(), -t + s),
                _ => Complex64::from_polar(f.cos(), -(t + s)),
            });
            assert!(u.max_abs_diff(&expected) < 1e-14);
        }
    }

    #[test]
    fn unitary_matches_dense_factor_product() {
        // The O(N)-per-factor column updates against plain dense multiplies.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 2..=6 {
            let p = random_params(n, &mut rng);
            let fast = unitary(n, &p).unwrap();
            let seq = factor_sequence(n).unwrap();
            let mut dense = ComplexMatrix::identity(n);
            for f in seq.factors() {
                dense = dense.mul(&factor_exponential(f, p.alpha(f.param_index), n));
            }
            assert!(fast.max_abs_diff(&dense) < 1e-13);
        }
    }

    #[test]
    fn transpose_and_dagger_agree_with_direct_operations() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in 2..=6 {
            let p = random_params(n, &mut rng);
            let u = unitary(n, &p).unwrap();
            let ut = unitary_transpose(n, &p).unwrap();
            let ud = unitary_dagger(n, &p).unwrap();
            assert!(ut.max_abs_diff(&u.transpose()) < 1e-12);
            assert!(ud.max_abs_diff(&u.dagger()) < 1e-12);
            assert!(
                u.mul(&ud).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12,
                "U·U† ≠ I at n={n}"
            );
        }
    }

    #[test]
    fn param_vector_validates_length() {
        assert!(matches!(
            ParamVector::new(3, vec![0.0; 7]),
            Err(Error::ParamLength {
                n: 3,
                expected: 8,
                got: 7
            })
        ));
        let p = ParamVector::zeros(2).unwrap();
        assert!(matches!(unitary(3, &p), Err(Error::ParamLength { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn unitary_is_special_unitary(n in 2usize..=7, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_params(n, &mut rng);
            let u = unitary(n, &p).unwrap();
            let gram = u.dagger().mul(&u);
            prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-11);
            prop_assert!((u.det() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
    }
}
