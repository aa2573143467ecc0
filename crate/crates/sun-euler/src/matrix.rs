//! Dense complex matrices sized for SU(N) work (N ≤ 9, coefficient matrices
//! up to (N²−1)×(N²−1)).
//!
//! Everything here is straightforward dense linear algebra: row-major
//! storage, LU determinants with partial pivoting, and a cyclic Jacobi
//! eigensolver for Hermitian matrices.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

/// Real/imaginary split of a matrix, the JSON wire form used everywhere.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixParts {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= z;
        }
        out
    }

    /// Commutator `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `Tr(self · rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> Complex64 {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut t = Complex64::new(0.0, 0.0);
        for a in 0..n {
            for b in 0..n {
                t += self.get(a, b) * rhs.get(b, a);
            }
        }
        t
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let (pivot_row, pivot_mag) = (col..n)
                .map(|r| (r, a[r * n + col].norm()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_mag == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot_row != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot_row * n + c);
                }
                det = -det;
            }
            let pivot = a[col * n + col];
            det *= pivot;
            for r in col + 1..n {
                let factor = a[r * n + col] / pivot;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for c in col..n {
                    let sub = factor * a[col * n + c];
                    a[r * n + c] -= sub;
                }
            }
        }
        det
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        self.hermitian_eigen().0
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
    ///
    /// Returns ascending eigenvalues and the unitary whose columns are the
    /// matching eigenvectors, so `self · v_j = d_j · v_j`.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, ComplexMatrix) {
        let n = self.dim;
        let mut a = self.clone();
        let mut v = Self::identity(n);
        let scale = self.frobenius().max(f64::MIN_POSITIVE);

        for _sweep in 0..100 {
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += a.get(p, q).norm_sqr();
                }
            }
            if off.sqrt() <= 1e-15 * scale {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a.get(p, q);
                    let g = apq.norm();
                    if g == 0.0 {
                        continue;
                    }
                    let alpha = a.get(p, p).re;
                    let beta = a.get(q, q).re;
                    let phase = apq / g;
                    let tau = (beta - alpha) / (2.0 * g);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    // Unitary G: identity except
                    //   G[p][p] = c          G[p][q] = s
                    //   G[q][p] = −s·ē       G[q][q] = c·ē      (ē = conj(phase))
                    // Row update applies G†, column update applies G.
                    for col in 0..n {
                        let rp = a.get(p, col);
                        let rq = a.get(q, col);
                        a.set(p, col, c * rp - s * phase * rq);
                        a.set(q, col, s * rp + c * phase * rq);
                    }
                    let e = phase.conj();
                    for row in 0..n {
                        let cp = a.get(row, p);
                        let cq = a.get(row, q);
                        a.set(row, p, c * cp - s * e * cq);
                        a.set(row, q, s * cp + c * e * cq);
                        let vp = v.get(row, p);
                        let vq = v.get(row, q);
                        v.set(row, p, c * vp - s * e * vq);
                        v.set(row, q, s * vp + c * e * vq);
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
        let values = order.iter().map(|&i| a.get(i, i).re).collect();
        let vectors = Self::from_fn(n, |r, c| v.get(r, order[c]));
        (values, vectors)
    }

    fn frobenius(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Scale a column in place (right multiplication by a diagonal factor).
    pub(crate) fn scale_column(&mut self, col: usize, z: Complex64) {
        for row in 0..self.dim {
            let v = self.get(row, col) * z;
            self.set(row, col, v);
        }
    }

    /// Right-multiply by a plane rotation acting on columns `c0`, `c1`:
    /// `col0' = cos·col0 − sin·col1`, `col1' = sin·col0 + cos·col1`.
    pub(crate) fn rotate_columns(&mut self, c0: usize, c1: usize, cos: f64, sin: f64) {
        for row in 0..self.dim {
            let a = self.get(row, c0);
            let b = self.get(row, c1);
            self.set(row, c0, cos * a - sin * b);
            self.set(row, c1, sin * a + cos * b);
        }
    }

    pub fn to_parts(&self) -> MatrixParts {
        let n = self.dim;
        let mut re = vec![vec![0.0; n]; n];
        let mut im = vec![vec![0.0; n]; n];
        for r in 0..n {
            for c in 0..n {
                let z = self.get(r, c);
                re[r][c] = z.re;
                im[r][c] = z.im;
            }
        }
        MatrixParts { re, im }
    }

    pub fn from_parts(parts: &MatrixParts) -> Result<Self> {
        let n = parts.re.len();
        if parts.im.len() != n
            || parts.re.iter().any(|row| row.len() != n)
            || parts.im.iter().any(|row| row.len() != n)
        {
            return Err(Error::InvalidArgument(
                "re/im arrays must be square and of equal size".into(),
            ));
        }
        Ok(Self::from_fn(n, |r, c| {
            Complex64::new(parts.re[r][c], parts.im[r][c])
        }))
    }
}

/// Determinant of a real square matrix (row-major) via LU with partial
/// pivoting. Consumes the buffer.
pub fn real_det(mut a: Vec<f64>, n: usize) -> f64 {
    assert_eq!(a.len(), n * n);
    let mut det = 1.0;
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[r * n + col].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_mag == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for c in 0..n {
                a.swap(col * n + c, pivot_row * n + c);
            }
            det = -det;
        }
        let pivot = a[col * n + col];
        det *= pivot;
        for r in col + 1..n {
            let factor = a[r * n + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                a[r * n + c] -= factor * a[col * n + c];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, |_, _| {
            Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        })
    }

    fn random_hermitian(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
        let b = random_matrix(n, rng);
        b.add(&b.dagger()).scale(Complex64::new(0.5, 0.0))
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_matrix(4, &mut rng);
        let id = ComplexMatrix::identity(4);
        assert!(a.mul(&id).max_abs_diff(&a) < 1e-15);
        assert!(id.mul(&a).max_abs_diff(&a) < 1e-15);
    }

    #[test]
    fn det_matches_two_by_two_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let a = random_matrix(2, &mut rng);
            let expected = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
            assert!((a.det() - expected).norm() < 1e-13);
        }
    }

    #[test]
    fn det_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..6 {
            let a = random_matrix(n, &mut rng);
            let b = random_matrix(n, &mut rng);
            let lhs = a.mul(&b).det();
            let rhs = a.det() * b.det();
            assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn real_det_matches_complex_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 2..8 {
            let data: Vec<f64> = (0..n * n).map(|_| rng.gen::<f64>() - 0.5).collect();
            let as_complex = ComplexMatrix::from_fn(n, |r, c| {
                Complex64::new(data[r * n + c], 0.0)
            });
            let d = real_det(data, n);
            assert!((as_complex.det().re - d).abs() < 1e-11 * (1.0 + d.abs()));
        }
    }

    #[test]
    fn hermitian_eigen_reconstructs_and_solves() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..10 {
            let a = random_hermitian(n, &mut rng);
            let (values, vectors) = a.hermitian_eigen();
            // Eigenvector residuals.
            for (j, &d) in values.iter().enumerate() {
                for r in 0..n {
                    let mut av = Complex64::new(0.0, 0.0);
                    for k in 0..n {
                        av += a.get(r, k) * vectors.get(k, j);
                    }
                    let resid = (av - d * vectors.get(r, j)).norm();
                    assert!(resid < 1e-11, "residual {resid} at n={n}");
                }
            }
            // V is unitary.
            let vtv = vectors.dagger().mul(&vectors);
            assert!(vtv.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
            // Trace and det invariants.
            let tr: f64 = values.iter().sum();
            assert!((tr - a.trace().re).abs() < 1e-11);
            let prod: f64 = values.iter().product();
            assert!((prod - a.det().re).abs() < 1e-10 * (1.0 + prod.abs()));
            // Ascending order.
            for w in values.windows(2) {
                assert!(w[0] <= w[1] + 1e-14);
            }
        }
    }

    #[test]
    fn column_ops_match_dense_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let n = 5;
        let a = random_matrix(n, &mut rng);
        let (cos, sin) = (0.3f64.cos(), 0.3f64.sin());

        let mut fast = a.clone();
        fast.rotate_columns(0, 3, cos, sin);
        let mut rot = ComplexMatrix::identity(n);
        rot.set(0, 0, Complex64::new(cos, 0.0));
        rot.set(0, 3, Complex64::new(sin, 0.0));
        rot.set(3, 0, Complex64::new(-sin, 0.0));
        rot.set(3, 3, Complex64::new(cos, 0.0));
        assert!(fast.max_abs_diff(&a.mul(&rot)) < 1e-14);

        let z = Complex64::from_polar(1.0, 0.7);
        let mut scaled = a.clone();
        scaled.scale_column(2, z);
        let mut diag = ComplexMatrix::identity(n);
        diag.set(2, 2, z);
        assert!(scaled.max_abs_diff(&a.mul(&diag)) < 1e-14);
    }

    #[test]
    fn parts_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_matrix(3, &mut rng);
        let back = ComplexMatrix::from_parts(&a.to_parts()).unwrap();
        assert!(a.max_abs_diff(&back) == 0.0);
    }
}
