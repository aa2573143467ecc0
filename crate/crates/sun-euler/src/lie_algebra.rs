//! The su(N) generator basis, structure constants, and the L(K)/L(P)
//! index split.
//!
//! Generators are Hermitian, traceless, and normalized to
//! `Tr[λ_i λ_j] = 2δ_ij`. The ordering walks levels m = 2..N: for each
//! i < m the symmetric pair generator of the (i, m) plane comes first,
//! then the antisymmetric one, and the level closes with the diagonal
//! generator λ_{m²−1}. This puts the antisymmetric (1, k)-plane generator
//! at index (k−1)²+1 — λ2, λ5, λ10, λ17, λ26, λ37, λ50, λ65 — which is the
//! indexing every other module relies on.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// The N²−1 basis matrices of su(N), addressed 1-based as λ_1..λ_{N²−1}.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    n: usize,
    generators: Vec<ComplexMatrix>,
}

/// Sparse structure constants f_ijk with `[λ_i, λ_j] = 2i f_ijk λ_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    n: usize,
    /// Canonical entries for i < j < k only; `get` restores the sign.
    f: HashMap<(u16, u16, u16), f64>,
}

/// Generator indices of the subalgebra pair L(K), L(P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSplit {
    pub k_indices: Vec<usize>,
    pub p_indices: Vec<usize>,
    /// True for N = 2, where the construction degenerates and the split
    /// is fixed by hand as k = {3}, p = {1, 2}.
    pub degenerate: bool,
}

/// JSON export form of one generator.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorJson {
    pub n: usize,
    pub index: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// Diagonal scale of λ_{a²−1}: √(2/(a²−a)).
pub(crate) fn cartan_scale(a: usize) -> f64 {
    (2.0 / ((a * a - a) as f64)).sqrt()
}

/// Symmetric pair generator of the (i, j) plane, 1-based positions, i < j.
fn symmetric_generator(n: usize, i: usize, j: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    m.set(i - 1, j - 1, Complex64::new(1.0, 0.0));
    m.set(j - 1, i - 1, Complex64::new(1.0, 0.0));
    m
}

/// Antisymmetric pair generator of the (i, j) plane: (i,j) = −i, (j,i) = +i.
fn antisymmetric_generator(n: usize, i: usize, j: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    m.set(i - 1, j - 1, Complex64::new(0.0, -1.0));
    m.set(j - 1, i - 1, Complex64::new(0.0, 1.0));
    m
}

/// Diagonal generator λ_{a²−1} = √(2/(a²−a))·diag(1,…,1,−(a−1),0,…,0).
fn diagonal_generator(n: usize, a: usize) -> ComplexMatrix {
    let s = cartan_scale(a);
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..a - 1 {
        m.set(i, i, Complex64::new(s, 0.0));
    }
    m.set(a - 1, a - 1, Complex64::new(-((a - 1) as f64) * s, 0.0));
    m
}

/// Build the ordered su(N) basis.
pub fn make_generators(n: usize) -> Result<GeneratorSet> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut generators = Vec::with_capacity(n * n - 1);
    for level in 2..=n {
        for i in 1..level {
            generators.push(symmetric_generator(n, i, level));
            generators.push(antisymmetric_generator(n, i, level));
        }
        generators.push(diagonal_generator(n, level));
    }
    debug_assert_eq!(generators.len(), n * n - 1);
    Ok(GeneratorSet { n, generators })
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.generators.len()
    }

    /// λ_index, 1-based. Panics if the index is outside 1..=N²−1.
    pub fn lambda(&self, index: usize) -> &ComplexMatrix {
        assert!(
            (1..=self.generators.len()).contains(&index),
            "generator index {index} outside 1..={}",
            self.generators.len()
        );
        &self.generators[index - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ComplexMatrix)> {
        self.generators.iter().enumerate().map(|(i, m)| (i + 1, m))
    }

    pub fn to_json(&self) -> Vec<GeneratorJson> {
        self.iter()
            .map(|(index, m)| {
                let parts = m.to_parts();
                GeneratorJson {
                    n: self.n,
                    index,
                    re: parts.re,
                    im: parts.im,
                }
            })
            .collect()
    }
}

/// f_ijk = 1/(4i) · Tr[[λ_i, λ_j] λ_k], computed for all triples and kept
/// sparsely above 1e−12.
pub fn structure_constants(gs: &GeneratorSet) -> StructureConstants {
    let count = gs.count();
    let mut f = HashMap::new();
    let quarter = Complex64::new(0.0, -0.25); // 1/(4i)
    for i in 1..=count {
        for j in i + 1..=count {
            let comm = gs.lambda(i).commutator(gs.lambda(j));
            for k in j + 1..=count {
                let value = (quarter * comm.trace_of_product(gs.lambda(k))).re;
                if value.abs() > 1e-12 {
                    f.insert((i as u16, j as u16, k as u16), value);
                }
            }
        }
    }
    StructureConstants { n: gs.n(), f }
}

impl StructureConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored canonical (i < j < k) entries.
    pub fn stored_len(&self) -> usize {
        self.f.len()
    }

    pub fn iter_canonical(&self) -> impl Iterator<Item = ((usize, usize, usize), f64)> + '_ {
        self.f
            .iter()
            .map(|(&(i, j, k), &v)| ((i as usize, j as usize, k as usize), v))
    }

    /// f_ijk for any index order; zero on repeated indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        if i == j || j == k || i == k {
            return 0.0;
        }
        let mut idx = [i, j, k];
        let mut sign = 1.0;
        // Three-element sort, tracking permutation parity.
        if idx[0] > idx[1] {
            idx.swap(0, 1);
            sign = -sign;
        }
        if idx[1] > idx[2] {
            idx.swap(1, 2);
            sign = -sign;
        }
        if idx[0] > idx[1] {
            idx.swap(0, 1);
            sign = -sign;
        }
        sign * self
            .f
            .get(&(idx[0] as u16, idx[1] as u16, idx[2] as u16))
            .copied()
            .unwrap_or(0.0)
    }
}

/// Index split L(K) = {1..(N−1)²−1, N²−1}, L(P) = {(N−1)²..N²−2}.
pub fn cartan_split(n: usize) -> Result<CartanSplit> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if n == 2 {
        return Ok(CartanSplit {
            k_indices: vec![3],
            p_indices: vec![1, 2],
            degenerate: true,
        });
    }
    let mut k_indices: Vec<usize> = (1..=(n - 1) * (n - 1) - 1).collect();
    k_indices.push(n * n - 1);
    let p_indices: Vec<usize> = ((n - 1) * (n - 1)..=n * n - 2).collect();
    Ok(CartanSplit {
        k_indices,
        p_indices,
        degenerate: false,
    })
}
