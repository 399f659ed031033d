use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{dim_cap, EngineError};
use crate::field::Field;
use crate::linalg::Matrix;

/// Sorted, zero-free list of `(basis index, coefficient)` pairs.
pub type SparseVec<E> = Vec<(usize, E)>;

/// A finite-dimensional unital algebra given by structure constants.
///
/// The product of basis elements `i` and `j` is stored as a sparse vector;
/// products of general elements are the bilinear extension. The table also
/// records a set of elements that generate the algebra, so that the center
/// can be computed from commutators with generators only.
#[derive(Debug, Clone)]
pub struct AlgebraTable<F: Field> {
    field: F,
    dim: usize,
    offsets: Vec<usize>,
    entries: Vec<(u32, F::Elem)>,
    unit: Vec<F::Elem>,
    generators: Vec<Vec<F::Elem>>,
}

impl<F: Field> AlgebraTable<F> {
    pub fn from_fn(
        field: F,
        dim: usize,
        unit: Vec<F::Elem>,
        generators: Vec<Vec<F::Elem>>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, F::Elem)>,
    ) -> Result<Self, EngineError> {
        if dim > dim_cap() {
            return Err(EngineError::DimensionCapExceeded { dim, cap: dim_cap() });
        }
        if unit.len() != dim {
            return Err(EngineError::DimensionMismatch {
                expected: dim,
                got: unit.len(),
            });
        }
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(EngineError::DimensionMismatch {
                expected: dim,
                got: g.len(),
            });
        }
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::with_capacity(dim * dim);
        offsets.push(0);
        for i in 0..dim {
            for j in 0..dim {
                let mut prod = product(i, j);
                prod.sort_by_key(|(k, _)| *k);
                let mut merged: Vec<(u32, F::Elem)> = Vec::with_capacity(prod.len());
                for (k, c) in prod {
                    match merged.last_mut() {
                        Some((last, acc)) if *last as usize == k => *acc = field.add(acc, &c),
                        _ => merged.push((k as u32, c)),
                    }
                }
                entries.extend(merged.into_iter().filter(|(_, c)| !field.is_zero(c)));
                offsets.push(entries.len());
            }
        }
        Ok(AlgebraTable {
            field,
            dim,
            offsets,
            entries,
            unit,
            generators,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn generators(&self) -> &[Vec<F::Elem>] {
        &self.generators
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(u32, F::Elem)] {
        let k = i * self.dim + j;
        &self.entries[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
                let ab = f.mul(a, b);
                for (k, c) in self.basis_product(i, j) {
                    let k = *k as usize;
                    out[k] = f.add(&out[k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    pub fn mul_sparse(&self, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = f.mul(a, b);
                for (k, c) in self.basis_product(*i, *j) {
                    let term = f.mul(&ab, c);
                    let slot = acc.entry(*k as usize).or_insert_with(|| f.zero());
                    *slot = f.add(slot, &term);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    pub fn to_sparse(&self, x: &[F::Elem]) -> SparseVec<F::Elem> {
        x.iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub fn to_dense(&self, x: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let mut v = self.zero_vector();
        for (i, c) in x {
            v[*i] = c.clone();
        }
        v
    }

    /// Matrix of `y -> x*y` in the basis (column `j` is `x * b_j`).
    pub fn left_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        self.mul_matrix(x, true)
    }

    /// Matrix of `y -> y*x`.
    pub fn right_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        self.mul_matrix(x, false)
    }

    fn mul_matrix(&self, x: &[F::Elem], left: bool) -> Matrix<F::Elem> {
        let f = &self.field;
        let mut m = Matrix::filled(self.dim, self.dim, f.zero());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for j in 0..self.dim {
                let prod = if left {
                    self.basis_product(i, j)
                } else {
                    self.basis_product(j, i)
                };
                for (k, c) in prod {
                    let k = *k as usize;
                    let v = f.add(m.get(k, j), &f.mul(a, c));
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Left-multiplication operators `L_{b_i}` for every basis element.
    pub fn regular_representation(&self) -> Result<Vec<Matrix<F::Elem>>, EngineError> {
        if self.dim > dim_cap() {
            return Err(EngineError::DimensionCapExceeded {
                dim: self.dim,
                cap: dim_cap(),
            });
        }
        Ok((0..self.dim)
            .map(|i| self.left_mul_matrix(&self.basis_vector(i)))
            .collect())
    }

    /// Whether the recorded unit is a two-sided identity on every basis
    /// element.
    pub fn unit_is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    /// `trace(L_{b_k})` for every basis element.
    pub fn basis_traces(&self) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(f.zero(), |acc, j| {
                    match self.basis_product(k, j).iter().find(|(i, _)| *i as usize == j) {
                        Some((_, c)) => f.add(&acc, c),
                        None => acc,
                    }
                })
            })
            .collect()
    }

    /// Text dump, one line per basis pair: `i j -> c_0,...,c_{dim-1}`.
    pub fn dump(&self) -> String
    where
        F::Elem: std::fmt::Display,
    {
        let mut out = String::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let dense = self.to_dense(
                    &self
                        .basis_product(i, j)
                        .iter()
                        .map(|(k, c)| (*k as usize, c.clone()))
                        .collect::<Vec<_>>(),
                );
                let coeffs: Vec<String> = dense.iter().map(|c| c.to_string()).collect();
                writeln!(out, "{i} {j} -> {}", coeffs.join(",")).expect("writing to a String");
            }
        }
        out
    }
}

fn kron<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().flat_map(|x| b.iter().map(move |y| f.mul(x, y))).collect()
}

/// Plain (ungraded) tensor product: `(a⊗b)(c⊗d) = ac ⊗ bd`, basis index
/// `i * dim(B) + j`.
pub fn tensor_table<F: Field>(a: &AlgebraTable<F>, b: &AlgebraTable<F>) -> Result<AlgebraTable<F>, EngineError> {
    let f = a.field.clone();
    let db = b.dim;
    let dim = a.dim * db;
    if dim > dim_cap() {
        return Err(EngineError::DimensionCapExceeded { dim, cap: dim_cap() });
    }
    let unit = kron(&f, &a.unit, &b.unit);
    let generators = a
        .generators
        .iter()
        .map(|g| kron(&f, g, &b.unit))
        .chain(b.generators.iter().map(|g| kron(&f, &a.unit, g)))
        .collect();
    AlgebraTable::from_fn(f.clone(), dim, unit, generators, |x, y| {
        let (ai, bi) = (x / db, x % db);
        let (aj, bj) = (y / db, y % db);
        let mut out = Vec::new();
        for (k, c) in a.basis_product(ai, aj) {
            for (l, d) in b.basis_product(bi, bj) {
                out.push((*k as usize * db + *l as usize, f.mul(c, d)));
            }
        }
        out
    })
}

/// Direct product `A × B`, basis of `A` followed by basis of `B`.
pub fn direct_product_table<F: Field>(
    a: &AlgebraTable<F>,
    b: &AlgebraTable<F>,
) -> Result<AlgebraTable<F>, EngineError> {
    let f = a.field.clone();
    let (da, db) = (a.dim, b.dim);
    let embed_a = |v: &[F::Elem]| -> Vec<F::Elem> { v.iter().cloned().chain((0..db).map(|_| f.zero())).collect() };
    let embed_b = |v: &[F::Elem]| -> Vec<F::Elem> { (0..da).map(|_| f.zero()).chain(v.iter().cloned()).collect() };
    let unit: Vec<F::Elem> = a.unit.iter().chain(b.unit.iter()).cloned().collect();
    let mut generators = vec![embed_a(&a.unit)];
    generators.extend(a.generators.iter().map(|g| embed_a(g)));
    generators.extend(b.generators.iter().map(|g| embed_b(g)));
    AlgebraTable::from_fn(f.clone(), da + db, unit, generators, |x, y| {
        if x < da && y < da {
            a.basis_product(x, y)
                .iter()
                .map(|(k, c)| (*k as usize, c.clone()))
                .collect()
        } else if x >= da && y >= da {
            b.basis_product(x - da, y - da)
                .iter()
                .map(|(k, c)| (*k as usize + da, c.clone()))
                .collect()
        } else {
            Vec::new()
        }
    })
}

/// Full matrix algebra `M_n(k)` on matrix units, `E_rc` at index `r*n + c`.
pub fn matrix_algebra_table<F: Field>(field: &F, n: usize) -> Result<AlgebraTable<F>, EngineError> {
    let dim = n * n;
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let generators = (0..dim)
        .map(|i| {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            v
        })
        .collect();
    AlgebraTable::from_fn(field.clone(), dim, unit, generators, |x, y| {
        let (r, c) = (x / n, x % n);
        let (r2, c2) = (y / n, y % n);
        if c == r2 {
            vec![(r * n + c2, field.one())]
        } else {
            Vec::new()
        }
    })
}
