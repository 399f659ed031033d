//! Clifford algebras by structure constants on the subset-bitmask basis.
//!
//! Basis element `e_S` for `S ⊆ {1..n}` is stored as the bitmask with bit
//! `i-1` set when `e_i` occurs; the product of two basis elements is a single
//! signed, scaled basis element.

mod hom;
mod table;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::Field;
use crate::form::DiagonalForm;

pub use hom::{extend_generator_map, verify_linear_iso};
pub use table::{direct_product_table, matrix_algebra_table, tensor_table, AlgebraTable, SparseVec};

pub const DEFAULT_RANK_CAP: usize = 12;

/// Largest supported Clifford rank: `QK0_RANK_CAP` when set to a valid
/// number, otherwise [`DEFAULT_RANK_CAP`]. Never above 16.
pub fn rank_cap() -> usize {
    std::env::var("QK0_RANK_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
        .min(16)
}

/// Largest supported algebra dimension, `2^rank_cap()`.
pub fn dim_cap() -> usize {
    1 << rank_cap()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("rank {rank} exceeds the engine cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Clifford relation violated for generators ({i},{j})")]
    RelationViolated { i: usize, j: usize },
    #[error("map is not multiplicative on basis pair ({i},{j})")]
    NotAHomomorphism { i: usize, j: usize },
    #[error("map does not send the unit to the unit")]
    UnitNotPreserved,
    #[error("map has rank {rank} but dimension {dim}")]
    NotBijective { rank: usize, dim: usize },
}

/// Parity of the number of transpositions needed to bring the concatenated
/// index word `S ++ T` into ascending order: pairs `(i in S, j in T)` with
/// `i > j`. Returns `true` when the count is odd.
#[inline]
pub fn reorder_is_odd(s: u32, t: u32) -> bool {
    let mut shifted = s >> 1;
    let mut count = 0u32;
    while shifted != 0 {
        count += (shifted & t).count_ones();
        shifted >>= 1;
    }
    count & 1 == 1
}

/// Parameters of `C(q)` for a diagonal form `q`: `e_i^2 = a_i` and distinct
/// generators anticommute.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordSpec<F: Field> {
    form: DiagonalForm<F>,
}

impl<F: Field> CliffordSpec<F> {
    pub fn new(form: DiagonalForm<F>) -> Result<Self, EngineError> {
        Self::with_rank_cap(form, rank_cap())
    }

    pub fn with_rank_cap(form: DiagonalForm<F>, cap: usize) -> Result<Self, EngineError> {
        let cap = cap.min(16);
        if form.rank() > cap {
            return Err(EngineError::RankCapExceeded { rank: form.rank(), cap });
        }
        Ok(CliffordSpec { form })
    }

    pub fn field(&self) -> &F {
        self.form.field()
    }

    pub fn form(&self) -> &DiagonalForm<F> {
        &self.form
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        self.form.coeffs()
    }

    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn dim(&self) -> usize {
        1 << self.rank()
    }

    /// `e_S * e_T = scalar * e_{S xor T}`.
    pub fn basis_mul(&self, s: u32, t: u32) -> (F::Elem, u32) {
        let f = self.field();
        let mut scalar = f.one();
        let mut common = s & t;
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            scalar = f.mul(&scalar, &self.coeffs()[i]);
            common &= common - 1;
        }
        if reorder_is_odd(s, t) {
            scalar = f.neg(&scalar);
        }
        (scalar, s ^ t)
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(&self, i: usize) -> CliffordElement<F> {
        assert!(i >= 1 && i <= self.rank(), "generator index out of range");
        CliffordElement::basis(self.field(), 1 << (i - 1))
    }

    pub fn unit(&self) -> CliffordElement<F> {
        CliffordElement::basis(self.field(), 0)
    }

    pub fn mul(&self, x: &CliffordElement<F>, y: &CliffordElement<F>) -> CliffordElement<F> {
        let f = self.field();
        let mut acc = vec![f.zero(); self.dim()];
        for (&s, a) in &x.terms {
            for (&t, b) in &y.terms {
                let (c, u) = self.basis_mul(s, t);
                let slot = &mut acc[u as usize];
                *slot = f.add(slot, &f.mul(&f.mul(a, b), &c));
            }
        }
        CliffordElement::from_dense(f, &acc)
    }

    pub fn table(&self) -> Result<AlgebraTable<F>, EngineError> {
        let f = self.field().clone();
        let dim = self.dim();
        let mut unit = vec![f.zero(); dim];
        unit[0] = f.one();
        let generators = (0..self.rank())
            .map(|i| {
                let mut v = vec![f.zero(); dim];
                v[1 << i] = f.one();
                v
            })
            .collect();
        AlgebraTable::from_fn(f, dim, unit, generators, |i, j| {
            let (c, u) = self.basis_mul(i as u32, j as u32);
            vec![(u as usize, c)]
        })
    }
}

/// Sparse element of a Clifford algebra keyed by basis bitmask. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement<F: Field> {
    terms: BTreeMap<u32, F::Elem>,
}

impl<F: Field> CliffordElement<F> {
    pub fn zero() -> Self {
        CliffordElement { terms: BTreeMap::new() }
    }

    pub fn basis(field: &F, mask: u32) -> Self {
        Self::monomial(field, mask, field.one())
    }

    pub fn monomial(field: &F, mask: u32, coeff: F::Elem) -> Self {
        let mut x = Self::zero();
        x.add_term(field, mask, coeff);
        x
    }

    pub fn scalar(field: &F, c: F::Elem) -> Self {
        Self::monomial(field, 0, c)
    }

    pub fn from_dense(field: &F, v: &[F::Elem]) -> Self {
        let mut x = Self::zero();
        for (i, c) in v.iter().enumerate() {
            x.add_term(field, i as u32, c.clone());
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, field: &F, mask: u32) -> F::Elem {
        self.terms.get(&mask).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &F::Elem)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn add_term(&mut self, field: &F, mask: u32, coeff: F::Elem) {
        if field.is_zero(&coeff) {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(c) => {
                *c = field.add(c, &coeff);
                if field.is_zero(c) {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, coeff);
            }
        }
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(field, m, c.clone());
        }
        out
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        let mut out = Self::zero();
        for (&m, a) in &self.terms {
            out.add_term(field, m, field.mul(c, a));
        }
        out
    }

    pub fn to_dense(&self, field: &F, dim: usize) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); dim];
        for (&m, c) in &self.terms {
            v[m as usize] = c.clone();
        }
        v
    }
}
