//! Dense exact linear algebra: row echelon forms, rank and nullspaces over
//! any [`Field`], plus fraction-free integer elimination for rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{ExactRational, Field};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<E>], zero: E) -> Self {
        let cols = columns.len();
        let mut data = vec![zero; rows * cols];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (i, v) in col.iter().enumerate() {
                data[i * cols + j] = v.clone();
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[E]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::filled(n, n, field.zero());
    for i in 0..n {
        m.set(i, i, field.one());
    }
    m
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    let mut out = Matrix::filled(a.rows, b.cols, field.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if field.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if field.is_zero(bkj) {
                    continue;
                }
                let idx = i * out.cols + j;
                out.data[idx] = field.add(&out.data[idx], &field.mul(aik, bkj));
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    (0..a.rows)
        .map(|i| {
            a.row(i).iter().zip(v).fold(field.zero(), |acc, (x, y)| {
                if field.is_zero(x) || field.is_zero(y) {
                    acc
                } else {
                    field.add(&acc, &field.mul(x, y))
                }
            })
        })
        .collect()
}

/// Reduced row echelon basis of a row space, built one row at a time.
///
/// Every stored row has a leading 1 in its pivot column and zeros in every
/// other stored pivot column.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivot_rows(&self) -> &[(usize, Vec<F::Elem>)] {
        &self.rows
    }

    /// Reduces `row` against the basis; returns true if it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let f = &self.field;
        for (pivot, basis_row) in &self.rows {
            let c = row[*pivot].clone();
            if f.is_zero(&c) {
                continue;
            }
            axpy(f, &mut row, &c, basis_row);
        }
        let Some(pivot) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let scale = f.inv(&row[pivot]).expect("nonzero pivot");
        for x in row.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &scale);
            }
        }
        for (_, basis_row) in self.rows.iter_mut() {
            let c = basis_row[pivot].clone();
            if !f.is_zero(&c) {
                axpy(f, basis_row, &c, &row);
            }
        }
        self.rows.push((pivot, row));
        true
    }

    /// Basis of `{x : r . x = 0 for every stored row r}`.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (p, row) in &self.rows {
                    v[*p] = f.neg(&row[free]);
                }
                v
            })
            .collect()
    }
}

/// `row -= c * other`, skipping zero entries of `other`.
fn axpy<F: Field>(f: &F, row: &mut [F::Elem], c: &F::Elem, other: &[F::Elem]) {
    for (x, y) in row.iter_mut().zip(other) {
        if !f.is_zero(y) {
            *x = f.sub(x, &f.mul(c, y));
        }
    }
}

pub fn gaussian_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut ech = Echelon::new(field.clone(), m.cols);
    for row in m.row_vectors() {
        if ech.is_full() {
            break;
        }
        ech.insert(row.to_vec());
    }
    ech.rank()
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    field.rank(m)
}

/// Right nullspace `{x : m x = 0}`.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut ech = Echelon::new(field.clone(), m.cols);
    for row in m.row_vectors() {
        ech.insert(row.to_vec());
    }
    ech.nullspace()
}

/// Rank of a rational matrix by fraction-free elimination over the integers.
///
/// Each row is first cleared of denominators. Elimination uses
/// `row_i <- p * row_i - a * row_k` and then divides the row by its content,
/// so entries stay small and rows with a zero in the pivot column are never
/// touched.
pub fn fraction_free_rank(m: &Matrix<ExactRational>) -> usize {
    let mut rows: Vec<Vec<BigInt>> = m
        .row_vectors()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let cols = m.cols;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let prow = &done[rank];
        let p = &prow[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            let g = p.gcd(&a);
            let (ps, as_) = (p / &g, &a / &g);
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &ps;
                    }
                } else {
                    *x = &*x * &ps - &as_ * y;
                }
            }
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.abs().is_one() {
                for x in row.iter_mut() {
                    *x /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}
