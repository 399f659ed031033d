//! Brute-force Wedderburn classification of semisimple algebras over `F_p`
//! whose center has dimension at most 2.
//!
//! Over a finite field every simple algebra is `M_m(F_{p^e})`, so a report is
//! a list of `(m, e)` pairs. The center is found as the common kernel of the
//! commutator maps `x -> gx - xg` for the table's generators. Semisimplicity
//! is certified by the trace form `T(x, y) = tr(L_{xy})`, which is
//! nondegenerate for the algebras classified here because `p` never divides
//! their (power of two) matrix sizes.

use std::fmt;

use thiserror::Error;

use crate::clifford::AlgebraTable;
use crate::field::{is_square, sqrt_mod_p, Field, PrimeField, Residue};
use crate::linalg::{self, Echelon, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("center has dimension {0}; only dimensions 1 and 2 are supported")]
    CenterTooLarge(usize),
    #[error("trace form has rank {rank} < dim {dim}: not semisimple")]
    NotSemisimple { rank: usize, dim: usize },
    #[error("block dimension {0} is not m^2 * e for an integer m")]
    NotAPerfectSquare(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// `M_m(F_{p^e})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor {
    pub matrix_size: usize,
    pub center_degree: usize,
}

impl SimpleFactor {
    /// Dimension over `F_p` of the simple module `F_{p^e}^m`.
    pub fn simple_module_dim(self) -> usize {
        self.matrix_size * self.center_degree
    }

    /// Dimension over `F_p` of the factor itself.
    pub fn dim(self) -> usize {
        self.matrix_size * self.matrix_size * self.center_degree
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}(F_p^{})", self.matrix_size, self.center_degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnReport {
    pub factors: Vec<SimpleFactor>,
    pub trace_form_rank: usize,
    pub center_dim: usize,
}

impl WedderburnReport {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum()
    }
}

impl fmt::Display for WedderburnReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

/// How the center of an algebra with center dimension at most 2 looks.
#[derive(Debug, Clone, PartialEq)]
pub enum CentralDecomposition {
    /// Center is the ground field; the only central idempotent is 1.
    Scalar,
    /// Center `≅ F_p × F_p`: two orthogonal central idempotents summing to 1.
    Split([Vec<Residue>; 2]),
    /// Center `≅ F_{p^2}`: a non-scalar central element whose minimal
    /// polynomial has the given non-square discriminant.
    QuadraticField { discriminant: Residue },
}

pub fn center_basis(a: &AlgebraTable<PrimeField>) -> Vec<Vec<Residue>> {
    let f = *a.field();
    let mut ech = Echelon::new(f, a.dim());
    for g in a.generators() {
        let left = a.left_mul_matrix(g);
        let right = a.right_mul_matrix(g);
        for k in 0..a.dim() {
            let row: Vec<Residue> = left.row(k).iter().zip(right.row(k)).map(|(x, y)| *x - *y).collect();
            if row.iter().any(|x| !x.is_zero()) {
                ech.insert(row);
            }
        }
    }
    ech.nullspace()
}

pub fn trace_form_rank(a: &AlgebraTable<PrimeField>) -> usize {
    let f = *a.field();
    let traces = a.basis_traces();
    let mut ech = Echelon::new(f, a.dim());
    for i in 0..a.dim() {
        let row: Vec<Residue> = (0..a.dim())
            .map(|j| {
                a.basis_product(i, j)
                    .iter()
                    .fold(f.zero(), |acc, (k, c)| acc + *c * traces[*k as usize])
            })
            .collect();
        ech.insert(row);
    }
    ech.rank()
}

fn certify_semisimple(a: &AlgebraTable<PrimeField>) -> Result<usize, OracleError> {
    let rank = trace_form_rank(a);
    if rank != a.dim() {
        return Err(OracleError::NotSemisimple { rank, dim: a.dim() });
    }
    Ok(rank)
}

pub fn central_idempotents(a: &AlgebraTable<PrimeField>) -> Result<CentralDecomposition, OracleError> {
    certify_semisimple(a)?;
    decompose_center(a, &center_basis(a))
}

fn decompose_center(
    a: &AlgebraTable<PrimeField>,
    center: &[Vec<Residue>],
) -> Result<CentralDecomposition, OracleError> {
    let f = *a.field();
    match center.len() {
        1 => return Ok(CentralDecomposition::Scalar),
        2 => {}
        z => return Err(OracleError::CenterTooLarge(z)),
    }
    let unit = a.unit().to_vec();
    let c = center
        .iter()
        .find(|v| linalg::rank(&f, &Matrix::from_rows(a.dim(), vec![unit.clone(), v.to_vec()])) == 2)
        .ok_or_else(|| OracleError::Internal("2-dimensional center spanned by the unit".into()))?
        .clone();
    let c2 = a.mul(&c, &c);
    // x*1 + y*c + z*c^2 = 0 with z != 0 gives c^2 = beta*c + alpha.
    let relation = linalg::nullspace(
        &f,
        &Matrix::from_columns(a.dim(), &[unit.clone(), c.clone(), c2], f.zero()),
    );
    let rel = relation
        .iter()
        .find(|v| !v[2].is_zero())
        .ok_or_else(|| OracleError::Internal("c^2 outside the span of 1 and c".into()))?;
    let z_inv = rel[2].inverse().expect("nonzero");
    let alpha = -(rel[0] * z_inv);
    let beta = -(rel[1] * z_inv);
    let disc = beta * beta + f.residue(4) * alpha;
    if disc.is_zero() {
        return Err(OracleError::NotSemisimple {
            rank: a.dim() - 1,
            dim: a.dim(),
        });
    }
    if !is_square(disc) {
        return Ok(CentralDecomposition::QuadraticField { discriminant: disc });
    }
    // Roots (beta ± r)/2; e = (c - root_minus) / r is the idempotent for root_plus.
    let r = sqrt_mod_p(disc).expect("checked square");
    let two_inv = f.residue(2).inverse().expect("odd characteristic");
    let root_minus = (beta - r) * two_inv;
    let r_inv = r.inverse().expect("nonzero discriminant");
    let e1: Vec<Residue> = c
        .iter()
        .zip(&unit)
        .map(|(ci, ui)| (*ci - root_minus * *ui) * r_inv)
        .collect();
    let e2: Vec<Residue> = unit.iter().zip(&e1).map(|(u, e)| *u - *e).collect();
    Ok(CentralDecomposition::Split([e1, e2]))
}

fn exact_sqrt(n: usize) -> Result<usize, OracleError> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1)
        .find(|m| m * m == n)
        .ok_or(OracleError::NotAPerfectSquare(n))
}

pub fn classify(a: &AlgebraTable<PrimeField>) -> Result<WedderburnReport, OracleError> {
    let trace_form_rank = certify_semisimple(a)?;
    let center = center_basis(a);
    let center_dim = center.len();
    let factors = match decompose_center(a, &center)? {
        CentralDecomposition::Scalar => vec![SimpleFactor {
            matrix_size: exact_sqrt(a.dim())?,
            center_degree: 1,
        }],
        CentralDecomposition::QuadraticField { .. } => {
            if !a.dim().is_multiple_of(2) {
                return Err(OracleError::NotAPerfectSquare(a.dim()));
            }
            vec![SimpleFactor {
                matrix_size: exact_sqrt(a.dim() / 2)?,
                center_degree: 2,
            }]
        }
        CentralDecomposition::Split(idempotents) => idempotents
            .iter()
            .map(|e| {
                let block_dim = linalg::rank(a.field(), &a.left_mul_matrix(e));
                Ok(SimpleFactor {
                    matrix_size: exact_sqrt(block_dim)?,
                    center_degree: 1,
                })
            })
            .collect::<Result<Vec<_>, OracleError>>()?,
    };
    let report = WedderburnReport {
        factors,
        trace_form_rank,
        center_dim,
    };
    if report.total_dim() != a.dim() {
        return Err(OracleError::Internal(format!(
            "factor dimensions sum to {} but the algebra has dimension {}",
            report.total_dim(),
            a.dim()
        )));
    }
    Ok(report)
}
