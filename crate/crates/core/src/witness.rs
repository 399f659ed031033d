//! Explicit isomorphisms between Clifford algebras, quaternion algebras and
//! matrix algebras, checked exactly over `Q` or `F_p`.
//!
//! Concrete models: `C = C(-x^2)` with `i = e_1`, and `H = C(-x^2 - y^2)`
//! with `i = e_1`, `j = e_2`, `ij = e_1 e_2`. Conjugation negates every
//! non-unit coefficient.
//!
//! | witness       | map                                                           |
//! |---------------|---------------------------------------------------------------|
//! | `CxC`         | `C × C → C ⊗ C`, `(1,0) ↦ ½(1⊗1 + i⊗i)`, `(0,1) ↦ ½(1⊗1 − i⊗i)` |
//! | `HxC`         | `C ⊗ H → End_C(H) = M_2(C)`, `y⊗z ↦ (x ↦ y x z̄)`               |
//! | `HxH`         | `H ⊗ H → End_k(H) = M_4(k)`, `y⊗z ↦ (x ↦ y x z̄)`              |
//! | `ABS_PLUS:n`  | `C(q'_{n+2}) → C(q_n) ⊗ C(q'_2)`                              |
//! | `ABS_MINUS:n` | `C(q_{n+2}) → C(q'_n) ⊗ C(q_2)`                               |
//! | `HYP:p,m`     | `C(Q_{p,m} ⊥ h) → C(Q_{p,m}) ⊗ C(h)`                          |
//! | `SCALED:b;q`  | `C(b ⊥ q) → C(b) ⊗ C((ds b) q)`                               |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::clifford::{
    direct_product_table, extend_generator_map, matrix_algebra_table, tensor_table, verify_linear_iso, AlgebraTable,
    CliffordSpec, EngineError, SparseVec,
};
use crate::field::Field;
use crate::form::{DiagonalForm, SignatureForm};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("unknown witness `{0}` (expected CxC, HxC, HxH, ABS_PLUS:<n>, ABS_MINUS:<n>, HYP:<p>,<m> or SCALED:<b1>,<b2>;<q...>)")]
    UnknownWitness(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    CxC,
    HxC,
    HxH,
    AbsPlus(usize),
    AbsMinus(usize),
    Hyp(SignatureForm),
    Scaled { b: [i64; 2], q: Vec<i64> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CxC => f.write_str("CxC"),
            Witness::HxC => f.write_str("HxC"),
            Witness::HxH => f.write_str("HxH"),
            Witness::AbsPlus(n) => write!(f, "ABS_PLUS:{n}"),
            Witness::AbsMinus(n) => write!(f, "ABS_MINUS:{n}"),
            Witness::Hyp(q) => write!(f, "HYP:{},{}", q.plus, q.minus),
            Witness::Scaled { b, q } => {
                let q: Vec<String> = q.iter().map(|x| x.to_string()).collect();
                write!(f, "SCALED:{},{};{}", b[0], b[1], q.join(","))
            }
        }
    }
}

impl FromStr for Witness {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || WitnessError::UnknownWitness(s.to_string());
        let ints = |list: &str| -> Result<Vec<i64>, WitnessError> {
            if list.is_empty() {
                return Ok(Vec::new());
            }
            list.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| unknown()))
                .collect()
        };
        let (head, args) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "CxC" if args.is_empty() => Ok(Witness::CxC),
            "HxC" if args.is_empty() => Ok(Witness::HxC),
            "HxH" if args.is_empty() => Ok(Witness::HxH),
            "ABS_PLUS" => Ok(Witness::AbsPlus(args.parse().map_err(|_| unknown())?)),
            "ABS_MINUS" => Ok(Witness::AbsMinus(args.parse().map_err(|_| unknown())?)),
            "HYP" => match ints(args)?.as_slice() {
                [p, m] if *p >= 0 && *m >= 0 => Ok(Witness::Hyp(SignatureForm::new(*p as usize, *m as usize))),
                _ => Err(unknown()),
            },
            "SCALED" => {
                let (b, q) = args.split_once(';').ok_or_else(unknown)?;
                match ints(b)?.as_slice() {
                    [b1, b2] => Ok(Witness::Scaled {
                        b: [*b1, *b2],
                        q: ints(q)?,
                    }),
                    _ => Err(unknown()),
                }
            }
            _ => Err(unknown()),
        }
    }
}

impl Witness {
    /// Every integer coefficient of every form the map involves.
    pub fn coefficients(&self) -> Vec<i64> {
        match self {
            Witness::CxC | Witness::HxC | Witness::HxH => vec![-1],
            Witness::AbsPlus(_) | Witness::AbsMinus(_) | Witness::Hyp(_) => vec![1, -1],
            Witness::Scaled { b, q } => {
                let u = -b[0] * b[1];
                let mut out = b.to_vec();
                out.extend(q.iter().flat_map(|a| [*a, u * a]));
                out
            }
        }
    }

    /// Whether all the forms involved are nondegenerate over `field`.
    pub fn is_defined_over<F: Field>(&self, field: &F) -> bool {
        self.coefficients().iter().all(|c| !field.is_zero(&field.from_i64(*c)))
    }
}

/// The suite run by verification: the three quaternion identities, both
/// two-step recursions for `n <= 6`, hyperbolic splitting for every `±1` form
/// of rank `<= 6`, and scaled splitting for all four `±1` binary forms.
pub fn standard_witnesses() -> Vec<Witness> {
    let mut out = vec![Witness::CxC, Witness::HxC, Witness::HxH];
    out.extend((1..=6).map(Witness::AbsPlus));
    out.extend((1..=6).map(Witness::AbsMinus));
    for rank in 0..=6 {
        out.extend((0..=rank).map(|m| Witness::Hyp(SignatureForm::new(rank - m, m))));
    }
    let qs: [&[i64]; 6] = [&[1], &[-1], &[1, -1], &[-1, -1], &[1, 1, -1], &[2, 3]];
    for b in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
        for q in qs {
            out.push(Witness::Scaled { b, q: q.to_vec() });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome<E> {
    Pass { dim: usize, matrix: Matrix<E> },
    Fail(Failure),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Engine(EngineError),
    /// `π(b)` does not commute with left multiplication by `i`.
    NotComplexLinear {
        basis: usize,
    },
    /// A form coefficient vanishes in the field.
    DegenerateForm,
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Engine(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate<E> {
    pub witness: Witness,
    pub field: String,
    pub outcome: Outcome<E>,
}

impl<E> Certificate<E> {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass { .. })
    }
}

impl<E> fmt::Display for Certificate<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WITNESS {} field={} ", self.witness, self.field)?;
        match &self.outcome {
            Outcome::Pass { dim, .. } => write!(f, "PASS dim={dim}"),
            Outcome::Fail(Failure::Engine(EngineError::RelationViolated { i, j })) => {
                write!(f, "FAIL relation=<{i},{j}>")
            }
            Outcome::Fail(Failure::Engine(EngineError::NotAHomomorphism { i, j })) => {
                write!(f, "FAIL pair=<{i},{j}>")
            }
            Outcome::Fail(Failure::Engine(EngineError::NotBijective { rank, dim })) => {
                write!(f, "FAIL rank={rank}/{dim}")
            }
            Outcome::Fail(Failure::NotComplexLinear { basis }) => write!(f, "FAIL c-linear={basis}"),
            Outcome::Fail(Failure::DegenerateForm) => f.write_str("FAIL degenerate-form"),
            Outcome::Fail(Failure::Engine(e)) => write!(f, "FAIL error=\"{e}\""),
        }
    }
}

/// Builds the named map over `field` and checks that it is a bijective
/// algebra homomorphism.
pub fn verify_witness_iso<F: Field>(witness: &Witness, field: &F) -> Certificate<F::Elem> {
    let outcome = match build_and_check(witness, field) {
        Ok(matrix) => Outcome::Pass {
            dim: matrix.cols(),
            matrix,
        },
        Err(failure) => Outcome::Fail(failure),
    };
    Certificate {
        witness: witness.clone(),
        field: field.descriptor(),
        outcome,
    }
}

fn build_and_check<F: Field>(witness: &Witness, field: &F) -> Result<Matrix<F::Elem>, Failure> {
    match witness {
        Witness::CxC => complex_square(field),
        Witness::HxC => quaternion_times_complex(field),
        Witness::HxH => quaternion_square(field),
        Witness::AbsPlus(n) => periodicity_step(field, *n, 1),
        Witness::AbsMinus(n) => periodicity_step(field, *n, -1),
        Witness::Hyp(q) => hyperbolic_split(field, *q),
        Witness::Scaled { b, q } => scaled_split(field, *b, q),
    }
}

fn clifford_table<F: Field>(field: &F, coeffs: &[i64]) -> Result<AlgebraTable<F>, Failure> {
    let form = DiagonalForm::from_integers(field, coeffs).map_err(|_| Failure::DegenerateForm)?;
    Ok(CliffordSpec::new(form)?.table()?)
}

fn spec<F: Field>(field: &F, coeffs: &[i64]) -> Result<CliffordSpec<F>, Failure> {
    let form = DiagonalForm::from_integers(field, coeffs).map_err(|_| Failure::DegenerateForm)?;
    Ok(CliffordSpec::new(form)?)
}

fn complex<F: Field>(field: &F) -> Result<AlgebraTable<F>, Failure> {
    clifford_table(field, &[-1])
}

fn quaternions<F: Field>(field: &F) -> Result<AlgebraTable<F>, Failure> {
    clifford_table(field, &[-1, -1])
}

fn conjugate<F: Field>(field: &F, z: &[F::Elem]) -> Vec<F::Elem> {
    z.iter()
        .enumerate()
        .map(|(k, c)| if k == 0 { c.clone() } else { field.neg(c) })
        .collect()
}

fn checked_rank<F: Field>(field: &F, m: &Matrix<F::Elem>, dim: usize) -> Result<(), Failure> {
    let rank = linalg::rank(field, m);
    if rank != dim {
        return Err(EngineError::NotBijective { rank, dim }.into());
    }
    Ok(())
}

fn complex_square<F: Field>(field: &F) -> Result<Matrix<F::Elem>, Failure> {
    let c = complex(field)?;
    let source = direct_product_table(&c, &c)?;
    let target = tensor_table(&c, &c)?;
    let half = field.inv(&field.from_i64(2)).expect("odd characteristic");
    // Tensor index a*2 + b: 1⊗1 = 0, i⊗i = 3, i⊗1 = 2.
    let e_plus: SparseVec<F::Elem> = vec![(0, half.clone()), (3, half.clone())];
    let e_minus: SparseVec<F::Elem> = vec![(0, half.clone()), (3, field.neg(&half))];
    let i_left: SparseVec<F::Elem> = vec![(2, field.one())];
    let columns = vec![
        e_plus.clone(),
        target.mul_sparse(&i_left, &e_plus),
        e_minus.clone(),
        target.mul_sparse(&i_left, &e_minus),
    ];
    Ok(verify_linear_iso(&source, &target, &columns)?)
}

/// Matrix of `x ↦ y x z̄` on `H` in the basis `1, i, j, ij`.
fn sandwich<F: Field>(h: &AlgebraTable<F>, y: &[F::Elem], z: &[F::Elem]) -> Matrix<F::Elem> {
    let f = h.field();
    let zbar = conjugate(f, z);
    let columns: Vec<Vec<F::Elem>> = (0..4).map(|c| h.mul(&h.mul(y, &h.basis_vector(c)), &zbar)).collect();
    Matrix::from_columns(4, &columns, f.zero())
}

fn quaternion_square<F: Field>(field: &F) -> Result<Matrix<F::Elem>, Failure> {
    let h = quaternions(field)?;
    let source = tensor_table(&h, &h)?;
    let target = matrix_algebra_table(field, 4)?;
    let columns: Vec<SparseVec<F::Elem>> = (0..16)
        .map(|idx| {
            let m = sandwich(&h, &h.basis_vector(idx / 4), &h.basis_vector(idx % 4));
            let flat: Vec<F::Elem> = (0..16).map(|k| m.get(k / 4, k % 4).clone()).collect();
            target.to_sparse(&flat)
        })
        .collect();
    Ok(verify_linear_iso(&source, &target, &columns)?)
}

fn quaternion_times_complex<F: Field>(field: &F) -> Result<Matrix<F::Elem>, Failure> {
    let c = complex(field)?;
    let h = quaternions(field)?;
    let source = tensor_table(&c, &h)?;
    let m2 = matrix_algebra_table(field, 2)?;
    let target = tensor_table(&c, &m2)?;
    let left_i = sandwich(&h, &h.basis_vector(1), &h.basis_vector(0));
    let mut columns = Vec::with_capacity(8);
    for idx in 0..8 {
        // C ⊂ H as span(1, i); y = 1 or i.
        let (y, z) = (idx / 4, idx % 4);
        let op = sandwich(&h, &h.basis_vector(y), &h.basis_vector(z));
        if linalg::mat_mul(field, &op, &left_i) != linalg::mat_mul(field, &left_i, &op) {
            return Err(Failure::NotComplexLinear { basis: idx });
        }
        // H = C ⊕ C j: x0 + x1 i + x2 j + x3 ij = (x0 + x1 i) + (x2 + x3 i) j.
        let mut image = vec![field.zero(); 8];
        for (col, basis) in [(0usize, 0usize), (1, 2)] {
            let v = op.column(basis);
            for (row, (re, im)) in [(0usize, (&v[0], &v[1])), (1, (&v[2], &v[3]))] {
                image[row * 2 + col] = re.clone();
                image[4 + row * 2 + col] = im.clone();
            }
        }
        columns.push(target.to_sparse(&image));
    }
    Ok(verify_linear_iso(&source, &target, &columns)?)
}

/// `C(±(n+2)) → C(∓n) ⊗ C(±2)`: `E_1, E_2 ↦ 1⊗e'_1, 1⊗e'_2` and
/// `E_{i+2} ↦ e_i ⊗ e'_1 e'_2`.
fn periodicity_step<F: Field>(field: &F, n: usize, sign: i64) -> Result<Matrix<F::Elem>, Failure> {
    let source = spec(field, &vec![sign; n + 2])?;
    let inner = clifford_table(field, &vec![-sign; n])?;
    let outer = clifford_table(field, &[sign, sign])?;
    let target = tensor_table(&inner, &outer)?;
    let mut images = vec![target.basis_vector(1), target.basis_vector(2)];
    images.extend((0..n).map(|i| target.basis_vector((1 << i) * 4 + 3)));
    let m = extend_generator_map(&images, &source, &target)?;
    checked_rank(field, &m, source.dim())?;
    Ok(m)
}

/// `C(q ⊥ h) → C(q) ⊗ C(h)`: `e_i ↦ e_i ⊗ f_1 f_2`, `f_j ↦ 1 ⊗ f_j`.
fn hyperbolic_split<F: Field>(field: &F, q: SignatureForm) -> Result<Matrix<F::Elem>, Failure> {
    let mut coeffs = q.coefficients();
    coeffs.extend([1, -1]);
    let source = spec(field, &coeffs)?;
    let core = clifford_table(field, &q.coefficients())?;
    let h = clifford_table(field, &[1, -1])?;
    let target = tensor_table(&core, &h)?;
    let mut images: Vec<Vec<F::Elem>> = (0..q.rank()).map(|i| target.basis_vector((1 << i) * 4 + 3)).collect();
    images.push(target.basis_vector(1));
    images.push(target.basis_vector(2));
    let m = extend_generator_map(&images, &source, &target)?;
    checked_rank(field, &m, source.dim())?;
    Ok(m)
}

/// `C(b ⊥ q) → C(b) ⊗ C(u q)` with `u = ds b = -b_1 b_2`:
/// `g_j ↦ g_j ⊗ 1`, `e_i ↦ u^{-1} g_1 g_2 ⊗ ē_i`.
fn scaled_split<F: Field>(field: &F, b: [i64; 2], q: &[i64]) -> Result<Matrix<F::Elem>, Failure> {
    let mut coeffs = b.to_vec();
    coeffs.extend_from_slice(q);
    let source = spec(field, &coeffs)?;
    let u = -b[0] * b[1];
    let b_table = clifford_table(field, &b)?;
    let scaled: Vec<i64> = q.iter().map(|a| u * a).collect();
    let q_table = clifford_table(field, &scaled)?;
    let target = tensor_table(&b_table, &q_table)?;
    let d = q_table.dim();
    let u_inv = field.inv(&field.from_i64(u)).expect("u = ±1");
    let mut images = vec![target.basis_vector(d), target.basis_vector(2 * d)];
    for i in 0..q.len() {
        let mut v = target.zero_vector();
        v[3 * d + (1 << i)] = u_inv.clone();
        images.push(v);
    }
    let m = extend_generator_map(&images, &source, &target)?;
    checked_rank(field, &m, source.dim())?;
    Ok(m)
}
