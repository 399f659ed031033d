use super::{AlgebraTable, CliffordSpec, EngineError, SparseVec};
use crate::field::Field;
use crate::linalg::{self, Matrix};

fn scaled<F: Field>(f: &F, c: &F::Elem, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    v.iter()
        .map(|(i, x)| (*i, f.mul(c, x)))
        .filter(|(_, x)| !f.is_zero(x))
        .collect()
}

fn sparse_eq<F: Field>(f: &F, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> bool {
    let nz = |v: &[(usize, F::Elem)]| -> Vec<(usize, F::Elem)> {
        v.iter().filter(|(_, x)| !f.is_zero(x)).cloned().collect()
    };
    nz(a) == nz(b)
}

/// Checks that the images of the source generators satisfy the Clifford
/// relations of `source` inside `target`, then extends them multiplicatively
/// over the canonical basis and verifies the resulting linear map is an
/// algebra homomorphism. Returns its matrix (column `S` = image of `e_S`).
///
/// Generator indices in errors are 1-based.
pub fn extend_generator_map<F: Field>(
    images: &[Vec<F::Elem>],
    source: &CliffordSpec<F>,
    target: &AlgebraTable<F>,
) -> Result<Matrix<F::Elem>, EngineError> {
    let f = source.field();
    let n = source.rank();
    if images.len() != n {
        return Err(EngineError::ImageCount {
            expected: n,
            got: images.len(),
        });
    }
    if let Some(bad) = images.iter().find(|v| v.len() != target.dim()) {
        return Err(EngineError::DimensionMismatch {
            expected: target.dim(),
            got: bad.len(),
        });
    }
    let images: Vec<SparseVec<F::Elem>> = images.iter().map(|v| target.to_sparse(v)).collect();
    let unit = target.to_sparse(target.unit());

    for i in 0..n {
        let square = target.mul_sparse(&images[i], &images[i]);
        if !sparse_eq(f, &square, &scaled(f, &source.coeffs()[i], &unit)) {
            return Err(EngineError::RelationViolated { i: i + 1, j: i + 1 });
        }
        for j in (i + 1)..n {
            let ij = target.mul_sparse(&images[i], &images[j]);
            let ji = target.mul_sparse(&images[j], &images[i]);
            let sum = add_sparse(f, &ij, &ji);
            if !sum.is_empty() {
                return Err(EngineError::RelationViolated { i: i + 1, j: j + 1 });
            }
        }
    }

    let mut columns: Vec<SparseVec<F::Elem>> = Vec::with_capacity(source.dim());
    for s in 0..source.dim() {
        if s == 0 {
            columns.push(unit.clone());
            continue;
        }
        // e_S = e_{S without top bit} * e_top, with ascending generator order.
        let top = 31 - (s as u32).leading_zeros() as usize;
        let rest = s & !(1 << top);
        columns.push(target.mul_sparse(&columns[rest], &images[top]));
    }
    let source_table = source.table()?;
    check_homomorphism(&source_table, target, &columns)?;
    Ok(Matrix::from_columns(
        target.dim(),
        &columns.iter().map(|c| target.to_dense(c)).collect::<Vec<_>>(),
        f.zero(),
    ))
}

fn add_sparse<F: Field>(f: &F, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out: std::collections::BTreeMap<usize, F::Elem> = a.iter().cloned().collect();
    for (i, x) in b {
        let slot = out.entry(*i).or_insert_with(|| f.zero());
        *slot = f.add(slot, x);
    }
    out.into_iter().filter(|(_, x)| !f.is_zero(x)).collect()
}

/// Verifies that the linear map with the given basis images sends the unit to
/// the unit and is multiplicative on every pair of basis elements.
pub fn check_homomorphism<F: Field>(
    source: &AlgebraTable<F>,
    target: &AlgebraTable<F>,
    columns: &[SparseVec<F::Elem>],
) -> Result<(), EngineError> {
    let f = source.field();
    if columns.len() != source.dim() {
        return Err(EngineError::ImageCount {
            expected: source.dim(),
            got: columns.len(),
        });
    }
    let apply = |x: &[(usize, F::Elem)]| -> SparseVec<F::Elem> {
        x.iter().fold(Vec::new(), |acc, (k, c)| {
            add_sparse(f, &acc, &scaled(f, c, &columns[*k]))
        })
    };
    if !sparse_eq(
        f,
        &apply(&source.to_sparse(source.unit())),
        &target.to_sparse(target.unit()),
    ) {
        return Err(EngineError::UnitNotPreserved);
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let prod: SparseVec<F::Elem> = source
                .basis_product(i, j)
                .iter()
                .map(|(k, c)| (*k as usize, c.clone()))
                .collect();
            let lhs = apply(&prod);
            let rhs = target.mul_sparse(&columns[i], &columns[j]);
            if !sparse_eq(f, &lhs, &rhs) {
                return Err(EngineError::NotAHomomorphism { i, j });
            }
        }
    }
    Ok(())
}

/// Checks a homomorphism and its bijectivity by exact rank. Returns the map's
/// matrix.
pub fn verify_linear_iso<F: Field>(
    source: &AlgebraTable<F>,
    target: &AlgebraTable<F>,
    columns: &[SparseVec<F::Elem>],
) -> Result<Matrix<F::Elem>, EngineError> {
    check_homomorphism(source, target, columns)?;
    let f = source.field();
    let m = Matrix::from_columns(
        target.dim(),
        &columns.iter().map(|c| target.to_dense(c)).collect::<Vec<_>>(),
        f.zero(),
    );
    let rank = linalg::rank(f, &m);
    if rank != source.dim() || rank != target.dim() {
        return Err(EngineError::NotBijective {
            rank,
            dim: source.dim().max(target.dim()),
        });
    }
    Ok(m)
}
