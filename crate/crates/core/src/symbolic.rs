//! Label calculus for Clifford algebras of `±1` diagonal forms.
//!
//! Every algebra that occurs is `M_{2^t}(D)` or `M_{2^t}(D) × M_{2^t}(D)` with
//! `D` one of the ground field `K`, the quadratic extension `C = k[x]/(x^2+1)`
//! or the quaternions `H = (-1,-1)/k`. Which of these collapse depends only on
//! the [`FieldProfile`]:
//!
//! * `sqrt(-1) ∈ k`: `C ≅ K × K` and `H ≅ M_2(K)`;
//! * `-1` a sum of two squares: `C` is a field, `H ≅ M_2(K)`;
//! * `(-1,-1)/k` a division algebra: no collapses.
//!
//! Definite cores are built by the two-step recursion
//! `C(q'_{n+2}) ≅ C(q_n) ⊗ C(q'_2)`, `C(q_{n+2}) ≅ C(q'_n) ⊗ C(q_2)`, and
//! hyperbolic planes contribute `M_2(K)` factors.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::FieldProfile;
use crate::form::{Sign, SignatureForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("tensor product of two split algebras (more than two simple factors)")]
    SplitTensorSplit,
    #[error("the form with no variables defines the zero ring")]
    EmptyForm,
    #[error("{0} has more than two simple factors under this profile")]
    Unrepresentable(AlgebraLabel),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    K,
    C,
    H,
}

impl Base {
    /// `log2` of the dimension over the ground field.
    pub fn log2_degree(self) -> u32 {
        match self {
            Base::K => 0,
            Base::C => 1,
            Base::H => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Base::K => "K",
            Base::C => "C",
            Base::H => "H",
        }
    }
}

/// `M_{2^t}(base)`, or two copies of it when `split`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraLabel {
    pub base: Base,
    pub log2size: u32,
    pub split: bool,
}

impl AlgebraLabel {
    pub const fn new(base: Base, log2size: u32, split: bool) -> Self {
        AlgebraLabel { base, log2size, split }
    }

    /// The ground field itself, `C(q)` for the rank-0 form.
    pub const GROUND: AlgebraLabel = AlgebraLabel::new(Base::K, 0, false);

    /// `M_{2^t}(K)`.
    pub const fn matrix(log2size: u32) -> Self {
        AlgebraLabel::new(Base::K, log2size, false)
    }

    /// `log2` of the k-dimension.
    pub fn log2_dim(self) -> u32 {
        self.base.log2_degree() + 2 * self.log2size + u32::from(self.split)
    }

    pub fn factor_count(self) -> usize {
        if self.split {
            2
        } else {
            1
        }
    }

    fn with_size(self, log2size: u32) -> Self {
        AlgebraLabel { log2size, ..self }
    }
}

/// Renders as `K(2^t)`, `C(2^t)` or `H(2^t)` with the size written out in
/// decimal, plus `^2` when split.
impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.base.symbol(), pow2(self.log2size))?;
        if self.split {
            f.write_str("^2")?;
        }
        Ok(())
    }
}

/// `2^e` as a decimal big integer.
pub fn pow2(e: u32) -> BigUint {
    BigUint::from(1u8) << e
}

/// Reduced `K_0` of the quadric ring: `Z`, `Z/2` or `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum K0Class {
    Z,
    ZMod2,
    Zero,
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            K0Class::Z => "Z",
            K0Class::ZMod2 => "Z/2",
            K0Class::Zero => "0",
        })
    }
}

/// Simple-module dimension `d(q) = 2^exponent` over the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimLog(pub u32);

impl fmt::Display for DimLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pow2(self.0))
    }
}

/// The five base algebras the recursion starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseForm {
    Rank0,
    /// `-x^2`
    NegOne,
    /// `-x^2 - y^2`
    NegTwo,
    /// `x^2`
    PosOne,
    /// `x^2 + y^2`
    PosTwo,
}

pub fn base_clifford(profile: FieldProfile, which: BaseForm) -> AlgebraLabel {
    let raw = match which {
        BaseForm::Rank0 => AlgebraLabel::GROUND,
        BaseForm::NegOne => AlgebraLabel::new(Base::C, 0, false),
        BaseForm::NegTwo => AlgebraLabel::new(Base::H, 0, false),
        BaseForm::PosOne => AlgebraLabel::new(Base::K, 0, true),
        BaseForm::PosTwo => AlgebraLabel::matrix(1),
    };
    normalize_label(profile, raw).expect("base algebras have at most two factors")
}

/// Applies the collapses the profile forces. Idempotent.
pub fn normalize_label(profile: FieldProfile, raw: AlgebraLabel) -> Result<AlgebraLabel, SymbolicError> {
    let AlgebraLabel { base, log2size, split } = raw;
    match (profile, base) {
        (FieldProfile::QuaternionDivision, _) | (_, Base::K) => Ok(raw),
        (FieldProfile::SqrtMinusOne | FieldProfile::SumTwoSquares, Base::H) => {
            Ok(AlgebraLabel::new(Base::K, log2size + 1, split))
        }
        (FieldProfile::SumTwoSquares, Base::C) => Ok(raw),
        (FieldProfile::SqrtMinusOne, Base::C) => {
            if split {
                Err(SymbolicError::Unrepresentable(raw))
            } else {
                Ok(AlgebraLabel::new(Base::K, log2size, true))
            }
        }
    }
}

/// Plain tensor product of two labels over `k`.
pub fn tensor_labels(profile: FieldProfile, a: AlgebraLabel, b: AlgebraLabel) -> Result<AlgebraLabel, SymbolicError> {
    if a.split && b.split {
        return Err(SymbolicError::SplitTensorSplit);
    }
    let t = a.log2size + b.log2size;
    let (base, extra, base_split) = match (a.base, b.base) {
        (Base::K, x) | (x, Base::K) => (x, 0, false),
        (Base::C, Base::C) => (Base::C, 0, true),
        (Base::H, Base::C) | (Base::C, Base::H) => (Base::C, 1, false),
        (Base::H, Base::H) => (Base::K, 2, false),
    };
    if base_split && (a.split || b.split) {
        return Err(SymbolicError::SplitTensorSplit);
    }
    normalize_label(
        profile,
        AlgebraLabel::new(base, t + extra, a.split || b.split || base_split),
    )
}

/// Tensor with a simple factor drawn from the recursion (`K`- or `H`-based),
/// which never produces more than two factors.
fn tensor_simple(profile: FieldProfile, a: AlgebraLabel, simple: AlgebraLabel) -> AlgebraLabel {
    debug_assert!(!simple.split && simple.base != Base::C);
    tensor_labels(profile, a, simple).expect("K- and H-based factors keep at most two components")
}

/// `(C(q_n), C(q'_n))` for the negative and positive definite forms of rank
/// `n`.
pub fn definite_pair(profile: FieldProfile, n: usize) -> (AlgebraLabel, AlgebraLabel) {
    let neg_two = base_clifford(profile, BaseForm::NegTwo);
    let pos_two = base_clifford(profile, BaseForm::PosTwo);
    // Rolling window over ranks j, j+1.
    let mut even = (
        base_clifford(profile, BaseForm::Rank0),
        base_clifford(profile, BaseForm::Rank0),
    );
    let mut odd = (
        base_clifford(profile, BaseForm::NegOne),
        base_clifford(profile, BaseForm::PosOne),
    );
    for _ in 0..n / 2 {
        let next_even = (
            tensor_simple(profile, even.1, neg_two),
            tensor_simple(profile, even.0, pos_two),
        );
        let next_odd = (
            tensor_simple(profile, odd.1, neg_two),
            tensor_simple(profile, odd.0, pos_two),
        );
        even = next_even;
        odd = next_odd;
    }
    if n.is_multiple_of(2) {
        even
    } else {
        odd
    }
}

/// `C(Q_{n,m})`: split off hyperbolic planes, build the definite core, then
/// tensor with `M_{2^h}(K)`.
pub fn clifford_of_signature(profile: FieldProfile, plus: usize, minus: usize) -> AlgebraLabel {
    let (core, h) = SignatureForm::new(plus, minus).hyperbolic_reduce();
    let (neg, pos) = definite_pair(profile, core.rank());
    let core_label = if core.minus > 0 { neg } else { pos };
    core_label.with_size(core_label.log2size + h as u32)
}

pub fn simple_dim(label: AlgebraLabel) -> DimLog {
    DimLog(label.base.log2_degree() + label.log2size)
}

/// Whether `sqrt(ds Q_{n,m})` lies in a field of the given profile.
pub fn ds_square_test(profile: FieldProfile, plus: usize, minus: usize) -> bool {
    match SignatureForm::new(plus, minus).ds() {
        Sign::Plus => true,
        Sign::Minus => profile == FieldProfile::SqrtMinusOne,
    }
}

/// Everything the decision rule looked at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbsReport {
    pub class: K0Class,
    pub label: AlgebraLabel,
    /// `C(q ⊥ <1>)`.
    pub perp_label: AlgebraLabel,
    pub d: DimLog,
    pub d_perp: DimLog,
    pub ds_square: bool,
}

/// Reduced `K_0` of `k[x,y]/(Q_{n,m} - 1)` from the Clifford data: `Z` when
/// `C(q)` splits, otherwise `0` or `Z/2` as `d(q ⊥ 1)` equals `d(q)` or
/// doubles it.
pub fn abs_group(profile: FieldProfile, plus: usize, minus: usize) -> Result<AbsReport, SymbolicError> {
    if plus + minus == 0 {
        return Err(SymbolicError::EmptyForm);
    }
    let label = clifford_of_signature(profile, plus, minus);
    let perp_label = clifford_of_signature(profile, plus + 1, minus);
    let d = simple_dim(label);
    let d_perp = simple_dim(perp_label);
    let class = if label.split {
        K0Class::Z
    } else if d_perp.0 == d.0 {
        K0Class::Zero
    } else if d_perp.0 == d.0 + 1 {
        K0Class::ZMod2
    } else {
        return Err(SymbolicError::Internal(format!(
            "d(q+1)/d(q) = 2^{} for Q({plus},{minus})",
            d_perp.0 as i64 - d.0 as i64
        )));
    };
    Ok(AbsReport {
        class,
        label,
        perp_label,
        d,
        d_perp,
        ds_square: ds_square_test(profile, plus, minus),
    })
}

/// Closed-form periodic answer, independent of the label calculus.
///
/// Depends only on `n - m` (or on `n + m` when `sqrt(-1)` is in the field):
///
/// | profile   | `n ≥ m`, by `(n-m) mod p`        | `n < m`, by `(m-n) mod p`          |
/// |-----------|----------------------------------|------------------------------------|
/// | level-inf | `{1,5}`: Z, `{2,3}`: Z/2 (mod 8) | `{3,7}`: Z, `{5,6}`: Z/2 (mod 8)   |
/// | level-2   | `1`: Z, `2`: Z/2 (mod 4)         | `3`: Z, `2`: Z/2 (mod 4)           |
/// | level-1   | `n + m` odd: Z                   | same                               |
///
/// All other residues give `0`.
pub fn closed_form_k0(profile: FieldProfile, plus: usize, minus: usize) -> Result<K0Class, SymbolicError> {
    if plus + minus == 0 {
        return Err(SymbolicError::EmptyForm);
    }
    let class = match profile {
        FieldProfile::SqrtMinusOne => {
            if (plus + minus) % 2 == 1 {
                K0Class::Z
            } else {
                K0Class::Zero
            }
        }
        FieldProfile::QuaternionDivision if plus >= minus => match (plus - minus) % 8 {
            1 | 5 => K0Class::Z,
            2 | 3 => K0Class::ZMod2,
            _ => K0Class::Zero,
        },
        FieldProfile::QuaternionDivision => match (minus - plus) % 8 {
            3 | 7 => K0Class::Z,
            5 | 6 => K0Class::ZMod2,
            _ => K0Class::Zero,
        },
        FieldProfile::SumTwoSquares if plus >= minus => match (plus - minus) % 4 {
            1 => K0Class::Z,
            2 => K0Class::ZMod2,
            _ => K0Class::Zero,
        },
        FieldProfile::SumTwoSquares => match (minus - plus) % 4 {
            3 => K0Class::Z,
            2 => K0Class::ZMod2,
            _ => K0Class::Zero,
        },
    };
    Ok(class)
}
