//! Diagonal quadratic forms, their determinant and signed discriminant, and
//! the signature-level reductions used by the label calculus.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("coefficient {index} is zero; the form must be non-degenerate")]
    ZeroCoefficient { index: usize },
    #[error("scaling by zero")]
    ZeroScalar,
}

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_parity((self == Sign::Minus) != (other == Sign::Minus))
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The form `x_1^2 + ... + x_plus^2 - y_1^2 - ... - y_minus^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignatureForm {
    pub plus: usize,
    pub minus: usize,
}

impl SignatureForm {
    pub const fn new(plus: usize, minus: usize) -> Self {
        SignatureForm { plus, minus }
    }

    /// The hyperbolic plane `x^2 - y^2`.
    pub const HYPERBOLIC: SignatureForm = SignatureForm::new(1, 1);

    pub fn rank(self) -> usize {
        self.plus + self.minus
    }

    pub fn is_definite(self) -> bool {
        self.plus == 0 || self.minus == 0
    }

    pub fn det(self) -> Sign {
        Sign::from_parity(self.minus % 2 == 1)
    }

    pub fn ds(self) -> Sign {
        discriminant_sign(self.rank()).times(self.det())
    }

    pub fn perp_one(self) -> SignatureForm {
        SignatureForm::new(self.plus + 1, self.minus)
    }

    /// Splits off hyperbolic planes, leaving a definite core.
    pub fn hyperbolic_reduce(self) -> (SignatureForm, usize) {
        if self.plus >= self.minus {
            (SignatureForm::new(self.plus - self.minus, 0), self.minus)
        } else {
            (SignatureForm::new(0, self.minus - self.plus), self.plus)
        }
    }

    /// Scaling every coefficient by `-1` swaps the two counts.
    pub fn negate(self) -> SignatureForm {
        SignatureForm::new(self.minus, self.plus)
    }

    /// Coefficients `+1` (plus times) followed by `-1` (minus times).
    pub fn coefficients(self) -> Vec<i64> {
        std::iter::repeat_n(1, self.plus)
            .chain(std::iter::repeat_n(-1, self.minus))
            .collect()
    }

    pub fn to_diagonal<F: Field>(self, field: &F) -> DiagonalForm<F> {
        DiagonalForm::from_integers(field, &self.coefficients())
            .expect("+-1 coefficients are nonzero in odd characteristic")
    }
}

impl fmt::Display for SignatureForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({},{})", self.plus, self.minus)
    }
}

/// `(-1)^(r(r-1)/2)`.
fn discriminant_sign(rank: usize) -> Sign {
    Sign::from_parity((rank * rank.saturating_sub(1) / 2) % 2 == 1)
}

/// `sum a_i x_i^2` over a concrete field, every `a_i` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalForm<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> DiagonalForm<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Result<Self, FormError> {
        if let Some(index) = coeffs.iter().position(|a| field.is_zero(a)) {
            return Err(FormError::ZeroCoefficient { index });
        }
        Ok(DiagonalForm { field, coeffs })
    }

    pub fn from_integers(field: &F, coeffs: &[i64]) -> Result<Self, FormError> {
        let coeffs = coeffs.iter().map(|&a| field.from_i64(a)).collect();
        DiagonalForm::new(field.clone(), coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn det(&self) -> F::Elem {
        self.coeffs
            .iter()
            .fold(self.field.one(), |acc, a| self.field.mul(&acc, a))
    }

    pub fn ds(&self) -> F::Elem {
        let det = self.det();
        match discriminant_sign(self.rank()) {
            Sign::Plus => det,
            Sign::Minus => self.field.neg(&det),
        }
    }

    /// Orthogonal sum `self + other`.
    pub fn perp(&self, other: &DiagonalForm<F>) -> DiagonalForm<F> {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(other.coeffs.iter().cloned());
        DiagonalForm {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, u: &F::Elem) -> Result<DiagonalForm<F>, FormError> {
        if self.field.is_zero(u) {
            return Err(FormError::ZeroScalar);
        }
        Ok(DiagonalForm {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| self.field.mul(u, a)).collect(),
        })
    }
}
