//! Field descriptors and exact arithmetic over the concrete fields used by
//! the structure-constant engine: odd prime fields and the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, Matrix};

/// Exact rational numbers, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("modulus {0} is too large (must be < 65536)")]
    ModulusTooLarge(u64),
    #[error("{value} is not a square modulo {modulus}")]
    NotASquare { value: u32, modulus: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unrecognized field descriptor `{0}` (expected level-1, level-2, level-inf, Fp:<p> or Q)")]
    BadDescriptor(String),
}

/// Which of the three level hypotheses a field of characteristic != 2
/// satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldProfile {
    /// `sqrt(-1)` lies in the field.
    SqrtMinusOne,
    /// `sqrt(-1)` is missing but `-1` is a sum of two squares.
    SumTwoSquares,
    /// `x^2 + y^2 + z^2 = 0` has only the trivial zero, so `(-1,-1)` is a
    /// division algebra.
    QuaternionDivision,
}

impl FieldProfile {
    pub const ALL: [FieldProfile; 3] = [
        FieldProfile::SqrtMinusOne,
        FieldProfile::SumTwoSquares,
        FieldProfile::QuaternionDivision,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FieldProfile::SqrtMinusOne => "level-1",
            FieldProfile::SumTwoSquares => "level-2",
            FieldProfile::QuaternionDivision => "level-inf",
        }
    }
}

impl fmt::Display for FieldProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Operations the engine needs from a ground field. Elements carry no field
/// context of their own; the field value is passed alongside them.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Descriptor string in the CLI grammar (`Fp:<p>` or `Q`).
    fn descriptor(&self) -> String;

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        linalg::gaussian_rank(self, m)
    }
}

/// An odd prime field `F_p` with `p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if p >= 1 << 16 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn residue(&self, v: i64) -> Residue {
        Residue {
            value: v.rem_euclid(self.p as i64) as u32,
            modulus: self.p,
        }
    }

    pub fn profile(&self) -> FieldProfile {
        profile_of_prime(*self)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, stored with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Residue {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Residue {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Residue {
            value: acc as u32,
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<Residue, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(self.modulus as u64 - 2))
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.value + rhs.value;
        Residue {
            value: if s >= self.modulus { s - self.modulus } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self + (-rhs)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn zero(&self) -> Residue {
        self.residue(0)
    }
    fn one(&self) -> Residue {
        self.residue(1)
    }
    fn from_i64(&self, v: i64) -> Residue {
        self.residue(v)
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        *a + *b
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        *a - *b
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        *a * *b
    }
    fn neg(&self, a: &Residue) -> Residue {
        -*a
    }
    fn inv(&self, a: &Residue) -> Result<Residue, FieldError> {
        a.inverse()
    }
    fn is_zero(&self, a: &Residue) -> bool {
        a.value == 0
    }
    fn descriptor(&self) -> String {
        format!("Fp:{}", self.p)
    }
}

/// The rational numbers, with arbitrary-precision exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = ExactRational;

    fn zero(&self) -> ExactRational {
        BigRational::zero()
    }
    fn one(&self) -> ExactRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> ExactRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a + b
    }
    fn sub(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a - b
    }
    fn mul(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a * b
    }
    fn neg(&self, a: &ExactRational) -> ExactRational {
        -a
    }
    fn inv(&self, a: &ExactRational) -> Result<ExactRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &ExactRational) -> bool {
        a.is_zero()
    }
    fn descriptor(&self) -> String {
        "Q".to_string()
    }

    fn rank(&self, m: &Matrix<ExactRational>) -> usize {
        linalg::fraction_free_rank(m)
    }
}

/// `-1` is a square in `F_p` exactly when `p = 1 (mod 4)`; finite fields never
/// carry a quaternion division algebra.
pub fn profile_of_prime(p: PrimeField) -> FieldProfile {
    if p.p % 4 == 1 {
        FieldProfile::SqrtMinusOne
    } else {
        FieldProfile::SumTwoSquares
    }
}

/// Euler's criterion. Zero counts as a square.
pub fn is_square(a: Residue) -> bool {
    if a.value == 0 {
        return true;
    }
    a.pow((a.modulus as u64 - 1) / 2).value == 1
}

/// The smaller of the two square roots of `a`.
pub fn sqrt_mod_p(a: Residue) -> Result<Residue, FieldError> {
    if !is_square(a) {
        return Err(FieldError::NotASquare {
            value: a.value,
            modulus: a.modulus,
        });
    }
    let p = a.modulus as u64;
    (0..=p / 2)
        .map(|r| Residue {
            value: r as u32,
            modulus: a.modulus,
        })
        .find(|&r| r * r == a)
        .ok_or(FieldError::NotASquare {
            value: a.value,
            modulus: a.modulus,
        })
}

/// Whether a rational is the square of a rational.
pub fn is_rational_square(a: &ExactRational) -> bool {
    if a.is_negative() {
        return false;
    }
    let is_int_square = |n: &BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    is_int_square(a.numer()) && is_int_square(a.denom())
}

/// Parsed form of the CLI field grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Level(FieldProfile),
    Prime(PrimeField),
    Rationals,
}

impl FieldDescriptor {
    pub fn profile(&self) -> FieldProfile {
        match self {
            FieldDescriptor::Level(p) => *p,
            FieldDescriptor::Prime(p) => p.profile(),
            FieldDescriptor::Rationals => FieldProfile::QuaternionDivision,
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "level-1" => Ok(FieldDescriptor::Level(FieldProfile::SqrtMinusOne)),
            "level-2" => Ok(FieldDescriptor::Level(FieldProfile::SumTwoSquares)),
            "level-inf" => Ok(FieldDescriptor::Level(FieldProfile::QuaternionDivision)),
            "Q" => Ok(FieldDescriptor::Rationals),
            _ => {
                let digits = s
                    .strip_prefix("Fp:")
                    .ok_or_else(|| FieldError::BadDescriptor(s.to_string()))?;
                let p: u64 = digits.parse().map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
                Ok(FieldDescriptor::Prime(PrimeField::new(p)?))
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Level(p) => f.write_str(p.tag()),
            FieldDescriptor::Prime(p) => write!(f, "Fp:{}", p.p),
            FieldDescriptor::Rationals => f.write_str("Q"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force_has_sqrt_minus_one(p: u32) -> bool {
        (0..p as u64).any(|r| (r * r + 1) % p as u64 == 0)
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            profile_of_prime(PrimeField::new(5).unwrap()),
            FieldProfile::SqrtMinusOne
        );
        assert_eq!(
            profile_of_prime(PrimeField::new(7).unwrap()),
            FieldProfile::SumTwoSquares
        );
        assert_eq!(
            profile_of_prime(PrimeField::new(13).unwrap()),
            FieldProfile::SqrtMinusOne
        );
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(2), Err(FieldError::EvenCharacteristic));
        assert_eq!(PrimeField::new(9), Err(FieldError::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(65537), Err(FieldError::ModulusTooLarge(65537)));
    }

    #[test]
    fn profile_matches_exhaustive_search_below_cap() {
        for p in (3u64..1 << 16).step_by(2).filter(|&p| is_prime(p)) {
            let field = PrimeField::new(p).unwrap();
            assert_eq!(
                profile_of_prime(field) == FieldProfile::SqrtMinusOne,
                brute_force_has_sqrt_minus_one(p as u32),
                "p = {p}"
            );
        }
    }

    #[test]
    fn square_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let f13 = PrimeField::new(13).unwrap();
        let f11 = PrimeField::new(11).unwrap();
        assert!(is_square(f7.residue(0)));
        assert!(!is_square(f7.residue(-1)));
        assert!(is_square(f13.residue(-1)));
        assert_eq!(sqrt_mod_p(f7.residue(4)).unwrap().value(), 2);
        assert_eq!(sqrt_mod_p(f13.residue(-1)).unwrap().value(), 5);
        assert_eq!(sqrt_mod_p(f11.residue(0)).unwrap().value(), 0);
        assert_eq!(
            sqrt_mod_p(f7.residue(-1)),
            Err(FieldError::NotASquare { value: 6, modulus: 7 })
        );
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = PrimeField::new(11).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(Rationals.inv(&Rationals.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(f.mul(&f.inv(&f.residue(3)).unwrap(), &f.residue(3)), f.one());
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            "Fp:7".parse::<FieldDescriptor>().unwrap().profile(),
            FieldProfile::SumTwoSquares
        );
        assert_eq!(
            "Q".parse::<FieldDescriptor>().unwrap().profile(),
            FieldProfile::QuaternionDivision
        );
        assert_eq!(
            "level-1".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor::Level(FieldProfile::SqrtMinusOne)
        );
        assert!(matches!(
            "Fp:9".parse::<FieldDescriptor>(),
            Err(FieldError::NotPrime(9))
        ));
        assert!(matches!(
            "R".parse::<FieldDescriptor>(),
            Err(FieldError::BadDescriptor(_))
        ));
        assert!(matches!(
            "Fp:x".parse::<FieldDescriptor>(),
            Err(FieldError::BadDescriptor(_))
        ));
        for s in ["level-1", "level-2", "level-inf", "Q", "Fp:19"] {
            assert_eq!(s.parse::<FieldDescriptor>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rational_squares() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert!(is_rational_square(&q(9, 4)));
        assert!(!is_rational_square(&q(2, 1)));
        assert!(!is_rational_square(&q(-1, 1)));
    }

    fn rational() -> impl Strategy<Value = ExactRational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(p_idx in 0usize..6, a in 0i64..20000) {
            let p = [3u64, 5, 7, 13, 101, 65521][p_idx];
            let f = PrimeField::new(p).unwrap();
            let a = f.residue(a);
            if is_square(a) {
                let r = sqrt_mod_p(a).unwrap();
                prop_assert_eq!(r * r, a);
            } else {
                prop_assert!(sqrt_mod_p(a).is_err());
            }
        }

        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            let q = Rationals;
            prop_assert_eq!(q.mul(&q.mul(&a, &b), &c), q.mul(&a, &q.mul(&b, &c)));
            prop_assert_eq!(q.add(&q.add(&a, &b), &c), q.add(&a, &q.add(&b, &c)));
            prop_assert_eq!(q.add(&a, &b), q.add(&b, &a));
            prop_assert_eq!(q.mul(&a, &b), q.mul(&b, &a));
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            let s = q.add(&q.mul(&a, &b), &c);
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
            prop_assert!(s.denom().is_positive());
        }
    }
}
