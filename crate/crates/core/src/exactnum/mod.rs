//! Exact coefficient arithmetic: arbitrary-precision rationals and elements
//! of cyclotomic fields `Q(ζ_m)`.
//!
//! Every coefficient that appears in a polynomial, a grading basis vector or
//! a character value is one of these two types. Both implement [`Scalar`],
//! the small field interface the rest of the crate is generic over.

mod cyclotomic;
pub mod linalg;
mod upoly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub(crate) use cyclotomic::split_signed_terms;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed an element of order {from} into Q(ζ_{to}): {from} does not divide {to}")]
    NotDivisible { from: u64, to: u64 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("could not parse {0:?} as an exact number")]
    Parse(String),
}

/// Exact field operations needed by polynomial and linear-algebra code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, NumError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self, NumError> {
        Ok(self.mul(&other.inv()?))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, NumError> {
        if Zero::is_zero(self) {
            Err(NumError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a"` or `"a/b"` (optionally signed) into a rational.
pub fn parse_rational(text: &str) -> Result<Rational, NumError> {
    let t = text.trim();
    let err = || NumError::Parse(text.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if Zero::is_zero(&d) {
                return Err(NumError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7).denom(), &BigInt::from(1));
        assert_eq!(format!("{}", rat(-3, 2)), "-3/2");
        assert_eq!(format!("{}", rat(4, 2)), "2");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational(" -3/6 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("17").unwrap(), rat(17, 1));
        assert_eq!(parse_rational("1/0"), Err(NumError::DivisionByZero));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(Scalar::inv(&rat(2, 1)).unwrap(), rat(1, 2));
        assert_eq!(Scalar::inv(&rat(0, 1)), Err(NumError::DivisionByZero));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(Scalar::add(&a, &b), Scalar::add(&b, &a));
            if !Scalar::is_zero(&a) {
                prop_assert!(Scalar::is_one(&a.mul(&Scalar::inv(&a).unwrap())));
            }
        }
    }
}
