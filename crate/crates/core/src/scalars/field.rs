use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed scalar modes: {0} and {1}")]
    MixedModes(String, String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("scalar mode {mode} cannot provide {what}")]
    InvalidMode { mode: String, what: &'static str },
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// An integral domain with exact division and a normalized gcd.
///
/// Used as the fraction-free carrier for elimination over a field.
pub trait Ring: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, which the caller guarantees is exact.
    fn div_exact(&self, other: &Self) -> Self;
    /// Unit-normalized gcd (nonnegative integer, monic polynomial).
    fn gcd(&self, other: &Self) -> Self;
    /// True when the unit-normal form of `self` is `-self`.
    fn is_negative(&self) -> bool;

    fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let l = self.div_exact(&g).mul(other);
        if l.is_negative() {
            l.neg()
        } else {
            l
        }
    }
}

/// Exact field of coefficients.
///
/// Arithmetic goes through named methods taking references so generic code
/// does not need to clone big coefficients for every operation.
pub trait Field:
    Clone + Debug + Display + PartialEq + Eq + Ord + Hash + Send + Sync + 'static
{
    type Ring: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    /// Splits `self` as `num / den` over the underlying ring.
    fn numer_denom(&self) -> (Self::Ring, Self::Ring);
    fn from_ring(x: &Self::Ring) -> Self;
    /// The value as a rational number, if it is a constant.
    fn as_rational(&self) -> Option<Rational>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
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
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)), "inexact integer division");
        self / other
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Field for Rational {
    type Ring = BigInt;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
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
    fn inv(&self) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn numer_denom(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
    fn from_ring(x: &BigInt) -> Self {
        Rational::from_integer(x.clone())
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Builds `n / d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let err = || ScalarError::Parse(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if Zero::is_zero(&d) {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Returns the integer value of `r` if it is one.
pub fn rational_to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
