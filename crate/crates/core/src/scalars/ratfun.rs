use std::cmp::Ordering;
use std::fmt;

use super::field::{Field, Rational, ScalarError};
use super::poly::{Indeterminate, Poly};

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun<V> {
    num: Poly<V>,
    den: Poly<V>,
}

impl<V: Indeterminate> fmt::Debug for RatFun<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl<V: Indeterminate> RatFun<V> {
    pub fn new(num: Poly<V>, den: Poly<V>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<V>, den: Poly<V>) -> Self {
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = if den.degree() == Some(0) {
            Poly::one()
        } else {
            num.gcd(&den)
        };
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly<V>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<V> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<V> {
        &self.den
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitutes a rational function for the indeterminate.
    pub fn compose(&self, inner: &Self) -> Result<Self, ScalarError> {
        let eval = |p: &Poly<V>| {
            let mut acc = Self::zero_value();
            for c in p.coeffs().iter().rev() {
                acc = acc
                    .mul_ref(inner)
                    .add_ref(&Self::from_poly(Poly::constant(c.clone())));
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.div(&d)
    }

    fn zero_value() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::reduce(num, self.den.mul(&other.den))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero_value();
        }
        if self.den.degree() == Some(0) && other.den.degree() == Some(0) {
            return RatFun {
                num: self.num.mul(&other.num),
                den: Poly::one(),
            };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.div_rem(&g1).0;
        let d = other.den.div_rem(&g1).0;
        let c = other.num.div_rem(&g2).0;
        let b = self.den.div_rem(&g2).0;
        Self::reduce(a.mul(&c), b.mul(&d))
    }
}

impl<V: Indeterminate> PartialOrd for RatFun<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Indeterminate> Ord for RatFun<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den
            .cmp(&other.den)
            .then_with(|| self.num.cmp(&other.num))
    }
}

impl<V: Indeterminate> fmt::Display for RatFun<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly<V>| {
            let s = p.to_string();
            let simple =
                p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1 && !s.contains('/');
            if simple && !s.starts_with('-') {
                s
            } else {
                format!("({s})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl<V: Indeterminate> Poly<V> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeffs()[0].is_one()
    }
}

impl<V: Indeterminate> Field for RatFun<V> {
    type Ring = Poly<V>;

    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(Poly::constant(r.clone()))
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_ref(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
    fn numer_denom(&self) -> (Poly<V>, Poly<V>) {
        (self.num.clone(), self.den.clone())
    }
    fn from_ring(x: &Poly<V>) -> Self {
        Self::from_poly(x.clone())
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) {
            self.num.as_constant().map(|c| c / &self.den.coeffs()[0])
        } else {
            None
        }
    }
}

impl<V: Indeterminate> Default for RatFun<V> {
    fn default() -> Self {
        Self::zero_value()
    }
}

impl<V: Indeterminate> From<Poly<V>> for RatFun<V> {
    fn from(p: Poly<V>) -> Self {
        Self::from_poly(p)
    }
}

/// True if `x` is a rational function value with no pole at `x0`.
pub fn regular_at<V: Indeterminate>(x: &RatFun<V>, x0: &Rational) -> bool {
    !x.denom().eval(x0).is_zero()
}
