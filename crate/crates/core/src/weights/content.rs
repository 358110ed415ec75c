use std::fmt;

use crate::scalars::{Field, Poly, RatFun, Rational, ScalarMode, ZVar};

/// The loop parameter as seen by integer-sensitive predicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DeltaSpec {
    /// A symbol that is never an integer.
    Generic,
    At(Rational),
}

impl DeltaSpec {
    pub fn at_int(d: i64) -> Self {
        DeltaSpec::At(Rational::from_integer(d.into()))
    }

    /// Symbolic modes give `Generic`, since `(q^N - q^-N)/(q - q^-1)` is not
    /// a constant either.
    pub fn from_mode(mode: &ScalarMode) -> Self {
        match mode.delta_rational() {
            Some(d) => DeltaSpec::At(d),
            None => DeltaSpec::Generic,
        }
    }

    /// The value when it is an integer.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            DeltaSpec::At(d) if d.is_integer() => i64::try_from(d.to_integer()).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for DeltaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaSpec::Generic => write!(f, "generic"),
            DeltaSpec::At(d) => write!(f, "{d}"),
        }
    }
}

/// `int + delta` if `shifted`, else `int`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentValue {
    pub int: i64,
    pub shifted: bool,
}

impl ContentValue {
    pub fn plain(int: i64) -> Self {
        ContentValue {
            int,
            shifted: false,
        }
    }

    pub fn shifted(int: i64) -> Self {
        ContentValue { int, shifted: true }
    }

    pub fn eval<F: Field>(&self, delta: &F) -> F {
        let base = F::from_int(self.int);
        if self.shifted {
            base.add(delta)
        } else {
            base
        }
    }

    pub fn specialize(&self, delta: &DeltaSpec) -> ContentKey {
        match (self.shifted, delta) {
            (false, _) => ContentKey::Value(Rational::from_integer(self.int.into())),
            (true, DeltaSpec::At(d)) => {
                ContentKey::Value(Rational::from_integer(self.int.into()) + d)
            }
            (true, DeltaSpec::Generic) => ContentKey::PlusDelta(self.int),
        }
    }
}

impl fmt::Display for ContentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.shifted, self.int) {
            (false, c) => write!(f, "{c}"),
            (true, 0) => write!(f, "d"),
            (true, c) if c < 0 => write!(f, "d{c}"),
            (true, c) => write!(f, "d+{c}"),
        }
    }
}

/// A content value after fixing the loop parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContentKey {
    Value(Rational),
    /// `int + delta` for symbolic delta.
    PlusDelta(i64),
}

impl ContentKey {
    fn is_zero(&self) -> bool {
        matches!(self, ContentKey::Value(v) if v.is_zero())
    }

    fn neg_equals(&self, other: &ContentKey) -> bool {
        match (self, other) {
            (ContentKey::Value(a), ContentKey::Value(b)) => (a + b).is_zero(),
            _ => false,
        }
    }
}

/// Reduced form of `prod (1 + a z) / prod (1 - b z)`: the nonzero `a` and
/// `b` values, sorted, with every pair `a = -b` cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentFunction {
    pub numerator: Vec<ContentKey>,
    pub denominator: Vec<ContentKey>,
}

impl ContentFunction {
    pub fn new(numerator: Vec<ContentKey>, denominator: Vec<ContentKey>) -> Self {
        let mut num: Vec<ContentKey> = numerator.into_iter().filter(|a| !a.is_zero()).collect();
        let mut den: Vec<ContentKey> = Vec::new();
        for b in denominator.into_iter().filter(|b| !b.is_zero()) {
            match num.iter().position(|a| a.neg_equals(&b)) {
                Some(i) => {
                    num.remove(i);
                }
                None => den.push(b),
            }
        }
        num.sort();
        den.sort();
        ContentFunction {
            numerator: num,
            denominator: den,
        }
    }

    /// Expands into a rational function of `z`; `None` for symbolic delta.
    pub fn to_ratfun(&self) -> Option<RatFun<ZVar>> {
        let factor = |v: &ContentKey, sign: i64| match v {
            ContentKey::Value(x) => Some(Poly::<ZVar>::from_coeffs(vec![
                Rational::one(),
                x * Rational::from_integer(sign.into()),
            ])),
            ContentKey::PlusDelta(_) => None,
        };
        let mut num = Poly::one();
        for a in &self.numerator {
            num = num.mul(&factor(a, 1)?);
        }
        let mut den = Poly::one();
        for b in &self.denominator {
            den = den.mul(&factor(b, -1)?);
        }
        RatFun::new(num, den).ok()
    }
}

impl fmt::Display for ContentFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &ContentKey| match v {
            ContentKey::Value(x) => x.to_string(),
            ContentKey::PlusDelta(c) => ContentValue::shifted(*c).to_string(),
        };
        let num: Vec<String> = self
            .numerator
            .iter()
            .map(|a| format!("(1+({})z)", show(a)))
            .collect();
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|b| format!("(1-({})z)", show(b)))
            .collect();
        let num = if num.is_empty() {
            "1".to_string()
        } else {
            num.concat()
        };
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{}", den.concat())
        }
    }
}

/// Expands to a rational function via field arithmetic; an independent
/// route used to cross-check [`ContentFunction::to_ratfun`].
pub fn content_product<F: Field>(
    numerator: &[F],
    denominator: &[F],
    z: &F,
) -> Result<F, crate::scalars::ScalarError> {
    let mut num = F::one();
    for a in numerator {
        num = num.mul(&F::one().add(&a.mul(z)));
    }
    let mut den = F::one();
    for b in denominator {
        den = den.mul(&F::one().sub(&b.mul(z)));
    }
    num.div(&den)
}
