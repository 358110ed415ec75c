use std::fmt;

use serde_json::{json, Value};

use super::field::{Field, Rational, ScalarError};
use super::poly::{DeltaVar, Poly, QVar};
use super::ratfun::RatFun;

/// Where coefficients live for one computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    /// Rational coefficients with the loop parameter specialized.
    RationalAt(Rational),
    /// Coefficients in the rational function field of the loop parameter.
    GenericDelta,
    /// Coefficients in the rational function field of `q`, with `rho = q^N`.
    GenericQ(u32),
    /// Rational coefficients with both `q` and `rho` specialized.
    RationalQR { q: Rational, rho: Rational },
}

impl ScalarMode {
    /// Checks that `q^2 != 1` and `rho` is invertible.
    pub fn rational_qr(q: Rational, rho: Rational) -> Result<Self, ScalarError> {
        let mode = ScalarMode::RationalQR { q, rho };
        mode.validate()?;
        Ok(mode)
    }

    pub fn validate(&self) -> Result<(), ScalarError> {
        if let ScalarMode::RationalQR { q, rho } = self {
            if q.is_zero() || (q * q).is_one() || rho.is_zero() {
                return Err(ScalarError::InvalidMode {
                    mode: self.to_string(),
                    what: "a specialization with q != 0, q^2 != 1, rho != 0",
                });
            }
        }
        Ok(())
    }

    /// Loop parameter as a rational, when it is a constant in this mode.
    pub fn delta_rational(&self) -> Option<Rational> {
        match self {
            ScalarMode::RationalAt(d) => Some(d.clone()),
            ScalarMode::RationalQR { q, rho } => {
                let num = rho - rho.recip();
                let den = q - q.recip();
                Some(num / den)
            }
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ScalarMode::RationalAt(d) => json!({"kind": "rational", "delta": d.to_string()}),
            ScalarMode::GenericDelta => json!({"kind": "generic-delta"}),
            ScalarMode::GenericQ(n) => json!({"kind": "generic-q", "rho": format!("q^{n}")}),
            ScalarMode::RationalQR { q, rho } => {
                json!({"kind": "rational-qr", "q": q.to_string(), "rho": rho.to_string()})
            }
        }
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::RationalAt(d) => write!(f, "rational(d={d})"),
            ScalarMode::GenericDelta => write!(f, "generic-delta"),
            ScalarMode::GenericQ(n) => write!(f, "generic-q(rho=q^{n})"),
            ScalarMode::RationalQR { q, rho } => write!(f, "rational-qr(q={q}, rho={rho})"),
        }
    }
}

/// `(rho - rho^-1) / (q - q^-1)` as a rational function of `q` with `rho = q^n`.
pub fn quantum_delta(n: u32) -> RatFun<QVar> {
    let q = RatFun::<QVar>::var();
    let rho = Field::pow(&q, n);
    let num = rho.sub(&rho.inv().expect("q^n is invertible"));
    let den = q.sub(&q.inv().expect("q is invertible"));
    num.div(&den).expect("q - q^-1 is nonzero")
}

/// Coefficient fields that can supply the loop parameter for a mode.
pub trait DeltaField: Field {
    fn delta_for(mode: &ScalarMode) -> Result<Self, ScalarError>;
}

impl DeltaField for Rational {
    fn delta_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        mode.validate()?;
        mode.delta_rational()
            .ok_or_else(|| ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "a rational loop parameter",
            })
    }
}

impl DeltaField for RatFun<DeltaVar> {
    fn delta_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::GenericDelta => Ok(RatFun::from_poly(Poly::var())),
            ScalarMode::RationalAt(d) => Ok(RatFun::from_rational(d)),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "a loop parameter in Q(d)",
            }),
        }
    }
}

impl DeltaField for RatFun<QVar> {
    fn delta_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::GenericQ(n) => Ok(quantum_delta(*n)),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "a loop parameter in Q(q)",
            }),
        }
    }
}

/// Coefficient fields that can supply `q` and `rho` for a mode.
pub trait QuantumField: DeltaField {
    fn q_for(mode: &ScalarMode) -> Result<Self, ScalarError>;
    fn rho_for(mode: &ScalarMode) -> Result<Self, ScalarError>;
}

impl QuantumField for Rational {
    fn q_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::RationalQR { q, .. } => Ok(q.clone()),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "a rational q",
            }),
        }
    }
    fn rho_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::RationalQR { rho, .. } => Ok(rho.clone()),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "a rational rho",
            }),
        }
    }
}

impl QuantumField for RatFun<QVar> {
    fn q_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::GenericQ(_) => Ok(RatFun::var()),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "q in Q(q)",
            }),
        }
    }
    fn rho_for(mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::GenericQ(n) => Ok(Field::pow(&RatFun::var(), *n)),
            _ => Err(ScalarError::InvalidMode {
                mode: mode.to_string(),
                what: "rho in Q(q)",
            }),
        }
    }
}
