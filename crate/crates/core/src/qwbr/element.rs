use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::rewriting::{poly_add_term, Letter, NcPoly, RewriteSystem, Word};
use super::QError;
use crate::scalars::Field;

/// Linear combination of irreducible words of one rewriting system.
#[derive(Clone)]
pub struct QElement<F> {
    sys: Arc<RewriteSystem<F>>,
    terms: NcPoly<F>,
}

impl<F: Field> PartialEq for QElement<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sys, &other.sys) && self.terms == other.terms
    }
}

impl<F: Field> Eq for QElement<F> {}

impl<F: Field> fmt::Debug for QElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for QElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{}", self.sys.alphabet.show(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Product of two elements: concatenate words and normalize.
pub fn q_mul<F: Field>(
    a: &QElement<F>,
    b: &QElement<F>,
    sys: &Arc<RewriteSystem<F>>,
) -> Result<QElement<F>, QError> {
    if !Arc::ptr_eq(&a.sys, sys) {
        return Err(QError::Mismatch);
    }
    a.mul(b)
}

impl<F: Field> QElement<F> {
    pub fn zero(sys: &Arc<RewriteSystem<F>>) -> Self {
        QElement {
            sys: sys.clone(),
            terms: NcPoly::new(),
        }
    }

    pub fn scalar(sys: &Arc<RewriteSystem<F>>, c: F) -> Self {
        let mut terms = NcPoly::new();
        poly_add_term(&mut terms, Word::empty(), &c);
        QElement {
            sys: sys.clone(),
            terms,
        }
    }

    pub fn one(sys: &Arc<RewriteSystem<F>>) -> Self {
        Self::scalar(sys, F::one())
    }

    /// Normal form of an arbitrary word in letter indices.
    pub fn word(sys: &Arc<RewriteSystem<F>>, w: &[u8]) -> Self {
        QElement {
            sys: sys.clone(),
            terms: sys.normal_form(w),
        }
    }

    /// A basis element; `w` must be irreducible.
    pub fn basis(sys: &Arc<RewriteSystem<F>>, w: &Word) -> Self {
        Self::word(sys, &w.0)
    }

    pub fn generator(sys: &Arc<RewriteSystem<F>>, letter: Letter) -> Result<Self, QError> {
        let i = sys
            .alphabet
            .index(letter)
            .ok_or_else(|| QError::NoSuchGenerator(letter.to_string()))?;
        Ok(Self::word(sys, &[i]))
    }

    /// `S_i`, 1-based.
    pub fn s(sys: &Arc<RewriteSystem<F>>, i: usize) -> Result<Self, QError> {
        Self::generator(sys, Letter::S(i))
    }

    /// `S_i^-1 = S_i - (q - q^-1)`.
    pub fn s_inv(sys: &Arc<RewriteSystem<F>>, i: usize) -> Result<Self, QError> {
        Ok(Self::s(sys, i)?.add_scalar(&sys.params.z.neg()))
    }

    /// `E_{r,r+1}`.
    pub fn e(sys: &Arc<RewriteSystem<F>>) -> Result<Self, QError> {
        Self::generator(sys, Letter::E)
    }

    pub fn system(&self) -> &Arc<RewriteSystem<F>> {
        &self.sys
    }

    pub fn terms(&self) -> &NcPoly<F> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<(), QError> {
        if Arc::ptr_eq(&self.sys, &other.sys) {
            Ok(())
        } else {
            Err(QError::Mismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, QError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            poly_add_term(&mut terms, w.clone(), c);
        }
        Ok(QElement {
            sys: self.sys.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, QError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.sys);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.clone(), x.mul(c)))
            .collect();
        QElement {
            sys: self.sys.clone(),
            terms,
        }
    }

    /// `self + c * 1`.
    pub fn add_scalar(&self, c: &F) -> Self {
        let mut terms = self.terms.clone();
        poly_add_term(&mut terms, Word::empty(), c);
        QElement {
            sys: self.sys.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, QError> {
        self.check(other)?;
        let mut terms = NcPoly::new();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let cd = c.mul(d);
                let w = [&u.0[..], &v.0[..]].concat();
                for (x, e) in self.sys.normal_form(&w) {
                    poly_add_term(&mut terms, x, &cd.mul(&e));
                }
            }
        }
        Ok(QElement {
            sys: self.sys.clone(),
            terms,
        })
    }

    /// Product of several elements, left to right.
    pub fn product(sys: &Arc<RewriteSystem<F>>, factors: &[&Self]) -> Result<Self, QError> {
        let mut acc = Self::one(sys);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Result<Self, QError> {
        let mut acc = Self::one(&self.sys);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, QError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Commutes with every generator.
    pub fn is_central(&self) -> Result<bool, QError> {
        for letter in self.sys.alphabet.letters.clone() {
            if !self
                .commutator(&Self::generator(&self.sys, letter)?)?
                .is_zero()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates in the irreducible-word basis.
    pub fn coordinates(&self) -> Vec<F> {
        self.sys
            .normal_words()
            .iter()
            .map(|w| self.coeff(w))
            .collect()
    }

    pub fn from_coordinates(sys: &Arc<RewriteSystem<F>>, coords: &[F]) -> Self {
        let mut terms = NcPoly::new();
        for (w, c) in sys.normal_words().iter().zip(coords) {
            poly_add_term(&mut terms, w.clone(), c);
        }
        QElement {
            sys: sys.clone(),
            terms,
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({"word": self.sys.alphabet.show(w), "coeff": c.to_string()}))
            .collect();
        json!({"terms": terms})
    }
}
