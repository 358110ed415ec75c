use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::scalars::{Field, Matrix, Rational};
use crate::wbr_algebra::{power_sum_jm, AlgebraElement, AlgebraError, JmFamily};
use crate::weights::Weight;

/// Polynomial in the abstract power sums `p_1, p_2, ...` with rational
/// coefficients. A monomial is a weakly increasing list of indices; the
/// empty monomial is the unit, displayed as `p_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SupersymPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SupersymPoly {
    pub fn zero() -> Self {
        SupersymPoly::default()
    }

    pub fn one() -> Self {
        SupersymPoly::monomial(&[])
    }

    /// `p_k`; `p_0` is the unit.
    pub fn power_sum(k: u32) -> Self {
        if k == 0 {
            SupersymPoly::one()
        } else {
            SupersymPoly::monomial(&[k])
        }
    }

    /// Product of power sums; zero indices are dropped.
    pub fn monomial(indices: &[u32]) -> Self {
        let mut m: Vec<u32> = indices.iter().copied().filter(|&k| k > 0).collect();
        m.sort_unstable();
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        SupersymPoly { terms }
    }

    /// `e_k` through `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
    pub fn elementary(k: u32) -> Self {
        let mut e = vec![SupersymPoly::one()];
        for m in 1..=k {
            let mut acc = SupersymPoly::zero();
            for i in 1..=m {
                let term = e[(m - i) as usize].mul(&SupersymPoly::power_sum(i));
                acc = if i % 2 == 1 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            e.push(acc.scale(&Rational::new(1.into(), m.into())));
        }
        e.pop().expect("e_0 present")
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a monomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    fn insert(terms: &mut BTreeMap<Vec<u32>, Rational>, m: Vec<u32>, c: Rational) {
        let entry = terms.entry(m).or_insert_with(Rational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            SupersymPoly::insert(&mut terms, m.clone(), c.clone());
        }
        SupersymPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::one().neg()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SupersymPoly::zero();
        }
        SupersymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                SupersymPoly::insert(&mut terms, m, x.mul(y));
            }
        }
        SupersymPoly { terms }
    }

    /// Evaluation at a point where `sums[k - 1]` is the value of `p_k`.
    pub fn eval_with<F: Field>(&self, sums: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = F::from_rational(c);
            for &k in m {
                term = term.mul(&sums[k as usize - 1]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// The element `f(L_1, ..., L_{r+s})`.
    pub fn eval_jm<F: Field>(
        &self,
        sums: &PowerSums<F>,
    ) -> Result<AlgebraElement<F>, AlgebraError> {
        let alg = sums.family.algebra();
        let mut acc = alg.zero();
        for (m, c) in &self.terms {
            let mut term = alg.scalar(F::from_rational(c));
            for &k in m {
                term = term.mul(sums.get(k)?)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SupersymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let name = if m.is_empty() {
                "p_0".to_string()
            } else {
                m.iter()
                    .map(|k| format!("p_{k}"))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let (neg, abs) = if *c < Rational::zero() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            let sign = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sign);
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&name);
        }
        write!(f, "{out}")
    }
}

/// Lazily computed `p_1(L), ..., p_max(L)` for one Jucys-Murphy family.
pub struct PowerSums<F> {
    family: JmFamily<F>,
    slots: Vec<OnceLock<AlgebraElement<F>>>,
}

impl<F: Field> PowerSums<F> {
    pub fn new(family: &JmFamily<F>, max: u32) -> Self {
        PowerSums {
            family: family.clone(),
            slots: (0..max).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn family(&self) -> &JmFamily<F> {
        &self.family
    }

    pub fn get(&self, k: u32) -> Result<&AlgebraElement<F>, AlgebraError> {
        let slot = &self.slots[k as usize - 1];
        if let Some(v) = slot.get() {
            return Ok(v);
        }
        let v = power_sum_jm(&self.family, k)?;
        Ok(slot.get_or_init(|| v))
    }
}

/// `p_k` at a content vector: left entries to the `k`-th power plus
/// `(-1)^{k+1}` times the right entries to the `k`-th power. The first `r`
/// entries are the left block.
pub fn power_sums_at<F: Field>(values: &[F], r: usize, max: u32) -> Vec<F> {
    (1..=max)
        .map(|k| {
            let mut acc = F::zero();
            for (i, c) in values.iter().enumerate() {
                let term = c.pow(k);
                acc = if i < r || k % 2 == 1 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        })
        .collect()
}

/// The scalar by which `f(L)` acts on the cell module of `lambda`.
pub fn central_character<F: Field>(lambda: &Weight, f: &SupersymPoly, delta: &F) -> F {
    let values = lambda.contents().eval(delta);
    let sums = power_sums_at(&values, lambda.wall().r, f.degree());
    f.eval_with(&sums)
}

/// `M[i][j] = central_character(weights[j], polys[i])`.
pub fn evaluation_matrix<F: Field>(
    polys: &[SupersymPoly],
    weights: &[Weight],
    delta: &F,
) -> Matrix<F> {
    let max = polys.iter().map(SupersymPoly::degree).max().unwrap_or(0);
    let sums: Vec<Vec<F>> = weights
        .iter()
        .map(|w| power_sums_at(&w.contents().eval(delta), w.wall().r, max))
        .collect();
    Matrix::from_rows(
        polys
            .iter()
            .map(|p| sums.iter().map(|s| p.eval_with(s)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Wall;
    use crate::scalars::{rat, DeltaRatFun, Poly, RatFun};

    #[test]
    fn newton_identities() {
        let e2 = SupersymPoly::elementary(2);
        assert_eq!(e2.to_string(), "1/2*p_1*p_1 - 1/2*p_2");
        assert_eq!(SupersymPoly::elementary(0), SupersymPoly::one());
        assert_eq!(SupersymPoly::elementary(1), SupersymPoly::power_sum(1));
        assert_eq!(SupersymPoly::power_sum(0).to_string(), "p_0");
        // Ordinary symmetric functions at r = n, where e_k is known directly.
        let xs = [rat(2, 1), rat(3, 1), rat(5, 1)];
        let sums = power_sums_at(&xs, 3, 3);
        assert_eq!(SupersymPoly::elementary(2).eval_with(&sums), rat(31, 1));
        assert_eq!(SupersymPoly::elementary(3).eval_with(&sums), rat(30, 1));
    }

    #[test]
    fn character_examples() {
        let d = RatFun::from_poly(Poly::var());
        let w21 = Weight::from_parts(Wall::new(2, 1), vec![2], vec![1]).unwrap();
        let chi: DeltaRatFun = central_character(&w21, &SupersymPoly::power_sum(1), &d);
        assert_eq!(chi, d.add(&DeltaRatFun::one()));
        let w11 = Weight::from_parts(Wall::new(1, 1), vec![1], vec![1]).unwrap();
        let chi = central_character(&w11, &SupersymPoly::power_sum(2), &d);
        assert_eq!(chi, d.mul(&d).neg());
        assert_eq!(
            central_character(&w11, &SupersymPoly::one(), &d),
            DeltaRatFun::one()
        );
        let m = evaluation_matrix(&[SupersymPoly::one()], &[w11], &d);
        assert_eq!((m.rows(), m.cols()), (1, 1));
    }
}
