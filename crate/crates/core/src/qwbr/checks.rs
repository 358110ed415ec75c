use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::element::QElement;
use super::jm::{contraction, q_jm_family, q_power_sum, transposition_element};
use super::rewriting::{Letter, RewriteSystem};
use super::QError;
use crate::center::Span;
use crate::diagrams::Wall;
use crate::scalars::pit::PitPlan;
use crate::scalars::{nullspace, rat, regular_at, Field, Matrix, QRatFun, Rational, ScalarMode};
use crate::wbr_algebra::{AlgebraElement, RelationCheck, RelationReport, WalledBrauer};
use crate::weights::Partition;

type Instance<F> = (&'static str, Vec<usize>, QElement<F>, QElement<F>);

/// Relation checks with the family from the defining recursion.
pub fn verify_q_relations<F: Field>(sys: &Arc<RewriteSystem<F>>) -> Result<RelationReport, QError> {
    let family = q_jm_family(sys)?;
    verify_q_relations_with(sys, &family)
}

/// Every admissible instance of the conjugate-element identities and the
/// quantum Jucys-Murphy identities, compared in normal form.
pub fn verify_q_relations_with<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    family: &[QElement<F>],
) -> Result<RelationReport, QError> {
    let Wall { r, s } = sys.wall();
    let n = r + s;
    let p = &sys.params;
    let z = p.z.clone();
    let rho_inv = p.rho.inv()?;
    let one = QElement::one(sys);
    let gens: Vec<usize> = (1..n).filter(|&i| i != r).collect();
    let l = |k: usize| &family[k - 1];
    let s_ = |i: usize| QElement::s(sys, i);
    let mut out: Vec<Instance<F>> = Vec::new();

    let mut conjugates = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if b <= r || a > r {
                conjugates.push((a, b, transposition_element(sys, a, b)?));
            }
            if a <= r && b > r {
                conjugates.push((a, b, contraction(sys, a, b)?));
            }
        }
    }
    for &i in &gens {
        let si = s_(i)?;
        for (j, k, x) in &conjugates {
            if ![*j, *k].contains(&i) && ![*j, *k].contains(&(i + 1)) {
                out.push((
                    "generator-commutes-with-far-conjugate",
                    vec![i, *j, *k],
                    si.mul(x)?,
                    x.mul(&si)?,
                ));
            }
        }
    }
    if r > 0 && s > 0 {
        let e = QElement::e(sys)?;
        for i in 1..r {
            let si = s_(i)?;
            for k in r + 1..=n {
                let a = contraction(sys, i, k)?;
                let b = contraction(sys, i + 1, k)?;
                let bz = b.scale(&z);
                out.push((
                    "generator-slides-past-contraction",
                    vec![i, k],
                    si.mul(&a)?,
                    b.mul(&si)?.sub(&bz)?,
                ));
                out.push((
                    "contraction-slides-past-generator",
                    vec![i, k],
                    a.mul(&si)?,
                    si.mul(&b)?.sub(&bz)?,
                ));
            }
        }
        for j in 1..r {
            for k in r + 2..=n {
                let x = contraction(sys, j, k)?;
                out.push(("contractions-commute", vec![j, k], e.mul(&x)?, x.mul(&e)?));
            }
        }
        for i in 1..r {
            let x = contraction(sys, i, r + 1)?;
            let t = transposition_element(sys, i, r)?;
            out.push((
                "contraction-absorbs-left",
                vec![i],
                e.mul(&x)?,
                e.mul(&t)?.scale(&rho_inv),
            ));
            out.push((
                "contraction-absorbs-left",
                vec![i],
                x.mul(&e)?,
                t.mul(&e)?.scale(&rho_inv),
            ));
        }
        for k in r + 2..=n {
            let x = contraction(sys, r, k)?;
            let t = transposition_element(sys, r + 1, k)?;
            out.push((
                "contraction-absorbs-right",
                vec![k],
                e.mul(&x)?,
                e.mul(&t)?.scale(&p.rho),
            ));
            out.push((
                "contraction-absorbs-right",
                vec![k],
                x.mul(&e)?,
                t.mul(&e)?.scale(&p.rho),
            ));
        }
        let wall_sum = l(r).add(l(r + 1))?;
        out.push((
            "jm-wall-pair-annihilated",
            vec![r],
            e.mul(&wall_sum)?,
            QElement::zero(sys),
        ));
        out.push((
            "jm-wall-pair-annihilated",
            vec![r + 1],
            wall_sum.mul(&e)?,
            QElement::zero(sys),
        ));
        for k in (1..=n).filter(|&k| k != r && k != r + 1) {
            out.push((
                "jm-commutes-with-contraction",
                vec![k],
                e.mul(l(k))?,
                l(k).mul(&e)?,
            ));
        }
    }
    for i in 1..r {
        let si = s_(i)?;
        let rhs = one.sub(&l(i).scale(&z))?;
        out.push((
            "jm-left-exchange",
            vec![i],
            si.mul(l(i + 1))?.sub(&l(i).mul(&si)?)?,
            rhs.clone(),
        ));
        out.push((
            "jm-left-exchange",
            vec![i],
            l(i + 1).mul(&si)?.sub(&si.mul(l(i))?)?,
            rhs,
        ));
    }
    for i in r + 1..n {
        let si = s_(i)?;
        let rhs = one.add(&l(i + 1).scale(&z))?;
        out.push((
            "jm-right-exchange",
            vec![i],
            si.mul(l(i + 1))?.sub(&l(i).mul(&si)?)?,
            rhs.clone(),
        ));
        out.push((
            "jm-right-exchange",
            vec![i],
            l(i + 1).mul(&si)?.sub(&si.mul(l(i))?)?,
            rhs,
        ));
    }
    for &i in &gens {
        let si = s_(i)?;
        for k in (1..=n).filter(|&k| k != i && k != i + 1) {
            out.push((
                "jm-commutes-with-generator",
                vec![i, k],
                si.mul(l(k))?,
                l(k).mul(&si)?,
            ));
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((
                "jm-pairwise-commute",
                vec![a, b],
                l(a).mul(l(b))?,
                l(b).mul(l(a))?,
            ));
        }
    }
    let checks = out
        .into_par_iter()
        .map(|(relation, indices, lhs, rhs)| RelationCheck {
            relation,
            indices,
            passed: lhs == rhs,
        })
        .collect();
    Ok(RelationReport { checks })
}

/// Whether the supersymmetric power sum of degree `m` commutes with every
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityCheck {
    pub m: u32,
    pub central: bool,
}

pub fn q_supersym_central_check<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    family: &[QElement<F>],
    m_max: u32,
) -> Result<Vec<CentralityCheck>, QError> {
    (0..=m_max)
        .map(|m| {
            Ok(CentralityCheck {
                m,
                central: q_power_sum(sys, family, m)?.is_central()?,
            })
        })
        .collect()
}

/// Specializations `(q0, rho0)` drawn from a seeded stream, at least three.
pub fn seed_modes(seed: u64, count: usize) -> Vec<ScalarMode> {
    let count = count.max(3);
    PitPlan::with_count(seed, count - 1, count)
        .points
        .into_iter()
        .map(|p| ScalarMode::RationalQR { q: p.q, rho: p.rho })
        .collect()
}

/// Number of random basis-word triples `(a, b, c)` with `(ab)c != a(bc)`.
pub fn associativity_failures<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    trials: usize,
    seed: u64,
) -> Result<usize, QError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = sys.normal_words();
    let triples: Vec<[usize; 3]> = (0..trials)
        .map(|_| [0; 3].map(|_| rng.gen_range(0..words.len())))
        .collect();
    let failures: Vec<bool> = triples
        .par_iter()
        .map(|t| -> Result<bool, QError> {
            let [a, b, c] = t.map(|i| QElement::basis(sys, &words[i]));
            Ok(a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)?)
        })
        .collect::<Result<_, _>>()?;
    Ok(failures.into_iter().filter(|&f| f).count())
}

/// Outcome of specializing a generic-q system at `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalLimitReport {
    pub n: u32,
    pub max_length: usize,
    pub words_checked: usize,
    /// Rank of the images of the irreducible words in `B_{r,s}(N)`.
    pub basis_rank: usize,
    pub dimension: usize,
    pub word_failures: Vec<String>,
    /// `k` for which the specialized `L_k` differs from the classical one.
    pub jm_failures: Vec<usize>,
}

impl ClassicalLimitReport {
    pub fn passed(&self) -> bool {
        self.word_failures.is_empty()
            && self.jm_failures.is_empty()
            && self.basis_rank == self.dimension
    }

    /// Turns the first recorded failure into an error.
    pub fn ensure(&self) -> Result<(), QError> {
        if let Some(w) = self.word_failures.first() {
            return Err(QError::LimitMismatch {
                what: format!("word {w}"),
            });
        }
        if let Some(k) = self.jm_failures.first() {
            return Err(QError::LimitMismatch {
                what: format!("L_{k}"),
            });
        }
        if self.basis_rank != self.dimension {
            return Err(QError::LimitMismatch {
                what: format!("basis rank {}", self.basis_rank),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.n,
            "max_length": self.max_length,
            "words_checked": self.words_checked,
            "basis_rank": self.basis_rank,
            "dimension": self.dimension,
            "word_failures": self.word_failures,
            "jm_failures": self.jm_failures,
            "passed": self.passed(),
        })
    }
}

fn at_q1(c: &QRatFun, entry: impl Fn() -> String) -> Result<Rational, QError> {
    let one = rat(1, 1);
    if !regular_at(c, &one) {
        return Err(QError::PoleAtQ1 { entry: entry() });
    }
    Ok(c.eval(&one)?)
}

/// Maps `S_i` to `(i, i+1)` and `E` to `e_{r,r+1}`, specializes at `q = 1`
/// and compares with `B_{r,s}(N)`: every generator word up to `max_length`,
/// the images of the irreducible words, and the Jucys-Murphy family.
pub fn classical_limit_check(
    sys: &Arc<RewriteSystem<QRatFun>>,
    max_length: usize,
) -> Result<ClassicalLimitReport, QError> {
    let ScalarMode::GenericQ(n) = sys.params.mode else {
        return Err(QError::WrongMode(sys.params.mode.to_string()));
    };
    let wall = sys.wall();
    let alg = WalledBrauer::<Rational>::new(wall, ScalarMode::RationalAt(rat(n as i64, 1)))?;
    let images: Vec<AlgebraElement<Rational>> = sys
        .alphabet
        .letters
        .iter()
        .map(|l| match l {
            Letter::S(i) => alg.transposition(*i, i + 1),
            Letter::E => alg.e(wall.r, wall.r + 1),
        })
        .collect();
    let image_of_word = |w: &[u8]| -> Result<AlgebraElement<Rational>, QError> {
        let mut acc = alg.one();
        for &a in w {
            acc = acc.mul(&images[a as usize])?;
        }
        Ok(acc)
    };
    let basis_images: Vec<AlgebraElement<Rational>> = sys
        .normal_words()
        .iter()
        .map(|w| image_of_word(&w.0))
        .collect::<Result<_, _>>()?;
    let specialize = |x: &QElement<QRatFun>,
                      label: &dyn Fn() -> String|
     -> Result<AlgebraElement<Rational>, QError> {
        let mut acc = alg.zero();
        for (i, w) in sys.normal_words().iter().enumerate() {
            let c = x.coeff(w);
            if !c.is_zero() {
                let v = at_q1(&c, || format!("{} in {}", sys.alphabet.show(w), label()))?;
                acc = acc.add(&basis_images[i].scale(&v))?;
            }
        }
        Ok(acc)
    };

    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_length {
        level = level
            .iter()
            .flat_map(|w| {
                (0..sys.alphabet.letters.len() as u8).map(move |a| [&w[..], &[a]].concat())
            })
            .collect();
        words.extend(level.iter().cloned());
    }
    let mut word_failures = Vec::new();
    for w in &words {
        let label = || sys.alphabet.show(&super::Word(w.clone()));
        let lhs = specialize(&QElement::word(sys, w), &label)?;
        if lhs != image_of_word(w)? {
            word_failures.push(label());
        }
    }
    let mut basis_rank = Span::new();
    let support = alg.basis(crate::diagrams::DEFAULT_SIZE_CAP)?;
    for x in &basis_images {
        basis_rank.insert(&x.coordinates(&support));
    }
    let classical = alg.jm_family();
    let mut jm_failures = Vec::new();
    for (k, l) in q_jm_family(sys)?.iter().enumerate() {
        if specialize(l, &|| format!("L_{}", k + 1))? != *classical.get(k + 1) {
            jm_failures.push(k + 1);
        }
    }
    Ok(ClassicalLimitReport {
        n,
        max_length,
        words_checked: words.len(),
        basis_rank: basis_rank.len(),
        dimension: sys.dimension(),
        word_failures,
        jm_failures,
    })
}

/// Dimension of the center and the rank its supersymmetric part reaches.
#[derive(Clone)]
pub struct QCenterReport<F> {
    pub dimension: usize,
    pub supersym_rank: usize,
    pub basis: Vec<QElement<F>>,
}

impl<F: Field> QCenterReport<F> {
    pub fn to_json(&self) -> Value {
        json!({"dimension": self.dimension, "supersym_rank": self.supersym_rank})
    }
}

/// Nullspace of `x -> xg - gx` over all generators `g` on the basis of
/// irreducible words, and the rank inside it of the supersymmetric power
/// sums `1, p_1, ..., p_{2n}` and their products up to degree `2n`.
pub fn q_center_dimension<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
) -> Result<QCenterReport<F>, QError> {
    let words = sys.normal_words();
    let gens: Vec<QElement<F>> = sys
        .alphabet
        .letters
        .iter()
        .map(|&l| QElement::generator(sys, l))
        .collect::<Result<_, _>>()?;
    let blocks: Vec<Vec<Vec<F>>> = gens
        .par_iter()
        .map(|g| {
            words
                .iter()
                .map(|w| Ok(QElement::basis(sys, w).commutator(g)?.coordinates()))
                .collect::<Result<Vec<_>, QError>>()
        })
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for cols in &blocks {
        for i in 0..words.len() {
            rows.push(cols.iter().map(|c| c[i].clone()).collect::<Vec<F>>());
        }
    }
    let basis: Vec<QElement<F>> = if rows.is_empty() {
        vec![QElement::one(sys)]
    } else {
        nullspace(&Matrix::from_rows(rows))
            .iter()
            .map(|v| QElement::from_coordinates(sys, v))
            .collect()
    };
    let dimension = basis.len();

    let family = q_jm_family(sys)?;
    let top = 2 * sys.wall().n() as u32;
    // The unit stands in for p_0, which vanishes when r = s.
    let mut sums = vec![QElement::one(sys)];
    for m in 1..=top {
        sums.push(q_power_sum(sys, &family, m)?);
    }
    let mut candidates: Vec<Vec<u32>> = (0..=top).map(|m| vec![m]).collect();
    for degree in 2..=top as usize {
        let mut parts: Vec<Vec<u32>> = Partition::all(degree)
            .into_iter()
            .map(|p| p.parts().iter().map(|&k| k as u32).collect::<Vec<u32>>())
            .filter(|p| p.len() >= 2)
            .collect();
        parts.sort_by_key(Vec::len);
        candidates.extend(parts);
    }
    let mut span = Span::new();
    for c in candidates {
        if span.len() == dimension {
            break;
        }
        let mut x = QElement::one(sys);
        for &m in &c {
            x = x.mul(&sums[m as usize])?;
        }
        let mut trial = span.clone();
        if trial.insert(&x.coordinates()) && x.is_central()? {
            span = trial;
        }
    }
    Ok(QCenterReport {
        dimension,
        supersym_rank: span.len(),
        basis,
    })
}
