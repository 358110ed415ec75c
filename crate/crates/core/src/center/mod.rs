//! The center of `B_{r,s}(delta)`, supersymmetric central elements, the
//! Gelfand-Zetlin subalgebra and path idempotents.

mod fixtures;
mod idempotents;
mod supersym;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::diagrams::Wall;
use crate::diagrams::{DiagramError, WalledDiagram};
use crate::scalars::{
    nullspace, solve_in_span, DeltaField, Field, Matrix, ScalarError, ScalarMode,
};
use crate::wbr_algebra::{AlgebraElement, AlgebraError, JmFamily, WalledBrauer};
use crate::weights::{dot_variant, is_semisimple, DeltaSpec, Partition, WeightError};

pub use fixtures::{center_basis_b22, symmetric_pair_centralizer_b22};
pub use idempotents::{
    idempotents, verify_idempotents, EigenCheck, IdempotentReport, IdempotentSystem,
};
pub use supersym::{central_character, evaluation_matrix, power_sums_at, PowerSums, SupersymPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("element is not in the span of the given basis")]
    NotInSpan,
    #[error(
        "supersymmetric evaluations reach rank {rank}, expected {expected} in a semisimple case"
    )]
    RankDeficient { rank: usize, expected: usize },
    #[error("B{wall} is not semisimple at delta = {delta}")]
    NotSemisimple { wall: String, delta: String },
    #[error("paths {first} and {second} have equal content vectors")]
    ContentCollision { first: String, second: String },
    #[error("the fixture is only defined for B(2,2)")]
    WrongWall,
}

impl From<DiagramError> for CenterError {
    fn from(e: DiagramError) -> Self {
        CenterError::Algebra(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Nullspace,
    Supersym,
}

impl Provenance {
    fn as_str(self) -> &'static str {
        match self {
            Provenance::Nullspace => "nullspace",
            Provenance::Supersym => "supersym",
        }
    }
}

/// Linearly independent central elements.
#[derive(Clone)]
pub struct CenterBasis<F> {
    pub elements: Vec<AlgebraElement<F>>,
    pub provenance: Provenance,
}

impl<F: Field> CenterBasis<F> {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.elements.len(),
            "provenance": self.provenance.as_str(),
            "elements": self.elements.iter().map(AlgebraElement::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Incrementally built row echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Span<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Span<F> {
    pub(crate) fn new() -> Self {
        Span { rows: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the current rows.
    pub(crate) fn insert(&mut self, v: &[F]) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        self.rows.push((p, v.iter().map(|x| x.mul(&inv)).collect()));
        true
    }
}

/// Basis of `{x : x g = g x for every generator g}` from the nullspace of
/// the stacked matrices of `x -> x g - g x` on the diagram basis.
pub fn compute_center<F: Field>(
    alg: &WalledBrauer<F>,
    cap: usize,
) -> Result<CenterBasis<F>, CenterError> {
    let basis = alg.basis(cap)?;
    let gens = alg.generators();
    let blocks: Vec<Vec<Vec<F>>> = gens
        .par_iter()
        .map(|g| -> Result<Vec<Vec<F>>, AlgebraError> {
            // Column j holds the image of basis element j.
            let mut cols = Vec::with_capacity(basis.len());
            for d in &basis {
                let x = alg.term(d.clone(), F::one());
                cols.push(x.commutator(g)?.coordinates(&basis));
            }
            Ok(cols)
        })
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::with_capacity(blocks.len() * basis.len());
    for cols in &blocks {
        for i in 0..basis.len() {
            rows.push(cols.iter().map(|c| c[i].clone()).collect::<Vec<F>>());
        }
    }
    let elements = if rows.is_empty() {
        // No generators: the algebra is spanned by the identity.
        basis
            .iter()
            .map(|d| alg.term(d.clone(), F::one()))
            .collect()
    } else {
        nullspace(&Matrix::from_rows(rows))
            .iter()
            .map(|v| AlgebraElement::from_coordinates(alg, &basis, v))
            .collect()
    };
    Ok(CenterBasis {
        elements,
        provenance: Provenance::Nullspace,
    })
}

/// Coefficients of `x` in the basis; exact and unique.
pub fn expand_in_basis<F: Field>(
    x: &AlgebraElement<F>,
    basis: &[AlgebraElement<F>],
) -> Result<Vec<F>, CenterError> {
    let mut support: Vec<WalledDiagram> = x.terms().keys().cloned().collect();
    for b in basis {
        support.extend(b.terms().keys().cloned());
    }
    support.sort();
    support.dedup();
    let columns: Vec<Vec<F>> = basis.iter().map(|b| b.coordinates(&support)).collect();
    solve_in_span(&columns, &x.coordinates(&support)).ok_or(CenterError::NotInSpan)
}

/// Rank of a list of elements inside the algebra.
pub fn element_rank<F: Field>(elements: &[AlgebraElement<F>]) -> usize {
    let mut support: Vec<WalledDiagram> = elements
        .iter()
        .flat_map(|e| e.terms().keys().cloned())
        .collect();
    support.sort();
    support.dedup();
    let mut span = Span::new();
    for e in elements {
        span.insert(&e.coordinates(&support));
    }
    span.len()
}

/// The Jucys-Murphy family of the tower the branching graph describes:
/// the usual family for `r >= s`, and for `r < s` the mirror image of the
/// family of the transposed wall.
pub fn gz_jm_family<F: Field>(alg: &WalledBrauer<F>) -> Result<JmFamily<F>, CenterError> {
    let wall = alg.wall();
    if wall.r >= wall.s {
        return Ok(alg.jm_family());
    }
    let mirrored =
        WalledBrauer::with_delta(wall.transpose(), alg.mode().clone(), alg.delta().clone());
    let elements = mirrored
        .jm_family()
        .elements()
        .iter()
        .map(|l| l.mirror_into(alg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JmFamily::from_elements(alg, elements))
}

/// Dimension of the unital subalgebra generated by the Jucys-Murphy family,
/// found by closing the span of monomials under multiplication.
pub fn gz_dimension<F: Field>(alg: &WalledBrauer<F>, cap: usize) -> Result<usize, CenterError> {
    let basis = alg.basis(cap)?;
    let family = gz_jm_family(alg)?;
    let mut span = Span::new();
    let one = alg.one();
    span.insert(&one.coordinates(&basis));
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for l in family.elements() {
            let y = x.mul(l)?;
            if span.insert(&y.coordinates(&basis)) {
                frontier.push(y);
            }
        }
    }
    Ok(span.len())
}

/// Outcome of the greedy search for supersymmetric polynomials whose
/// central characters separate the simple-module weights.
#[derive(Clone, Debug)]
pub struct SpanningSelection {
    pub polys: Vec<SupersymPoly>,
    pub rank: usize,
    /// `|dot-Lambda|`.
    pub weights: usize,
    /// Number of distinct central-character columns; the largest rank any
    /// selection can reach.
    pub distinct: usize,
    pub semisimple: bool,
}

impl SpanningSelection {
    pub fn warning(&self) -> Option<String> {
        (!self.semisimple).then(|| {
            format!(
                "not semisimple: rank {} of {} weights ({} distinct characters)",
                self.rank, self.weights, self.distinct
            )
        })
    }
}

/// Candidates in search order: `p_0, ..., p_{2n}`, then products of at
/// least two power sums with indices up to `2n`, by total degree, then
/// number of factors.
fn product_candidates(n: u32, degree: u32) -> Vec<SupersymPoly> {
    let mut parts: Vec<Vec<u32>> = Partition::all(degree as usize)
        .into_iter()
        .map(|p| p.parts().iter().map(|&k| k as u32).collect::<Vec<u32>>())
        .filter(|p| p.len() >= 2 && p.iter().all(|&k| k <= 2 * n))
        .collect();
    parts.sort_by_key(|p| p.len());
    parts.iter().map(|p| SupersymPoly::monomial(p)).collect()
}

pub fn select_spanning_polys<F: DeltaField>(
    wall: Wall,
    mode: &ScalarMode,
) -> Result<SpanningSelection, CenterError> {
    let delta = F::delta_for(mode)?;
    let spec = DeltaSpec::from_mode(mode);
    let weights = dot_variant(wall, &spec);
    let n = wall.n() as u32;
    let semisimple = is_semisimple(wall, &spec);
    let columns: Vec<Vec<F>> = weights
        .iter()
        .map(|w| power_sums_at(&w.contents().eval(&delta), wall.r, 2 * n))
        .collect();
    let mut distinct = columns.clone();
    distinct.sort();
    distinct.dedup();
    let distinct = distinct.len();

    let mut span = Span::new();
    let mut polys = Vec::new();
    let consider = |p: SupersymPoly, span: &mut Span<F>, polys: &mut Vec<SupersymPoly>| {
        let row: Vec<F> = weights
            .iter()
            .map(|w| central_character(w, &p, &delta))
            .collect();
        if span.insert(&row) {
            polys.push(p);
        }
        span.len() == distinct
    };
    let mut done = (0..=2 * n).any(|k| consider(SupersymPoly::power_sum(k), &mut span, &mut polys));
    // The values of p_1..p_2n separate the distinct points, and polynomials
    // of degree below the number of points in separating coordinates
    // interpolate every function on them, which bounds the search.
    let bound = 2 * n * (distinct.max(1) as u32);
    let mut degree = 2;
    while !done && degree <= bound {
        done = product_candidates(n, degree)
            .into_iter()
            .any(|p| consider(p, &mut span, &mut polys));
        degree += 1;
    }
    let rank = span.len();
    if semisimple && rank < weights.len() {
        return Err(CenterError::RankDeficient {
            rank,
            expected: weights.len(),
        });
    }
    Ok(SpanningSelection {
        polys,
        rank,
        weights: weights.len(),
        distinct,
        semisimple,
    })
}

/// The elements `f(L)` for the given polynomials.
pub fn supersym_elements<F: Field>(
    family: &JmFamily<F>,
    polys: &[SupersymPoly],
) -> Result<Vec<AlgebraElement<F>>, CenterError> {
    let max = polys.iter().map(SupersymPoly::degree).max().unwrap_or(0);
    let sums = PowerSums::new(family, max);
    Ok(polys
        .iter()
        .map(|p| p.eval_jm(&sums))
        .collect::<Result<_, _>>()?)
}
