//! Linear combinations of walled Brauer diagrams, Jucys-Murphy elements and
//! the relation identities they satisfy.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::diagrams::{
    compose_unchecked, enumerate, DiagramError, GeneratorKind, Wall, WalledDiagram,
};
use crate::scalars::{DeltaField, Field, ScalarError, ScalarMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("elements belong to different algebras: {0} and {1}")]
    Mismatch(String, String),
    #[error("element is not central")]
    NotCentral,
}

struct Params<F> {
    wall: Wall,
    mode: ScalarMode,
    delta: F,
    delta_powers: Vec<F>,
}

/// The algebra `B_{r,s}(delta)` with coefficients in `F`.
#[derive(Clone)]
pub struct WalledBrauer<F> {
    params: Arc<Params<F>>,
}

impl<F: Field> fmt::Debug for WalledBrauer<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{} over {}", self.wall(), self.mode())
    }
}

impl<F: Field> PartialEq for WalledBrauer<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.params, &other.params)
            || (self.wall() == other.wall() && self.mode() == other.mode())
    }
}

impl<F: DeltaField> WalledBrauer<F> {
    pub fn new(wall: Wall, mode: ScalarMode) -> Result<Self, AlgebraError> {
        let delta = F::delta_for(&mode)?;
        Ok(Self::with_delta(wall, mode, delta))
    }
}

impl<F: Field> WalledBrauer<F> {
    /// Uses an explicit loop parameter; `mode` is only a label.
    pub fn with_delta(wall: Wall, mode: ScalarMode, delta: F) -> Self {
        let mut delta_powers = vec![F::one()];
        for k in 1..=wall.n() {
            let next = delta_powers[k - 1].mul(&delta);
            delta_powers.push(next);
        }
        WalledBrauer {
            params: Arc::new(Params {
                wall,
                mode,
                delta,
                delta_powers,
            }),
        }
    }

    pub fn wall(&self) -> Wall {
        self.params.wall
    }

    pub fn mode(&self) -> &ScalarMode {
        &self.params.mode
    }

    pub fn delta(&self) -> &F {
        &self.params.delta
    }

    fn delta_pow(&self, k: usize) -> F {
        match self.params.delta_powers.get(k) {
            Some(p) => p.clone(),
            None => self.params.delta.pow(k as u32),
        }
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        AlgebraElement {
            alg: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(&self, c: F) -> AlgebraElement<F> {
        self.term(WalledDiagram::identity(self.wall()), c)
    }

    pub fn one(&self) -> AlgebraElement<F> {
        self.scalar(F::one())
    }

    pub fn term(&self, d: WalledDiagram, c: F) -> AlgebraElement<F> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        AlgebraElement {
            alg: self.clone(),
            terms,
        }
    }

    pub fn diagram(&self, d: WalledDiagram) -> Result<AlgebraElement<F>, AlgebraError> {
        if d.wall() != self.wall() {
            return Err(DiagramError::WallMismatch(d.wall(), self.wall()).into());
        }
        Ok(self.term(d, F::one()))
    }

    pub fn generator(&self, kind: GeneratorKind) -> Result<AlgebraElement<F>, AlgebraError> {
        Ok(self.term(WalledDiagram::generator(self.wall(), kind)?, F::one()))
    }

    /// `(a, b)`, 1-based columns on one side of the wall.
    pub fn transposition(&self, a: usize, b: usize) -> AlgebraElement<F> {
        self.generator(GeneratorKind::Transposition(a, b))
            .expect("admissible transposition")
    }

    /// `e_{j,k}` with `j <= r < k`.
    pub fn e(&self, j: usize, k: usize) -> AlgebraElement<F> {
        self.generator(GeneratorKind::E(j, k))
            .expect("admissible contraction")
    }

    /// The generating set `s_i (i != r)` together with `e_{r,r+1}` when both
    /// sides are nonempty.
    pub fn generators(&self) -> Vec<AlgebraElement<F>> {
        let Wall { r, s } = self.wall();
        let mut out: Vec<_> = (1..r + s)
            .filter(|&i| i != r)
            .map(|i| {
                self.generator(GeneratorKind::S(i))
                    .expect("simple transposition")
            })
            .collect();
        if r > 0 && s > 0 {
            out.push(self.e(r, r + 1));
        }
        out
    }

    /// Diagram basis in canonical order.
    pub fn basis(&self, cap: usize) -> Result<Vec<WalledDiagram>, AlgebraError> {
        Ok(enumerate(self.wall(), cap)?)
    }

    /// Jucys-Murphy elements `L_1, ..., L_{r+s}`.
    pub fn jm_family(&self) -> JmFamily<F> {
        let Wall { r, s } = self.wall();
        let n = r + s;
        let mut elements = Vec::with_capacity(n);
        for k in 1..=n {
            let mut l = self.zero();
            if k <= r {
                for j in 1..k {
                    l = l.add_term(
                        &WalledDiagram::generator(self.wall(), GeneratorKind::Transposition(j, k))
                            .unwrap(),
                        &F::one(),
                    );
                }
            } else {
                for j in 1..=r {
                    l = l.add_term(
                        &WalledDiagram::generator(self.wall(), GeneratorKind::E(j, k)).unwrap(),
                        &F::one().neg(),
                    );
                }
                for j in r + 1..k {
                    l = l.add_term(
                        &WalledDiagram::generator(self.wall(), GeneratorKind::Transposition(j, k))
                            .unwrap(),
                        &F::one(),
                    );
                }
                l = l
                    .add(&self.scalar(self.delta().clone()))
                    .expect("same algebra");
            }
            elements.push(l);
        }
        JmFamily {
            alg: self.clone(),
            elements,
        }
    }

    /// The shifted family `L_k + a` for `k <= r` and `L_k - a` for `k > r`.
    pub fn jm_family_shifted(&self, a: &F) -> JmFamily<F> {
        let base = self.jm_family();
        let r = self.wall().r;
        let elements = base
            .elements
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let shift = if i < r { a.clone() } else { a.neg() };
                l.add(&self.scalar(shift)).expect("same algebra")
            })
            .collect();
        JmFamily {
            alg: self.clone(),
            elements,
        }
    }
}

/// Finitely supported map from diagrams to nonzero coefficients.
#[derive(Clone)]
pub struct AlgebraElement<F> {
    alg: WalledBrauer<F>,
    terms: BTreeMap<WalledDiagram, F>,
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.terms == other.terms
    }
}

impl<F: Field> Eq for AlgebraElement<F> {}

impl<F: Field> fmt::Debug for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("({c}){d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> AlgebraElement<F> {
    pub fn algebra(&self) -> &WalledBrauer<F> {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<WalledDiagram, F> {
        &self.terms
    }

    pub fn coeff(&self, d: &WalledDiagram) -> F {
        self.terms.get(d).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch(
                format!("{:?}", self.alg),
                format!("{:?}", other.alg),
            ))
        }
    }

    fn add_term(mut self, d: &WalledDiagram, c: &F) -> Self {
        accumulate(&mut self.terms, d, c);
        self
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            accumulate(&mut terms, d, c);
        }
        Ok(AlgebraElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.alg.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, x)| (d.clone(), x.mul(c)))
            .collect();
        AlgebraElement {
            alg: self.alg.clone(),
            terms,
        }
    }

    /// `self + c * 1`.
    pub fn add_scalar(&self, c: &F) -> Self {
        let id = WalledDiagram::identity(self.alg.wall());
        self.clone().add_term(&id, c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut acc: HashMap<WalledDiagram, F> = HashMap::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = compose_unchecked(d1, d2);
                let mut c = c1.mul(c2);
                if loops > 0 {
                    c = c.mul(&self.alg.delta_pow(loops));
                }
                match acc.get_mut(&d) {
                    Some(x) => *x = x.add(&c),
                    None => {
                        acc.insert(d, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(AlgebraElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self, AlgebraError> {
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Commutes with every algebra generator.
    pub fn is_central(&self) -> Result<bool, AlgebraError> {
        for g in self.alg.generators() {
            if !self.commutator(&g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the left-right reflection, an isomorphism onto the
    /// algebra of the transposed wall.
    pub fn mirror_into(&self, target: &WalledBrauer<F>) -> Result<Self, AlgebraError> {
        if target.wall() != self.alg.wall().transpose() || target.delta() != self.alg.delta() {
            return Err(AlgebraError::Mismatch(
                format!("{target:?}"),
                format!("mirror of {:?}", self.alg),
            ));
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.mirror(), c.clone()))
            .collect();
        Ok(AlgebraElement {
            alg: target.clone(),
            terms,
        })
    }

    /// Coefficient vector in the given diagram order.
    pub fn coordinates(&self, basis: &[WalledDiagram]) -> Vec<F> {
        basis.iter().map(|d| self.coeff(d)).collect()
    }

    pub fn from_coordinates(alg: &WalledBrauer<F>, basis: &[WalledDiagram], coords: &[F]) -> Self {
        let terms = basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d.clone(), c.clone()))
            .collect();
        AlgebraElement {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!({"diagram": d.to_json(), "coeff": c.to_string()}))
            .collect();
        json!({
            "wall": {"r": self.alg.wall().r, "s": self.alg.wall().s},
            "mode": self.alg.mode().to_json(),
            "terms": terms,
        })
    }
}

fn accumulate<F: Field>(terms: &mut BTreeMap<WalledDiagram, F>, d: &WalledDiagram, c: &F) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(d) {
        Some(x) => {
            let y = x.add(c);
            if y.is_zero() {
                terms.remove(d);
            } else {
                *x = y;
            }
        }
        None => {
            terms.insert(d.clone(), c.clone());
        }
    }
}

/// `L_1, ..., L_{r+s}` for one algebra.
#[derive(Clone)]
pub struct JmFamily<F> {
    alg: WalledBrauer<F>,
    elements: Vec<AlgebraElement<F>>,
}

impl<F: Field> fmt::Debug for JmFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl<F: Field> JmFamily<F> {
    /// Wraps arbitrary elements; used to test perturbed families.
    pub fn from_elements(alg: &WalledBrauer<F>, elements: Vec<AlgebraElement<F>>) -> Self {
        assert_eq!(elements.len(), alg.wall().n(), "one element per column");
        JmFamily {
            alg: alg.clone(),
            elements,
        }
    }

    pub fn algebra(&self) -> &WalledBrauer<F> {
        &self.alg
    }

    /// `L_k`, 1-based.
    pub fn get(&self, k: usize) -> &AlgebraElement<F> {
        &self.elements[k - 1]
    }

    pub fn elements(&self) -> &[AlgebraElement<F>] {
        &self.elements
    }

    /// Replaces `L_k`, 1-based.
    pub fn with_replaced(&self, k: usize, element: AlgebraElement<F>) -> Self {
        let mut elements = self.elements.clone();
        elements[k - 1] = element;
        JmFamily {
            alg: self.alg.clone(),
            elements,
        }
    }
}

/// `p_k(L) = sum_{i<=r} L_i^k + (-1)^{k+1} sum_{i>r} L_i^k`; for `k = 0`
/// this is `(r - s) 1`.
pub fn power_sum_jm<F: Field>(
    family: &JmFamily<F>,
    k: u32,
) -> Result<AlgebraElement<F>, AlgebraError> {
    let alg = &family.alg;
    let Wall { r, s } = alg.wall();
    if k == 0 {
        return Ok(alg.scalar(F::from_int(r as i64 - s as i64)));
    }
    let right_sign = if k % 2 == 1 { F::one() } else { F::one().neg() };
    let mut acc = alg.zero();
    for (i, l) in family.elements.iter().enumerate() {
        let term = l.pow(k)?;
        acc = if i < r {
            acc.add(&term)?
        } else {
            acc.add(&term.scale(&right_sign))?
        };
    }
    Ok(acc)
}

/// `e_k(L)` from `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i`, `e_0 = 1`.
pub fn elementary_supersym_jm<F: Field>(
    family: &JmFamily<F>,
    k: u32,
) -> Result<AlgebraElement<F>, AlgebraError> {
    let p: Vec<AlgebraElement<F>> = (1..=k)
        .map(|i| power_sum_jm(family, i))
        .collect::<Result<_, _>>()?;
    let mut e = vec![family.alg.one()];
    for m in 1..=k as usize {
        let mut acc = family.alg.zero();
        for i in 1..=m {
            let term = e[m - i].mul(&p[i - 1])?;
            acc = if i % 2 == 1 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        e.push(acc.scale(&F::one().div(&F::from_int(m as i64))?));
    }
    Ok(e.pop().expect("e_0 present"))
}

/// Checks `prod_{c in scalars} (z - c) = 0`.
pub fn annihilator_check<F: Field>(
    z: &AlgebraElement<F>,
    scalars: &[F],
) -> Result<bool, AlgebraError> {
    if !z.is_central()? {
        return Err(AlgebraError::NotCentral);
    }
    let mut acc = z.alg.one();
    for c in scalars {
        acc = acc.mul(&z.add_scalar(&c.neg()))?;
        if acc.is_zero() {
            return Ok(true);
        }
    }
    Ok(acc.is_zero())
}

/// One checked instance of a named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub indices: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Number of instances checked per relation name, in first-seen order.
    pub fn counts(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for c in &self.checks {
            match out.iter_mut().find(|(n, _, _)| *n == c.relation) {
                Some(e) => {
                    e.1 += 1;
                    e.2 += usize::from(!c.passed);
                }
                None => out.push((c.relation, 1, usize::from(!c.passed))),
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let summary: Vec<Value> = self
            .counts()
            .into_iter()
            .map(|(name, n, failed)| json!({"relation": name, "instances": n, "failed": failed}))
            .collect();
        let failures: Vec<Value> = self
            .failures()
            .into_iter()
            .map(|c| json!({"relation": c.relation, "indices": c.indices}))
            .collect();
        json!({"passed": self.all_passed(), "relations": summary, "failures": failures})
    }
}

type Instance<F> = (
    &'static str,
    Vec<usize>,
    AlgebraElement<F>,
    AlgebraElement<F>,
);

/// Every index instance of the diagram and Jucys-Murphy identities on
/// `family.algebra()`, comparing both sides exactly.
pub fn verify_relation_suite<F: Field>(
    family: &JmFamily<F>,
) -> Result<RelationReport, AlgebraError> {
    let alg = family.algebra();
    let Wall { r, s } = alg.wall();
    let n = r + s;
    let left: Vec<usize> = (1..=r).collect();
    let right: Vec<usize> = (r + 1..=n).collect();
    let t = |a, b| alg.transposition(a, b);
    let e = |j, k| alg.e(j, k);
    let l = |k: usize| family.get(k).clone();
    let mul = |a: &AlgebraElement<F>, b: &AlgebraElement<F>| a.mul(b).expect("same algebra");
    let add = |a: &AlgebraElement<F>, b: &AlgebraElement<F>| a.add(b).expect("same algebra");
    let one = alg.one();
    let zero = alg.zero();
    let mut inst: Vec<Instance<F>> = Vec::new();

    let same_side_pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| (a <= r) == (b <= r))
        .collect();

    for &i in &left {
        for &j in &right {
            let eij = e(i, j);
            for &(a, b) in &same_side_pairs {
                if [a, b].iter().any(|x| *x == i || *x == j) {
                    continue;
                }
                let tab = t(a, b);
                inst.push((
                    "transposition-commutes-with-disjoint-arc",
                    vec![a, b, i, j],
                    mul(&tab, &eij),
                    mul(&eij, &tab),
                ));
            }
            for &i2 in left.iter().filter(|&&x| x != i) {
                let tii = t(i.min(i2), i.max(i2));
                inst.push((
                    "transposition-moves-arc-left-end",
                    vec![i, i2, j],
                    mul(&tii, &eij),
                    mul(&e(i2, j), &tii),
                ));
                inst.push((
                    "arcs-sharing-right-end-absorb",
                    vec![i, i2, j],
                    mul(&eij, &e(i2, j)),
                    mul(&eij, &tii),
                ));
            }
            for &j2 in right.iter().filter(|&&x| x != j) {
                let tjj = t(j.min(j2), j.max(j2));
                inst.push((
                    "transposition-moves-arc-right-end",
                    vec![i, j, j2],
                    mul(&tjj, &eij),
                    mul(&e(i, j2), &tjj),
                ));
                inst.push((
                    "arcs-sharing-left-end-absorb",
                    vec![i, j, j2],
                    mul(&eij, &e(i, j2)),
                    mul(&eij, &tjj),
                ));
            }
            for &i2 in left.iter().filter(|&&x| x != i) {
                for &j2 in right.iter().filter(|&&x| x != j) {
                    let e2 = e(i2, j2);
                    inst.push((
                        "disjoint-arcs-commute",
                        vec![i, j, i2, j2],
                        mul(&eij, &e2),
                        mul(&e2, &eij),
                    ));
                    let prod = mul(&eij, &e2);
                    let tii = t(i.min(i2), i.max(i2));
                    let tjj = t(j.min(j2), j.max(j2));
                    inst.push((
                        "arc-pair-swap-symmetry",
                        vec![i, j, i2, j2],
                        mul(&prod, &tii),
                        mul(&prod, &tjj),
                    ));
                }
            }
        }
    }

    for i in (1..n).filter(|&i| i != r) {
        let si = t(i, i + 1);
        inst.push((
            "jm-step-left",
            vec![i],
            mul(&si, &l(i + 1)).sub(&mul(&l(i), &si))?,
            one.clone(),
        ));
        inst.push((
            "jm-step-right",
            vec![i],
            mul(&l(i + 1), &si).sub(&mul(&si, &l(i)))?,
            one.clone(),
        ));
        for k in (1..=n).filter(|&k| k != i && k != i + 1) {
            inst.push((
                "simple-transposition-commutes-with-jm",
                vec![i, k],
                mul(&si, &l(k)),
                mul(&l(k), &si),
            ));
        }
    }
    if r > 0 && s > 0 {
        let er = e(r, r + 1);
        let pair = add(&l(r), &l(r + 1));
        inst.push((
            "contraction-kills-wall-jm-pair-left",
            vec![r],
            mul(&er, &pair),
            zero.clone(),
        ));
        inst.push((
            "contraction-kills-wall-jm-pair-right",
            vec![r],
            mul(&pair, &er),
            zero.clone(),
        ));
        for k in (1..=n).filter(|&k| k != r && k != r + 1) {
            inst.push((
                "contraction-commutes-with-jm",
                vec![k],
                mul(&er, &l(k)),
                mul(&l(k), &er),
            ));
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            inst.push((
                "jm-elements-commute",
                vec![a, b],
                mul(&l(a), &l(b)),
                mul(&l(b), &l(a)),
            ));
        }
    }
    for tt in 1..=r.min(s) {
        let tau = alg.generator(GeneratorKind::Tau(tt))?;
        for a in 1..=tt {
            let pair = add(&l(r - a + 1), &l(r + a));
            inst.push((
                "nested-contraction-kills-jm-pairs",
                vec![tt, a],
                mul(&pair, &tau),
                zero.clone(),
            ));
        }
        for j in r + tt + 1..=n {
            let mut x = alg.zero();
            for i in r - tt + 1..=r {
                x = x.sub(&e(i, j))?;
            }
            for i in r + 1..=r + tt {
                x = x.add(&t(i, j))?;
            }
            inst.push((
                "nested-contraction-kills-mixed-sum",
                vec![tt, j],
                mul(&x, &tau),
                zero.clone(),
            ));
        }
    }

    let checks = inst
        .into_par_iter()
        .map(|(relation, indices, lhs, rhs)| RelationCheck {
            relation,
            indices,
            passed: lhs == rhs,
        })
        .collect();
    Ok(RelationReport { checks })
}
