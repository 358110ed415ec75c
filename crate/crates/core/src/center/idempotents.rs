use rayon::prelude::*;
use serde_json::{json, Value};

use super::{gz_jm_family, CenterError};
use crate::scalars::Field;
use crate::wbr_algebra::{AlgebraElement, JmFamily, WalledBrauer};
use crate::weights::{all_paths, is_semisimple, DeltaSpec, Path};

/// The path idempotents `I_T` together with the data they were built from.
#[derive(Clone)]
pub struct IdempotentSystem<F> {
    pub family: JmFamily<F>,
    pub paths: Vec<Path>,
    /// `c_T(i)` evaluated at the loop parameter, one vector per path.
    pub contents: Vec<Vec<F>>,
    pub elements: Vec<AlgebraElement<F>>,
}

/// `I_T = prod_i prod_{c in C(i), c != c_T(i)} (L_i - c) / (c_T(i) - c)`
/// where `C(i)` collects `c_T(i)` over all paths. Factors are applied with
/// `i` ascending and `c` in increasing order.
pub fn idempotents<F: Field>(alg: &WalledBrauer<F>) -> Result<IdempotentSystem<F>, CenterError> {
    let wall = alg.wall();
    let spec = DeltaSpec::from_mode(alg.mode());
    if !is_semisimple(wall, &spec) {
        return Err(CenterError::NotSemisimple {
            wall: wall.to_string(),
            delta: spec.to_string(),
        });
    }
    let family = gz_jm_family(alg)?;
    let paths: Vec<Path> = all_paths(wall)?.into_iter().flat_map(|(_, p)| p).collect();
    let contents: Vec<Vec<F>> = paths
        .iter()
        .map(|p| p.contents.iter().map(|c| c.eval(alg.delta())).collect())
        .collect();
    for i in 0..contents.len() {
        for j in i + 1..contents.len() {
            if contents[i] == contents[j] {
                return Err(CenterError::ContentCollision {
                    first: paths[i].to_string(),
                    second: paths[j].to_string(),
                });
            }
        }
    }
    let n = wall.n();
    let classes: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut c: Vec<F> = contents.iter().map(|v| v[i].clone()).collect();
            c.sort();
            c.dedup();
            c
        })
        .collect();
    let elements = contents
        .par_iter()
        .map(|ct| -> Result<AlgebraElement<F>, CenterError> {
            let mut acc = alg.one();
            for (i, class) in classes.iter().enumerate() {
                for c in class.iter().filter(|c| **c != ct[i]) {
                    let factor = family.get(i + 1).add_scalar(&c.neg());
                    let scale = ct[i].sub(c).inv()?;
                    acc = acc.mul(&factor)?.scale(&scale);
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdempotentSystem {
        family,
        paths,
        contents,
        elements,
    })
}

/// `L_i I_T = c_T(i) I_T` for one path and one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenCheck {
    pub path: usize,
    pub level: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub paths: usize,
    pub idempotent: bool,
    pub pairwise_orthogonal: bool,
    pub sum_is_one: bool,
    pub eigen_relations: Vec<EigenCheck>,
}

impl IdempotentReport {
    pub fn all_passed(&self) -> bool {
        self.idempotent
            && self.pairwise_orthogonal
            && self.sum_is_one
            && self.eigen_relations.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let failed: Vec<Value> = self
            .eigen_relations
            .iter()
            .filter(|c| !c.passed)
            .map(|c| json!({"path": c.path, "level": c.level}))
            .collect();
        json!({
            "paths": self.paths,
            "idempotent": self.idempotent,
            "pairwise_orthogonal": self.pairwise_orthogonal,
            "sum_is_one": self.sum_is_one,
            "eigen_relations": {"checked": self.eigen_relations.len(), "failed": failed},
            "passed": self.all_passed(),
        })
    }
}

/// Checks `I_T^2 = I_T`, `I_T I_T' = 0` for `T != T'`, `sum_T I_T = 1` and
/// `L_i I_T = c_T(i) I_T`.
pub fn verify_idempotents<F: Field>(
    system: &IdempotentSystem<F>,
) -> Result<IdempotentReport, CenterError> {
    let alg = system.family.algebra();
    let es = &system.elements;
    let products: Vec<(bool, bool)> = (0..es.len())
        .into_par_iter()
        .map(|i| -> Result<(bool, bool), CenterError> {
            let mut square = true;
            let mut orthogonal = true;
            for j in 0..es.len() {
                let p = es[i].mul(&es[j])?;
                if i == j {
                    square &= p == es[i];
                } else {
                    orthogonal &= p.is_zero();
                }
            }
            Ok((square, orthogonal))
        })
        .collect::<Result<_, _>>()?;
    let mut sum = alg.zero();
    for e in es {
        sum = sum.add(e)?;
    }
    let mut eigen_relations = Vec::new();
    for (t, (e, ct)) in es.iter().zip(&system.contents).enumerate() {
        for (i, c) in ct.iter().enumerate() {
            let lhs = system.family.get(i + 1).mul(e)?;
            eigen_relations.push(EigenCheck {
                path: t,
                level: i + 1,
                passed: lhs == e.scale(c),
            });
        }
    }
    Ok(IdempotentReport {
        paths: es.len(),
        idempotent: products.iter().all(|p| p.0),
        pairwise_orthogonal: products.iter().all(|p| p.1),
        sum_is_one: sum == alg.one(),
        eigen_relations,
    })
}
