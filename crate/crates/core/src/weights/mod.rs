//! Bipartitions indexing cell modules, their contents, blocks and the
//! branching graph.

mod branching;
mod content;
mod partition;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::diagrams::Wall;
use crate::scalars::Field;

pub use branching::{all_paths, branching_graph, edge_content, paths_to, BranchingGraph, Path};
pub use content::{content_product, ContentFunction, ContentKey, ContentValue, DeltaSpec};
pub use partition::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("bipartition {left}|{right} has no weight on the wall {wall}")]
    WrongSize {
        left: Partition,
        right: Partition,
        wall: Wall,
    },
    #[error("edge {from} -> {to} at level {level} is not a branching edge")]
    NotAnEdge {
        from: String,
        to: String,
        level: usize,
    },
    #[error("edge {from} -> {to} at level {level} matches both right-hand branching rules")]
    AmbiguousEdge {
        from: String,
        to: String,
        level: usize,
    },
    #[error("malformed weight JSON: {0}")]
    Json(String),
}

/// A bipartition `(left, right)` with `|left| = r - t` and `|right| = s - t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    t: usize,
    left: Partition,
    right: Partition,
    wall: Wall,
}

impl Weight {
    pub fn new(wall: Wall, left: Partition, right: Partition) -> Result<Self, WeightError> {
        let (l, r) = (left.size(), right.size());
        if l > wall.r || wall.r - l != wall.s.wrapping_sub(r) || r > wall.s {
            return Err(WeightError::WrongSize { left, right, wall });
        }
        Ok(Weight {
            t: wall.r - l,
            left,
            right,
            wall,
        })
    }

    pub fn from_parts(
        wall: Wall,
        left: Vec<usize>,
        right: Vec<usize>,
    ) -> Result<Self, WeightError> {
        Weight::new(wall, Partition::new(left)?, Partition::new(right)?)
    }

    pub fn left(&self) -> &Partition {
        &self.left
    }

    pub fn right(&self) -> &Partition {
        &self.right
    }

    pub fn wall(&self) -> Wall {
        self.wall
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// The same bipartition with sides swapped, on the transposed wall.
    pub fn transpose(&self) -> Weight {
        Weight {
            t: self.t,
            left: self.right.clone(),
            right: self.left.clone(),
            wall: self.wall.transpose(),
        }
    }

    /// `c(lambda, 1..r+s)`: left contents, then `2t` zeros, then right
    /// contents shifted by the loop parameter.
    pub fn contents(&self) -> ContentVector {
        let mut values: Vec<ContentValue> = self
            .left
            .contents()
            .into_iter()
            .map(ContentValue::plain)
            .collect();
        values.extend(std::iter::repeat_n(ContentValue::plain(0), 2 * self.t));
        values.extend(self.right.contents().into_iter().map(ContentValue::shifted));
        ContentVector { values }
    }

    /// `prod (1 + cont_L z) / prod (1 - (cont_R + delta) z)`, reduced.
    pub fn content_function(&self, delta: &DeltaSpec) -> ContentFunction {
        let num = self
            .left
            .contents()
            .into_iter()
            .map(|c| ContentValue::plain(c).specialize(delta))
            .collect();
        let den = self
            .right
            .contents()
            .into_iter()
            .map(|c| ContentValue::shifted(c).specialize(delta))
            .collect();
        ContentFunction::new(num, den)
    }

    pub fn to_json(&self) -> Value {
        json!({"left": self.left.parts(), "right": self.right.parts(), "t": self.t})
    }

    pub fn from_json(wall: Wall, value: &Value) -> Result<Self, WeightError> {
        let parts = |key: &str| -> Result<Vec<usize>, WeightError> {
            let arr = value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| WeightError::Json(format!("missing {key}")))?;
            arr.iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| WeightError::Json(format!("bad entry in {key}")))
                })
                .collect()
        };
        let w = Weight::from_parts(wall, parts("left")?, parts("right")?)?;
        match value.get("t").and_then(Value::as_u64) {
            Some(t) if t as usize != w.t => Err(WeightError::Json(format!(
                "t = {t} disagrees with the sizes"
            ))),
            _ => Ok(w),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// `c(lambda, i)` for `i = 1..r+s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentVector {
    pub values: Vec<ContentValue>,
}

impl ContentVector {
    pub fn eval<F: Field>(&self, delta: &F) -> Vec<F> {
        self.values.iter().map(|c| c.eval(delta)).collect()
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All weights of the wall, ordered by `t`, then left, then right partition.
pub fn enumerate_weights(wall: Wall) -> Vec<Weight> {
    let mut out = Vec::new();
    for t in 0..=wall.r.min(wall.s) {
        for left in Partition::all(wall.r - t) {
            for right in Partition::all(wall.s - t) {
                out.push(Weight {
                    t,
                    left: left.clone(),
                    right,
                    wall,
                });
            }
        }
    }
    out
}

/// Weights labelling simple modules: drops the empty bipartition exactly
/// when `delta = 0` and `r = s > 0`.
pub fn dot_variant(wall: Wall, delta: &DeltaSpec) -> Vec<Weight> {
    let drop_empty = wall.r == wall.s && wall.r > 0 && delta.as_integer() == Some(0);
    enumerate_weights(wall)
        .into_iter()
        .filter(|w| !(drop_empty && w.is_empty()))
        .collect()
}

pub fn is_semisimple(wall: Wall, delta: &DeltaSpec) -> bool {
    let (r, s) = (wall.r, wall.s);
    if r == 0 || s == 0 {
        return true;
    }
    let Some(d) = delta.as_integer() else {
        return true;
    };
    if d.unsigned_abs() as usize + 2 > r + s {
        return true;
    }
    d == 0 && matches!((r, s), (1, 2) | (1, 3) | (2, 1) | (3, 1))
}

/// `k -> #{left boxes of content k} - #{right boxes of content -delta-k}`,
/// zero entries dropped.
fn count_profile(w: &Weight, d: i64) -> BTreeMap<i64, i64> {
    let mut profile: BTreeMap<i64, i64> = BTreeMap::new();
    for c in w.left.contents() {
        *profile.entry(c).or_default() += 1;
    }
    for c in w.right.contents() {
        *profile.entry(-d - c).or_default() -= 1;
    }
    profile.retain(|_, v| *v != 0);
    profile
}

/// Decided through the signed content-count profile; for non-integer or
/// symbolic delta only equal weights are balanced.
pub fn is_delta_balanced(lambda: &Weight, mu: &Weight, delta: &DeltaSpec) -> bool {
    match delta.as_integer() {
        Some(d) => count_profile(lambda, d) == count_profile(mu, d),
        None => lambda.left == mu.left && lambda.right == mu.right,
    }
}

/// Classes of the simple-module weights under delta-balancedness, each
/// class in enumeration order, classes ordered by first member.
pub fn blocks(wall: Wall, delta: &DeltaSpec) -> Vec<Vec<Weight>> {
    let weights = dot_variant(wall, delta);
    let mut parent: Vec<usize> = (0..weights.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            if is_delta_balanced(&weights[i], &weights[j], delta) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Weight>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        let root = find(&mut parent, i);
        classes.entry(root).or_default().push(w.clone());
    }
    classes.into_values().collect()
}

pub fn blocks_to_json(blocks: &[Vec<Weight>]) -> Value {
    Value::Array(
        blocks
            .iter()
            .map(|b| Value::Array(b.iter().map(Weight::to_json).collect()))
            .collect(),
    )
}
