use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
}

/// Integer partition with zero parts stripped; the empty partition is `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n`, largest first part first: `(3), (2,1), (1,1,1)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Boxes `(row, col)`, 0-based, in row-reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
            .collect()
    }

    /// `col - row` of each box, in row-reading order, so entry `i - 1` is
    /// the content of the box holding `i` in the row-reading tableau.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes()
            .into_iter()
            .map(|(i, j)| j as i64 - i as i64)
            .collect()
    }

    /// Partitions obtained by adding one box, with that box's content.
    pub fn add_box(&self) -> Vec<(Partition, i64)> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let len = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
            if len < above {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push((Partition(parts), len as i64 - i as i64));
            }
        }
        out
    }

    /// Partitions obtained by removing one box, with that box's content.
    pub fn remove_box(&self) -> Vec<(Partition, i64)> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let len = self.0[i];
            let below = self.0.get(i + 1).copied().unwrap_or(0);
            if len > below {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push((Partition(parts), (len - 1) as i64 - i as i64));
            }
        }
        out
    }

    /// Rebuilds the partition whose box contents form the given multiset.
    pub fn from_contents(contents: &[i64]) -> Option<Partition> {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &c in contents {
            *counts.entry(c).or_default() += 1;
        }
        let mut cells = BTreeSet::new();
        for (&k, &m) in &counts {
            let start = if k < 0 { (-k) as usize } else { 0 };
            for i in start..start + m {
                cells.insert((i, (i as i64 + k) as usize));
            }
        }
        let rows = cells.iter().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for &(i, _) in &cells {
            parts[i] += 1;
        }
        let p = Partition::new(parts).ok()?;
        let mut got = p.contents();
        got.sort_unstable();
        let mut want = contents.to_vec();
        want.sort_unstable();
        (got == want).then_some(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
