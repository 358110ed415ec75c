use std::fmt;

use serde_json::{json, Value};

use super::content::ContentValue;
use super::partition::Partition;
use super::{enumerate_weights, Weight, WeightError};
use crate::diagrams::Wall;

type Bipartition = (Partition, Partition);

fn show(v: &Bipartition) -> String {
    format!("({},{})", v.0, v.1)
}

/// A path `() = lambda_0 -> lambda_1 -> ... -> lambda_{r+s}` in the
/// branching graph together with its contents `c_T(1..r+s)`.
///
/// For `r < s` paths are taken in the tower of the transposed wall and the
/// vertices are reported with sides swapped back; the contents are then the
/// eigenvalues of the mirrored Jucys-Murphy elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<Bipartition>,
    pub contents: Vec<ContentValue>,
}

impl Path {
    pub fn end(&self) -> &Bipartition {
        self.vertices
            .last()
            .expect("paths start at the empty bipartition")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|v| json!({"left": v.0.parts(), "right": v.1.parts()})).collect::<Vec<_>>(),
            "contents": self.contents.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(show).collect();
        let cs: Vec<String> = self.contents.iter().map(ToString::to_string).collect();
        write!(f, "{} [{}]", vs.join(" -> "), cs.join(","))
    }
}

/// Content of the edge `prev -> next` entering level `level` (1-based) of
/// the tower for a wall with `r` left strands, assuming `r >= s`.
///
/// Levels up to `r` add a left box. Later levels either remove a left box
/// (content negated) or add a right box (content shifted by delta); an
/// edge matching both patterns is reported as ambiguous.
pub fn edge_content(
    r: usize,
    level: usize,
    prev: &Bipartition,
    next: &Bipartition,
) -> Result<ContentValue, WeightError> {
    let err = || WeightError::NotAnEdge {
        from: show(prev),
        to: show(next),
        level,
    };
    let added = |a: &Partition, b: &Partition| {
        a.add_box()
            .into_iter()
            .find(|(p, _)| p == b)
            .map(|(_, c)| c)
    };
    let removed = |a: &Partition, b: &Partition| {
        a.remove_box()
            .into_iter()
            .find(|(p, _)| p == b)
            .map(|(_, c)| c)
    };
    if level <= r {
        return match (added(&prev.0, &next.0), prev.1 == next.1) {
            (Some(c), true) => Ok(ContentValue::plain(c)),
            _ => Err(err()),
        };
    }
    let remove_left = removed(&prev.0, &next.0).filter(|_| prev.1 == next.1);
    let add_right = added(&prev.1, &next.1).filter(|_| prev.0 == next.0);
    match (remove_left, add_right) {
        (Some(c), None) => Ok(ContentValue::plain(-c)),
        (None, Some(c)) => Ok(ContentValue::shifted(c)),
        (Some(_), Some(_)) => Err(WeightError::AmbiguousEdge {
            from: show(prev),
            to: show(next),
            level,
        }),
        (None, None) => Err(err()),
    }
}

fn successors(r: usize, level: usize, v: &Bipartition) -> Vec<Bipartition> {
    if level <= r {
        v.0.add_box()
            .into_iter()
            .map(|(p, _)| (p, v.1.clone()))
            .collect()
    } else {
        let mut out: Vec<Bipartition> =
            v.0.remove_box()
                .into_iter()
                .map(|(p, _)| (p, v.1.clone()))
                .collect();
        out.extend(v.1.add_box().into_iter().map(|(p, _)| (v.0.clone(), p)));
        out
    }
}

/// Levels `0..=r+s` of the branching graph and the edges between
/// consecutive levels, as index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingGraph {
    pub wall: Wall,
    pub levels: Vec<Vec<Bipartition>>,
    pub edges: Vec<Vec<(usize, usize)>>,
}

/// The graph of the tower for `wall`, built for `r >= s`; for `r < s` the
/// graph of the transposed wall with sides swapped back.
pub fn branching_graph(wall: Wall) -> BranchingGraph {
    let swap = wall.r < wall.s;
    let internal = if swap { wall.transpose() } else { wall };
    let mut levels: Vec<Vec<Bipartition>> = vec![vec![(Partition::empty(), Partition::empty())]];
    let mut edges = Vec::new();
    for level in 1..=internal.n() {
        let mut next: Vec<Bipartition> = Vec::new();
        let mut level_edges = Vec::new();
        for (i, v) in levels[level - 1].iter().enumerate() {
            for u in successors(internal.r, level, v) {
                let j = match next.iter().position(|x| *x == u) {
                    Some(j) => j,
                    None => {
                        next.push(u);
                        next.len() - 1
                    }
                };
                level_edges.push((i, j));
            }
        }
        levels.push(next);
        edges.push(level_edges);
    }
    if swap {
        for level in &mut levels {
            for v in level.iter_mut() {
                std::mem::swap(&mut v.0, &mut v.1);
            }
        }
    }
    BranchingGraph {
        wall,
        levels,
        edges,
    }
}

fn extend(
    r: usize,
    n: usize,
    target: &Bipartition,
    prefix: &mut Vec<Bipartition>,
    out: &mut Vec<Vec<Bipartition>>,
) {
    let level = prefix.len();
    if level == n + 1 {
        if prefix.last() == Some(target) {
            out.push(prefix.clone());
        }
        return;
    }
    let last = prefix.last().expect("nonempty prefix").clone();
    for next in successors(r, level, &last) {
        // Only left removals and right additions happen after level r, so
        // the target must still be reachable.
        if level > r
            && (next
                .1
                .parts()
                .iter()
                .zip(target.1.parts())
                .any(|(a, b)| a > b)
                || next.1.parts().len() > target.1.parts().len())
        {
            continue;
        }
        prefix.push(next);
        extend(r, n, target, prefix, out);
        prefix.pop();
    }
}

/// All paths from the empty bipartition to `weight`, in lexicographic order
/// of their vertex sequences.
pub fn paths_to(weight: &Weight) -> Result<Vec<Path>, WeightError> {
    let wall = weight.wall();
    let swap = wall.r < wall.s;
    let (internal, target) = if swap {
        let t = weight.transpose();
        (t.wall(), (t.left().clone(), t.right().clone()))
    } else {
        (wall, (weight.left().clone(), weight.right().clone()))
    };
    let mut raw = Vec::new();
    let mut prefix = vec![(Partition::empty(), Partition::empty())];
    extend(internal.r, internal.n(), &target, &mut prefix, &mut raw);
    let mut out = Vec::with_capacity(raw.len());
    for mut vertices in raw {
        let contents = vertices
            .windows(2)
            .enumerate()
            .map(|(i, pair)| edge_content(internal.r, i + 1, &pair[0], &pair[1]))
            .collect::<Result<Vec<_>, _>>()?;
        if swap {
            for v in &mut vertices {
                std::mem::swap(&mut v.0, &mut v.1);
            }
        }
        out.push(Path { vertices, contents });
    }
    out.sort();
    Ok(out)
}

/// Paths to every weight of the wall, grouped in weight enumeration order.
pub fn all_paths(wall: Wall) -> Result<Vec<(Weight, Vec<Path>)>, WeightError> {
    enumerate_weights(wall)
        .into_iter()
        .map(|w| paths_to(&w).map(|p| (w, p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(l: &[usize], r: &[usize]) -> Bipartition {
        (
            Partition::new(l.to_vec()).unwrap(),
            Partition::new(r.to_vec()).unwrap(),
        )
    }

    #[test]
    fn single_box_trace() {
        let w = Weight::from_parts(Wall::new(1, 1), vec![], vec![]).unwrap();
        let paths = paths_to(&w).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(
            paths[0].contents,
            vec![ContentValue::plain(0), ContentValue::plain(0)]
        );
    }

    #[test]
    fn stepwise_contents() {
        let w = Weight::from_parts(Wall::new(2, 1), vec![2], vec![1]).unwrap();
        let paths = paths_to(&w).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(
            paths[0].vertices,
            vec![bp(&[], &[]), bp(&[1], &[]), bp(&[2], &[]), bp(&[2], &[1])]
        );
        assert_eq!(
            paths[0].contents,
            vec![
                ContentValue::plain(0),
                ContentValue::plain(1),
                ContentValue::shifted(0)
            ]
        );
        assert_eq!(
            paths[0].to_string(),
            "((),()) -> ((1),()) -> ((2),()) -> ((2),(1)) [0,1,d]"
        );
    }

    #[test]
    fn edges_are_classified() {
        assert!(edge_content(1, 2, &bp(&[1], &[]), &bp(&[1], &[1])).is_ok());
        assert!(matches!(
            edge_content(1, 2, &bp(&[1], &[]), &bp(&[2], &[])),
            Err(WeightError::NotAnEdge { .. })
        ));
        assert_eq!(
            edge_content(1, 2, &bp(&[1], &[]), &bp(&[], &[])).unwrap(),
            ContentValue::plain(0)
        );
        assert_eq!(
            edge_content(2, 3, &bp(&[1, 1], &[]), &bp(&[1], &[])).unwrap(),
            ContentValue::plain(1)
        );
    }

    #[test]
    fn squared_path_counts_give_dimension() {
        for n in 0..=6 {
            for r in 0..=n {
                let wall = Wall::new(r, n - r);
                let total: u128 = all_paths(wall)
                    .unwrap()
                    .iter()
                    .map(|(_, p)| (p.len() as u128).pow(2))
                    .sum();
                assert_eq!(total, (1..=n as u128).product::<u128>(), "{wall}");
            }
        }
        let total: usize = all_paths(Wall::new(2, 2))
            .unwrap()
            .iter()
            .map(|(_, p)| p.len().pow(2))
            .sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn graph_levels_match_paths() {
        for wall in [Wall::new(2, 2), Wall::new(1, 3), Wall::new(3, 1)] {
            let g = branching_graph(wall);
            assert_eq!(g.levels.len(), wall.n() + 1);
            let mut last: Vec<Bipartition> = g.levels[wall.n()].clone();
            last.sort();
            let mut want: Vec<Bipartition> = enumerate_weights(wall)
                .into_iter()
                .map(|w| (w.left().clone(), w.right().clone()))
                .collect();
            want.sort();
            assert_eq!(last, want);
            // Path counts via edge dynamic programming agree with enumeration.
            let mut counts = vec![1usize];
            for (level, edges) in g.edges.iter().enumerate() {
                let mut next = vec![0usize; g.levels[level + 1].len()];
                for &(i, j) in edges {
                    next[j] += counts[i];
                }
                counts = next;
            }
            for (v, c) in g.levels[wall.n()].iter().zip(&counts) {
                let w = Weight::new(wall, v.0.clone(), v.1.clone()).unwrap();
                assert_eq!(paths_to(&w).unwrap().len(), *c);
            }
        }
    }

    #[test]
    fn transposed_walls_mirror_paths() {
        let w = Weight::from_parts(Wall::new(1, 2), vec![1], vec![2]).unwrap();
        let paths = paths_to(&w).unwrap();
        let mirrored = paths_to(&w.transpose()).unwrap();
        assert_eq!(paths.len(), mirrored.len());
        let mut a: Vec<_> = paths.iter().map(|p| p.contents.clone()).collect();
        let mut b: Vec<_> = mirrored.iter().map(|p| p.contents.clone()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        for p in &paths {
            assert_eq!(p.end(), &(w.left().clone(), w.right().clone()));
        }
    }
}
