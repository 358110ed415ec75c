//! Walled Brauer diagrams and their composition.
//!
//! A diagram on `n = r + s` columns has `2n` vertices. Vertices `0..n` form
//! the top row and `n..2n` the bottom row, both numbered left to right; the
//! wall sits between columns `r - 1` and `r`. Vertical strands stay on one
//! side of the wall and horizontal strands cross it.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

/// Largest `r + s` for which the full diagram basis may be enumerated.
pub const DEFAULT_SIZE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("index {index} out of range for r={r}, s={s}")]
    IndexOutOfRange { index: usize, r: usize, s: usize },
    #[error("{0} violates the wall condition")]
    CrossesWall(String),
    #[error("pairing is not a fixed-point-free involution: {0}")]
    InvalidPairing(String),
    #[error("diagrams on different walls: {0} and {1}")]
    WallMismatch(Wall, Wall),
    #[error("r+s={n} exceeds the size cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
}

/// Shape `(r, s)`: `r` columns left of the wall, `s` right of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    pub r: usize,
    pub s: usize,
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl Wall {
    pub fn new(r: usize, s: usize) -> Self {
        Wall { r, s }
    }

    pub fn n(&self) -> usize {
        self.r + self.s
    }

    /// Swaps the two sides of the wall.
    pub fn transpose(&self) -> Wall {
        Wall {
            r: self.s,
            s: self.r,
        }
    }

    /// Number of diagrams, `(r+s)!`.
    pub fn dimension(&self) -> u128 {
        (1..=self.n() as u128).product()
    }

    fn is_left(&self, vertex: usize) -> bool {
        vertex % self.n() < self.r
    }

    fn is_top(&self, vertex: usize) -> bool {
        vertex < self.n()
    }

    /// Whether a strand between two distinct vertices is allowed.
    pub fn admissible(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let same_row = self.is_top(a) == self.is_top(b);
        let same_side = self.is_left(a) == self.is_left(b);
        same_row != same_side
    }

    /// Fails with [`DiagramError::SizeLimitExceeded`] if `r+s > cap`.
    pub fn check_cap(&self, cap: usize) -> Result<(), DiagramError> {
        if self.n() > cap {
            Err(DiagramError::SizeLimitExceeded { n: self.n(), cap })
        } else {
            Ok(())
        }
    }
}

/// Named diagrams, with 1-based column indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Simple transposition of columns `i, i+1`, with `i != r`.
    S(usize),
    /// Transposition of two columns on the same side of the wall.
    Transposition(usize, usize),
    /// Contraction joining columns `j <= r < k` on the top and on the bottom.
    E(usize, usize),
    /// `t` nested contractions `r-i+1` with `r+i` for `i = 1..t`.
    Tau(usize),
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::S(i) => write!(f, "s_{i}"),
            GeneratorKind::Transposition(a, b) => write!(f, "({a},{b})"),
            GeneratorKind::E(j, k) => write!(f, "e_{{{j},{k}}}"),
            GeneratorKind::Tau(t) => write!(f, "tau_{t}"),
        }
    }
}

/// One walled Brauer diagram, stored as its pairing on `2n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    wall: Wall,
    pairing: Vec<u8>,
}

impl WalledDiagram {
    /// Validates a 0-based pairing.
    pub fn from_pairing(wall: Wall, pairing: Vec<usize>) -> Result<Self, DiagramError> {
        let m = 2 * wall.n();
        if pairing.len() != m {
            return Err(DiagramError::InvalidPairing(format!(
                "expected {m} entries, got {}",
                pairing.len()
            )));
        }
        for (a, &b) in pairing.iter().enumerate() {
            if b >= m || pairing[b] != a || a == b {
                return Err(DiagramError::InvalidPairing(format!(
                    "vertex {a} maps to {b}"
                )));
            }
            if !wall.admissible(a, b) {
                return Err(DiagramError::CrossesWall(format!("strand {a}-{b}")));
            }
        }
        Ok(WalledDiagram {
            wall,
            pairing: pairing.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(wall: Wall) -> Self {
        let n = wall.n();
        let pairing = (0..2 * n)
            .map(|v| if v < n { v + n } else { v - n })
            .collect();
        Self::from_pairing(wall, pairing).expect("identity is admissible")
    }

    /// Diagram whose top column `i` joins bottom column `perm[i]`.
    pub fn from_permutation(wall: Wall, perm: &[usize]) -> Result<Self, DiagramError> {
        let n = wall.n();
        let mut pairing = vec![0; 2 * n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n {
                return Err(DiagramError::IndexOutOfRange {
                    index: p,
                    r: wall.r,
                    s: wall.s,
                });
            }
            pairing[i] = n + p;
            pairing[n + p] = i;
        }
        Self::from_pairing(wall, pairing)
    }

    pub fn generator(wall: Wall, kind: GeneratorKind) -> Result<Self, DiagramError> {
        let (r, s, n) = (wall.r, wall.s, wall.n());
        let undefined = || DiagramError::CrossesWall(format!("generator {kind} for r={r}, s={s}"));
        let col = |i: usize| {
            if i == 0 || i > n {
                Err(DiagramError::IndexOutOfRange { index: i, r, s })
            } else {
                Ok(i - 1)
            }
        };
        let mut pairing: Vec<usize> = (0..2 * n).map(|v| (v + n) % (2 * n)).collect();
        let mut arc = |a: usize, b: usize| {
            pairing[a] = b;
            pairing[b] = a;
            pairing[n + a] = n + b;
            pairing[n + b] = n + a;
        };
        match kind {
            GeneratorKind::S(i) => {
                let a = col(i)?;
                col(i + 1)?;
                if i == r {
                    return Err(undefined());
                }
                return Self::generator(wall, GeneratorKind::Transposition(a + 1, a + 2));
            }
            GeneratorKind::Transposition(a, b) => {
                let (a, b) = (col(a)?, col(b)?);
                if a == b || (a < r) != (b < r) {
                    return Err(undefined());
                }
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(a, b);
                return Self::from_permutation(wall, &perm);
            }
            GeneratorKind::E(j, k) => {
                let (j, k) = (col(j)?, col(k)?);
                if !(j < r && k >= r) {
                    return Err(undefined());
                }
                arc(j, k);
            }
            GeneratorKind::Tau(t) => {
                if t > r.min(s) {
                    return Err(DiagramError::IndexOutOfRange { index: t, r, s });
                }
                for i in 1..=t {
                    arc(r - i, r + i - 1);
                }
            }
        }
        Self::from_pairing(wall, pairing)
    }

    pub fn wall(&self) -> Wall {
        self.wall
    }

    /// Partner of a 0-based vertex.
    pub fn partner(&self, vertex: usize) -> usize {
        self.pairing[vertex] as usize
    }

    pub fn pairing(&self) -> Vec<usize> {
        self.pairing.iter().map(|&x| x as usize).collect()
    }

    /// Number of horizontal strands in the top row.
    pub fn top_arcs(&self) -> usize {
        let n = self.wall.n();
        (0..n).filter(|&v| (self.pairing[v] as usize) < n).count() / 2
    }

    /// Number of horizontal strands in the bottom row; always equals
    /// [`Self::top_arcs`] for a walled diagram.
    pub fn bottom_arcs(&self) -> usize {
        let n = self.wall.n();
        (n..2 * n)
            .filter(|&v| (self.pairing[v] as usize) >= n)
            .count()
            / 2
    }

    /// The underlying permutation when there are no horizontal strands.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.wall.n();
        (0..n)
            .map(|v| {
                let p = self.pairing[v] as usize;
                (p >= n).then(|| p - n)
            })
            .collect()
    }

    /// Reflection left to right; lands on the transposed wall.
    pub fn mirror(&self) -> Self {
        let n = self.wall.n();
        let m = |v: usize| {
            if v < n {
                n - 1 - v
            } else {
                n + (2 * n - 1 - v)
            }
        };
        let mut pairing = vec![0; 2 * n];
        for v in 0..2 * n {
            pairing[m(v)] = m(self.pairing[v] as usize);
        }
        Self::from_pairing(self.wall.transpose(), pairing).expect("mirror is admissible")
    }

    /// Reflection top to bottom; an anti-automorphism of the algebra.
    pub fn flip(&self) -> Self {
        let n = self.wall.n();
        let m = |v: usize| (v + n) % (2 * n);
        let mut pairing = vec![0; 2 * n];
        for v in 0..2 * n {
            pairing[m(v)] = m(self.pairing[v] as usize);
        }
        Self::from_pairing(self.wall, pairing).expect("flip is admissible")
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<[usize; 2]> = (0..self.pairing.len())
            .filter(|&v| v < self.pairing[v] as usize)
            .map(|v| [v + 1, self.pairing[v] as usize + 1])
            .collect();
        json!({"r": self.wall.r, "s": self.wall.s, "pairing": pairs})
    }
}

/// Vertices print 1-based: top row `1..n`, bottom row `1'..n'`.
impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.wall.n();
        let name = |v: usize| {
            if v < n {
                format!("{}", v + 1)
            } else {
                format!("{}'", v - n + 1)
            }
        };
        let strands: Vec<String> = (0..2 * n)
            .filter(|&v| v < self.pairing[v] as usize)
            .map(|v| format!("{}-{}", name(v), name(self.pairing[v] as usize)))
            .collect();
        write!(f, "[{}]", strands.join(" "))
    }
}

/// Stacks `lower` under `upper` and returns the reduced diagram together with
/// the number of closed loops removed.
///
/// The top row of `lower` is glued to the bottom row of `upper`; the result
/// keeps the bottom row of `lower` and the top row of `upper`.
pub fn compose(
    lower: &WalledDiagram,
    upper: &WalledDiagram,
) -> Result<(WalledDiagram, usize), DiagramError> {
    if lower.wall != upper.wall {
        return Err(DiagramError::WallMismatch(lower.wall, upper.wall));
    }
    Ok(compose_unchecked(lower, upper))
}

pub(crate) fn compose_unchecked(
    lower: &WalledDiagram,
    upper: &WalledDiagram,
) -> (WalledDiagram, usize) {
    let n = lower.wall.n();
    let (d1, d2) = (&lower.pairing, &upper.pairing);
    let unset = u8::MAX;
    let mut out = vec![unset; 2 * n];
    let mut seen = vec![false; n];
    for start in 0..2 * n {
        if out[start] != unset {
            continue;
        }
        let mut in_upper = start < n;
        let mut v = start;
        let end = loop {
            if in_upper {
                let w = d2[v] as usize;
                if w < n {
                    break w;
                }
                seen[w - n] = true;
                v = w - n;
                in_upper = false;
            } else {
                let w = d1[v] as usize;
                if w >= n {
                    break w;
                }
                seen[w] = true;
                v = n + w;
                in_upper = true;
            }
        };
        out[start] = end as u8;
        out[end] = start as u8;
    }
    let mut loops = 0;
    for m in 0..n {
        if seen[m] {
            continue;
        }
        loops += 1;
        let mut x = m;
        loop {
            seen[x] = true;
            let y = d1[x] as usize;
            seen[y] = true;
            let z = d2[n + y] as usize - n;
            if z == m {
                break;
            }
            x = z;
        }
    }
    (
        WalledDiagram {
            wall: lower.wall,
            pairing: out,
        },
        loops,
    )
}

/// All `(r+s)!` diagrams in a fixed order, refusing shapes above `cap`.
pub fn enumerate(wall: Wall, cap: usize) -> Result<Vec<WalledDiagram>, DiagramError> {
    wall.check_cap(cap)?;
    let m = 2 * wall.n();
    let mut out = Vec::with_capacity(wall.dimension() as usize);
    let mut pairing = vec![usize::MAX; m];
    fn rec(wall: Wall, pairing: &mut Vec<usize>, out: &mut Vec<WalledDiagram>) {
        let Some(a) = pairing.iter().position(|&x| x == usize::MAX) else {
            out.push(WalledDiagram {
                wall,
                pairing: pairing.iter().map(|&x| x as u8).collect(),
            });
            return;
        };
        for b in a + 1..pairing.len() {
            if pairing[b] == usize::MAX && wall.admissible(a, b) {
                pairing[a] = b;
                pairing[b] = a;
                rec(wall, pairing, out);
                pairing[a] = usize::MAX;
                pairing[b] = usize::MAX;
            }
        }
    }
    rec(wall, &mut pairing, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(r: usize, s: usize) -> Wall {
        Wall::new(r, s)
    }

    #[test]
    fn basis_sizes_are_factorials() {
        for (r, s) in [
            (0, 0),
            (1, 0),
            (0, 2),
            (1, 1),
            (2, 1),
            (2, 2),
            (3, 2),
            (3, 3),
        ] {
            let basis = enumerate(w(r, s), DEFAULT_SIZE_CAP).unwrap();
            assert_eq!(basis.len() as u128, w(r, s).dimension());
        }
        assert_eq!(enumerate(w(2, 2), 8).unwrap().len(), 24);
        assert!(matches!(
            enumerate(w(5, 4), 8),
            Err(DiagramError::SizeLimitExceeded { n: 9, cap: 8 })
        ));
    }

    #[test]
    fn contraction_squares_to_a_loop() {
        let e = WalledDiagram::generator(w(1, 1), GeneratorKind::E(1, 2)).unwrap();
        let (d, loops) = compose(&e, &e).unwrap();
        assert_eq!(d, e);
        assert_eq!(loops, 1);
    }

    #[test]
    fn tau_is_a_product_of_nested_contractions() {
        let wall = w(2, 2);
        let e23 = WalledDiagram::generator(wall, GeneratorKind::E(2, 3)).unwrap();
        let e14 = WalledDiagram::generator(wall, GeneratorKind::E(1, 4)).unwrap();
        let tau = WalledDiagram::generator(wall, GeneratorKind::Tau(2)).unwrap();
        let (d, loops) = compose(&e23, &e14).unwrap();
        assert_eq!((d, loops), (tau.clone(), 0));
        assert_eq!(tau.top_arcs(), 2);
        assert_eq!(tau.to_string(), "[1-4 2-3 1'-4' 2'-3']");
    }

    #[test]
    fn arcs_sharing_a_column_absorb_into_a_transposition() {
        // e_{1,3} e_{1,4} = e_{1,3} (3,4), with e_{1,3} placed first (lower).
        let wall = w(2, 2);
        let g = |k| WalledDiagram::generator(wall, k).unwrap();
        let e13 = g(GeneratorKind::E(1, 3));
        let e14 = g(GeneratorKind::E(1, 4));
        let t34 = g(GeneratorKind::Transposition(3, 4));
        assert_eq!(compose(&e13, &e14).unwrap(), compose(&e13, &t34).unwrap());
    }

    #[test]
    fn invalid_generators_are_rejected() {
        let wall = w(2, 1);
        assert!(WalledDiagram::generator(wall, GeneratorKind::S(2)).is_err());
        assert!(WalledDiagram::generator(wall, GeneratorKind::E(3, 1)).is_err());
        assert!(WalledDiagram::generator(wall, GeneratorKind::Transposition(2, 3)).is_err());
        assert!(matches!(
            WalledDiagram::generator(wall, GeneratorKind::Tau(2)),
            Err(DiagramError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            WalledDiagram::generator(wall, GeneratorKind::S(2)),
            Err(DiagramError::CrossesWall(_))
        ));
        assert!(matches!(
            WalledDiagram::generator(wall, GeneratorKind::S(3)),
            Err(DiagramError::IndexOutOfRange { .. })
        ));
        assert!(WalledDiagram::from_pairing(wall, vec![1, 0, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn contraction_word_matches_direct_construction() {
        // e_{j,k} = (s_{k-1} .. s_{r+1})(s_j .. s_{r-1}) e_{r,r+1} (s_{r-1} .. s_j)(s_{r+1} .. s_{k-1})
        for (r, s) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let wall = w(r, s);
            let g = |k| WalledDiagram::generator(wall, k).unwrap();
            for j in 1..=r {
                for k in r + 1..=r + s {
                    let mut word: Vec<usize> = (r + 1..k).rev().collect();
                    word.extend(j..r);
                    let mut full: Vec<GeneratorKind> =
                        word.iter().map(|&i| GeneratorKind::S(i)).collect();
                    full.push(GeneratorKind::E(r, r + 1));
                    full.extend(word.iter().rev().map(|&i| GeneratorKind::S(i)));
                    let mut acc = WalledDiagram::identity(wall);
                    let mut loops = 0;
                    for kind in full {
                        let (d, l) = compose(&acc, &g(kind)).unwrap();
                        acc = d;
                        loops += l;
                    }
                    assert_eq!(
                        (acc, loops),
                        (g(GeneratorKind::E(j, k)), 0),
                        "e_{{{j},{k}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_shapes_compose_associatively_and_keep_arcs() {
        for (r, s) in [(1, 1), (2, 1), (1, 2), (0, 3), (3, 0)] {
            let basis = enumerate(w(r, s), DEFAULT_SIZE_CAP).unwrap();
            for a in &basis {
                assert_eq!(a.top_arcs(), a.bottom_arcs());
                for b in &basis {
                    let (ab, l1) = compose(a, b).unwrap();
                    assert!(ab.top_arcs() >= a.top_arcs().max(b.top_arcs()));
                    for c in &basis {
                        let (abc, l2) = compose(&ab, c).unwrap();
                        let (bc, l3) = compose(b, c).unwrap();
                        let (abc2, l4) = compose(a, &bc).unwrap();
                        assert_eq!((abc, l1 + l2), (abc2, l3 + l4));
                    }
                }
            }
        }
    }

    #[test]
    fn json_is_one_based() {
        let e = WalledDiagram::generator(w(1, 1), GeneratorKind::E(1, 2)).unwrap();
        assert_eq!(
            e.to_json(),
            json!({"r": 1, "s": 1, "pairing": [[1, 2], [3, 4]]})
        );
    }

    fn arb_diagram(wall: Wall) -> impl Strategy<Value = WalledDiagram> {
        let basis = enumerate(wall, DEFAULT_SIZE_CAP).unwrap();
        (0..basis.len()).prop_map(move |i| basis[i].clone())
    }

    proptest! {
        #[test]
        fn composition_is_associative_with_loop_counts(
            a in arb_diagram(w(2, 2)), b in arb_diagram(w(2, 2)), c in arb_diagram(w(2, 2)),
        ) {
            let (ab, l1) = compose(&a, &b).unwrap();
            let (abc, l2) = compose(&ab, &c).unwrap();
            let (bc, l3) = compose(&b, &c).unwrap();
            let (abc2, l4) = compose(&a, &bc).unwrap();
            prop_assert_eq!(abc, abc2);
            prop_assert_eq!(l1 + l2, l3 + l4);
        }

        #[test]
        fn identity_is_neutral(a in arb_diagram(w(3, 2))) {
            let id = WalledDiagram::identity(a.wall());
            prop_assert_eq!(compose(&a, &id).unwrap(), (a.clone(), 0));
            prop_assert_eq!(compose(&id, &a).unwrap(), (a.clone(), 0));
        }

        #[test]
        fn flip_reverses_products(a in arb_diagram(w(2, 1)), b in arb_diagram(w(2, 1))) {
            let (ab, l) = compose(&a, &b).unwrap();
            prop_assert_eq!(compose(&b.flip(), &a.flip()).unwrap(), (ab.flip(), l));
        }

        #[test]
        fn mirror_respects_products(a in arb_diagram(w(2, 1)), b in arb_diagram(w(2, 1))) {
            let (ab, l) = compose(&a, &b).unwrap();
            prop_assert_eq!(compose(&a.mirror(), &b.mirror()).unwrap(), (ab.mirror(), l));
            prop_assert_eq!(a.mirror().mirror(), a);
        }
    }
}
