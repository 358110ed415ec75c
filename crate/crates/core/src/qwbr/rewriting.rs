use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

use super::QError;
use crate::diagrams::Wall;
use crate::scalars::{Field, QuantumField, ScalarMode};

/// A generator of the quantized algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `S_i`, 1-based, `i != r`.
    S(usize),
    /// `E_{r,r+1}`.
    E,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S(i) => write!(f, "S{i}"),
            Letter::E => write!(f, "E"),
        }
    }
}

/// Generators in word-order precedence `S_1 < ... < S_{r-1} < S_{r+1} <
/// ... < E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub wall: Wall,
    pub letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(wall: Wall) -> Self {
        let mut letters: Vec<Letter> = (1..wall.n())
            .filter(|&i| i != wall.r)
            .map(Letter::S)
            .collect();
        if wall.r > 0 && wall.s > 0 {
            letters.push(Letter::E);
        }
        Alphabet { wall, letters }
    }

    pub fn index(&self, letter: Letter) -> Option<u8> {
        self.letters
            .iter()
            .position(|&l| l == letter)
            .map(|i| i as u8)
    }

    pub fn letter(&self, index: u8) -> Letter {
        self.letters[index as usize]
    }

    pub fn show(&self, w: &Word) -> String {
        if w.0.is_empty() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|&i| self.letter(i).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A word in letter indices, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&[u8]]) -> Self {
        Word(parts.concat())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial: words with nonzero coefficients.
pub type NcPoly<F> = BTreeMap<Word, F>;

pub(crate) fn poly_add_term<F: Field>(p: &mut NcPoly<F>, w: Word, c: &F) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&w) {
        Some(v) => {
            *v = v.add(c);
            if v.is_zero() {
                p.remove(&w);
            }
        }
        None => {
            p.insert(w, c.clone());
        }
    }
}

/// Defining relations as polynomials equal to zero, inverse-free.
#[derive(Clone, Debug)]
pub struct Presentation<F> {
    pub alphabet: Alphabet,
    pub relations: Vec<(&'static str, NcPoly<F>)>,
}

/// Parameters of one quantized algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QParams<F> {
    pub mode: ScalarMode,
    pub q: F,
    pub rho: F,
    pub delta: F,
    /// `q - q^-1`.
    pub z: F,
}

impl<F: QuantumField> QParams<F> {
    pub fn new(mode: &ScalarMode) -> Result<Self, QError> {
        let q = F::q_for(mode)?;
        let rho = F::rho_for(mode)?;
        let delta = F::delta_for(mode)?;
        let z = q.sub(&q.inv()?);
        Ok(QParams {
            mode: mode.clone(),
            q,
            rho,
            delta,
            z,
        })
    }
}

/// Builds the presentation with every `S_i^-1` replaced by `S_i - (q - q^-1)`.
pub fn presentation<F: Field>(wall: Wall, params: &QParams<F>) -> Presentation<F> {
    let alphabet = Alphabet::new(wall);
    let s = |i: usize| alphabet.index(Letter::S(i));
    let e = alphabet.index(Letter::E);
    let one = F::one();
    let minus = one.neg();
    let term = |word: &[u8], c: &F| (Word(word.to_vec()), c.clone());
    let poly = |terms: Vec<(Word, F)>| {
        let mut p = NcPoly::new();
        for (w, c) in terms {
            poly_add_term(&mut p, w, &c);
        }
        p
    };
    let mut relations = Vec::new();
    let gens: Vec<(usize, u8)> = (1..wall.n()).filter_map(|i| s(i).map(|x| (i, x))).collect();
    for &(_, a) in &gens {
        relations.push((
            "quadratic",
            poly(vec![
                term(&[a, a], &one),
                term(&[a], &params.z.neg()),
                term(&[], &minus),
            ]),
        ));
    }
    for &(i, a) in &gens {
        for &(j, b) in &gens {
            if j == i + 1 {
                relations.push((
                    "braid",
                    poly(vec![term(&[a, b, a], &one), term(&[b, a, b], &minus)]),
                ));
            }
            if j > i + 1 {
                relations.push((
                    "far-commutation",
                    poly(vec![term(&[a, b], &one), term(&[b, a], &minus)]),
                ));
            }
        }
    }
    if let Some(e) = e {
        let r = wall.r;
        relations.push((
            "contraction-square",
            poly(vec![term(&[e, e], &one), term(&[e], &params.delta.neg())]),
        ));
        for &(j, a) in &gens {
            if j + 1 != r && j != r + 1 {
                relations.push((
                    "contraction-commutes",
                    poly(vec![term(&[e, a], &one), term(&[a, e], &minus)]),
                ));
            }
        }
        let rho_e = term(&[e], &params.rho.neg());
        if let Some(a) = s(r.wrapping_sub(1)) {
            relations.push((
                "contraction-left-loop",
                poly(vec![term(&[e, a, e], &one), rho_e.clone()]),
            ));
        }
        if let Some(b) = s(r + 1) {
            relations.push((
                "contraction-right-loop",
                poly(vec![term(&[e, b, e], &one), rho_e.clone()]),
            ));
        }
        if let (Some(a), Some(b)) = (s(r.wrapping_sub(1)), s(r + 1)) {
            // S_a^-1 expands to S_a - z.
            let inv_a = |prefix: &[u8], suffix: &[u8], c: &F| {
                vec![
                    (Word::concat(&[prefix, &[a], suffix]), c.clone()),
                    (Word::concat(&[prefix, suffix]), c.mul(&params.z).neg()),
                ]
            };
            let mut t = inv_a(&[e], &[b, e, a], &one);
            t.extend(inv_a(&[e], &[b, e, b], &minus));
            relations.push(("long-relation-right", poly(t)));
            let mut t = inv_a(&[a, e], &[b, e], &one);
            t.extend(inv_a(&[b, e], &[b, e], &minus));
            relations.push(("long-relation-left", poly(t)));
        }
    }
    Presentation {
        alphabet,
        relations,
    }
}

/// Rule set under construction; maps leading words to their replacements.
#[derive(Clone, Debug)]
struct Rules<F> {
    map: HashMap<Vec<u8>, NcPoly<F>>,
    max_len: usize,
}

impl<F: Field> Rules<F> {
    fn new() -> Self {
        Rules {
            map: HashMap::new(),
            max_len: 0,
        }
    }

    /// First `(start, len)` of a left-hand side inside `w`, scanning starts
    /// left to right and shorter matches first.
    fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for len in 1..=self.max_len.min(w.len() - start) {
                if self.map.contains_key(&w[start..start + len]) {
                    return Some((start, len));
                }
            }
        }
        None
    }

    fn reduce(&self, mut p: NcPoly<F>) -> NcPoly<F> {
        let mut done: NcPoly<F> = NcPoly::new();
        while let Some((w, c)) = p.pop_last() {
            match self.find(&w.0) {
                None => {
                    done.insert(w, c);
                }
                Some((start, len)) => {
                    let rhs = &self.map[&w.0[start..start + len]];
                    for (u, d) in rhs {
                        let word = Word::concat(&[&w.0[..start], &u.0, &w.0[start + len..]]);
                        poly_add_term(&mut p, word, &c.mul(d));
                    }
                }
            }
        }
        done
    }

    fn insert(&mut self, lhs: Vec<u8>, rhs: NcPoly<F>) {
        self.max_len = self.max_len.max(lhs.len());
        self.map.insert(lhs, rhs);
    }

    fn remove(&mut self, lhs: &[u8]) -> Option<NcPoly<F>> {
        let out = self.map.remove(lhs);
        self.max_len = self.map.keys().map(Vec::len).max().unwrap_or(0);
        out
    }
}

/// `lhs - rhs` as a polynomial.
fn rule_poly<F: Field>(lhs: &[u8], rhs: &NcPoly<F>) -> NcPoly<F> {
    let mut p: NcPoly<F> = rhs.iter().map(|(w, c)| (w.clone(), c.neg())).collect();
    poly_add_term(&mut p, Word(lhs.to_vec()), &F::one());
    p
}

fn times<F: Field>(prefix: &[u8], p: &NcPoly<F>, suffix: &[u8]) -> NcPoly<F> {
    p.iter()
        .map(|(w, c)| (Word::concat(&[prefix, &w.0, suffix]), c.clone()))
        .collect()
}

/// Overlap polynomials of `a` followed by `b` sharing a proper nonempty
/// suffix/prefix: `a = x o`, `b = o y` gives `rhs_a y - x rhs_b`.
fn overlaps<F: Field>(a: &[u8], ra: &NcPoly<F>, b: &[u8], rb: &NcPoly<F>) -> Vec<NcPoly<F>> {
    let mut out = Vec::new();
    for k in 1..a.len().min(b.len()) {
        if a[a.len() - k..] == b[..k] {
            let left = times(&[], ra, &b[k..]);
            let mut p = left;
            for (w, c) in times(&a[..a.len() - k], rb, &[]) {
                poly_add_term(&mut p, w, &c.neg());
            }
            out.push(p);
        }
    }
    out
}

/// A rule's left side with its printed right side, for change detection.
type RuleSnapshot = (Vec<u8>, Vec<(Word, String)>);

/// Limits for the completion procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionConfig {
    pub max_rules: usize,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig { max_rules: 20_000 }
    }
}

/// A confluent rewriting system for the quantized algebra together with its
/// irreducible words.
pub struct RewriteSystem<F> {
    pub alphabet: Alphabet,
    pub params: QParams<F>,
    rules: Rules<F>,
    normal_words: Vec<Word>,
    cache: RwLock<HashMap<Vec<u8>, NcPoly<F>>>,
}

impl<F: Field> fmt::Debug for RewriteSystem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H{} over {} ({} rules)",
            self.alphabet.wall,
            self.params.mode,
            self.rules.map.len()
        )
    }
}

/// Runs Buchberger-style completion on the relations: reduce, orient by
/// the word order, interreduce and add every overlap, until all overlaps
/// resolve.
fn complete_rules<F: Field>(
    relations: Vec<NcPoly<F>>,
    config: CompletionConfig,
) -> Result<Rules<F>, QError> {
    let mut rules = Rules::new();
    // Pending polynomials keyed by leading word so small rules come first.
    let mut queue: BTreeMap<Word, Vec<NcPoly<F>>> = BTreeMap::new();
    let push = |queue: &mut BTreeMap<Word, Vec<NcPoly<F>>>, p: NcPoly<F>| {
        if let Some((w, _)) = p.last_key_value() {
            queue.entry(w.clone()).or_default().push(p);
        }
    };
    for p in relations {
        push(&mut queue, p);
    }
    while let Some(mut entry) = queue.first_entry() {
        let p = entry.get_mut().pop().expect("entries are nonempty");
        if entry.get().is_empty() {
            entry.remove();
        }
        let p = rules.reduce(p);
        let Some((lead, c)) = p.last_key_value() else {
            continue;
        };
        let lead = lead.0.clone();
        let inv = c.inv()?;
        let rhs: NcPoly<F> = p
            .iter()
            .filter(|(w, _)| w.0 != lead)
            .map(|(w, d)| (w.clone(), d.mul(&inv).neg()))
            .collect();
        let contains = |big: &[u8]| {
            big.len() >= lead.len() && big.windows(lead.len()).any(|x| x == lead.as_slice())
        };
        let absorbed: Vec<Vec<u8>> = rules.map.keys().filter(|k| contains(k)).cloned().collect();
        for k in absorbed {
            let old = rules.remove(&k).expect("present");
            push(&mut queue, rule_poly(&k, &old));
        }
        rules.insert(lead.clone(), rhs.clone());
        if rules.map.len() > config.max_rules {
            return Err(QError::CompletionBudgetExceeded {
                rules: rules.map.len(),
            });
        }
        let others: Vec<(Vec<u8>, NcPoly<F>)> = rules
            .map
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        for (k, v) in &others {
            for o in overlaps(&lead, &rhs, k, v) {
                push(&mut queue, rules.reduce(o));
            }
            if *k != lead {
                for o in overlaps(k, v, &lead, &rhs) {
                    push(&mut queue, rules.reduce(o));
                }
            }
        }
    }
    // Bring every right-hand side to normal form.
    let keys: Vec<Vec<u8>> = rules.map.keys().cloned().collect();
    for k in keys {
        let rhs = rules.map[&k].clone();
        let reduced = rules.reduce(rhs);
        rules.map.insert(k, reduced);
    }
    Ok(rules)
}

fn count_target(wall: Wall) -> usize {
    (1..=wall.n()).product()
}

impl<F: QuantumField> RewriteSystem<F> {
    /// Completes the presentation of `H_{r,s}` in the given mode.
    pub fn new(wall: Wall, mode: &ScalarMode, config: CompletionConfig) -> Result<Self, QError> {
        if wall.n() > super::MAX_STRANDS {
            return Err(QError::SizeLimitExceeded {
                n: wall.n(),
                cap: super::MAX_STRANDS,
            });
        }
        let params = QParams::new(mode)?;
        let pres = presentation(wall, &params);
        let rules = complete_rules(pres.relations.into_iter().map(|(_, p)| p).collect(), config)?;
        RewriteSystem::from_rules(pres.alphabet, params, rules)
    }
}

impl<F: Field> RewriteSystem<F> {
    fn from_rules(alphabet: Alphabet, params: QParams<F>, rules: Rules<F>) -> Result<Self, QError> {
        let target = count_target(alphabet.wall);
        let mut normal_words = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        while !level.is_empty() {
            let mut next = Vec::new();
            for w in &level {
                for a in 0..alphabet.letters.len() as u8 {
                    let mut v = w.0.clone();
                    v.push(a);
                    let irreducible =
                        (0..v.len()).all(|start| !rules.map.contains_key(&v[start..]));
                    if irreducible {
                        next.push(Word(v));
                    }
                }
            }
            normal_words.extend(next.iter().cloned());
            if normal_words.len() > target {
                return Err(QError::DimensionMismatch {
                    found: normal_words.len(),
                    expected: target,
                });
            }
            level = next;
        }
        if normal_words.len() != target {
            return Err(QError::DimensionMismatch {
                found: normal_words.len(),
                expected: target,
            });
        }
        normal_words.sort();
        Ok(RewriteSystem {
            alphabet,
            params,
            rules,
            normal_words,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn wall(&self) -> Wall {
        self.alphabet.wall
    }

    pub fn rule_count(&self) -> usize {
        self.rules.map.len()
    }

    /// Rules as `(lhs, rhs)` in word order of the left-hand sides.
    pub fn rules(&self) -> Vec<(Word, NcPoly<F>)> {
        let mut out: Vec<(Word, NcPoly<F>)> = self
            .rules
            .map
            .iter()
            .map(|(k, v)| (Word(k.clone()), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Irreducible words in word order; a basis of the algebra.
    pub fn normal_words(&self) -> &[Word] {
        &self.normal_words
    }

    pub fn dimension(&self) -> usize {
        self.normal_words.len()
    }

    pub fn reduce(&self, p: NcPoly<F>) -> NcPoly<F> {
        self.rules.reduce(p)
    }

    /// Normal form of a single word, memoized.
    pub fn normal_form(&self, w: &[u8]) -> NcPoly<F> {
        if let Some(hit) = self.cache.read().expect("cache lock").get(w) {
            return hit.clone();
        }
        let out = match self.rules.find(w) {
            None => NcPoly::from([(Word(w.to_vec()), F::one())]),
            Some((start, len)) => {
                let mut acc = NcPoly::new();
                for (u, c) in &self.rules.map[&w[start..start + len]] {
                    let word = [&w[..start], &u.0[..], &w[start + len..]].concat();
                    for (v, d) in self.normal_form(&word) {
                        poly_add_term(&mut acc, v, &c.mul(&d));
                    }
                }
                acc
            }
        };
        self.cache
            .write()
            .expect("cache lock")
            .insert(w.to_vec(), out.clone());
        out
    }

    /// Overlap polynomials of the final rules that fail to reduce to zero;
    /// empty exactly when the system is confluent.
    pub fn unresolved_overlaps(&self) -> usize {
        let rules: Vec<(&Vec<u8>, &NcPoly<F>)> = self.rules.map.iter().collect();
        let mut bad = 0;
        for (a, ra) in &rules {
            for (b, rb) in &rules {
                for o in overlaps(a, ra, b, rb) {
                    if !self.rules.reduce(o).is_empty() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Completes the current rules again; returns how many rules that adds
    /// or changes.
    pub fn recomplete(&self, config: CompletionConfig) -> Result<usize, QError> {
        let polys: Vec<NcPoly<F>> = self
            .rules
            .map
            .iter()
            .map(|(k, v)| rule_poly(k, v))
            .collect();
        let again = complete_rules(polys, config)?;
        let old: BTreeSet<RuleSnapshot> = self
            .rules
            .map
            .iter()
            .map(|(k, v)| {
                (
                    k.clone(),
                    v.iter().map(|(w, c)| (w.clone(), c.to_string())).collect(),
                )
            })
            .collect();
        let changed = again
            .map
            .iter()
            .filter(|(k, v)| {
                !old.contains(&(
                    (*k).clone(),
                    v.iter().map(|(w, c)| (w.clone(), c.to_string())).collect(),
                ))
            })
            .count();
        Ok(changed)
    }
}
