//! Permutation arithmetic, words in generators, orbits with transversal
//! words, and stabilizer chains.
//!
//! Points are 0-based and act on the right: `i · p = p.images()[i]`.
//! Composition is left to right, so `p.compose(&q)` applies `p` first and
//! then `q`. Group element products written `p * q` in comments always mean
//! `p.compose(&q)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Anything that composes like a group element. Words in generators can be
/// evaluated over any implementor.
pub trait GroupElement: Clone {
    /// Left-to-right product: apply `self` first, then `other`.
    fn compose(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Self;
}

/// A permutation of `{0..n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection of `{0..n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles over `{0..degree-1}`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= degree || q >= degree || moved[p] {
                    return Err(Error::InvalidPermutation);
                }
                moved[p] = true;
                images[p] = q;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image `point · self`. Panics if `point >= degree`.
    pub fn image_of(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Left-to-right composition: `i · (p * q) = (i · p) · q`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn min_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i != j).map(|(i, _)| i)
    }

    /// The conjugate `g^{-1} * self * g`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.inverse().compose(self)?.compose(g)
    }
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Result<Self> {
        Permutation::compose(self, other)
    }

    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One letter of a [`Word`]: a generator index with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Letter {
    index: usize,
    inverse: bool,
}

/// A formal word in signed generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// A single positive letter.
    pub fn generator(index: usize) -> Self {
        Word {
            letters: vec![Letter { index, inverse: false }],
        }
    }

    /// Builds a word from `(generator index, exponent)` pairs; every
    /// exponent must be `+1` or `-1`.
    pub fn from_letters(letters: &[(usize, i8)]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &(index, exp) in letters {
            let inverse = match exp {
                1 => false,
                -1 => true,
                _ => return Err(Error::InvalidWordExponent),
            };
            out.push(Letter { index, inverse });
        }
        Ok(Word { letters: out })
    }

    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.letters
            .iter()
            .map(|l| (l.index, if l.inverse { -1 } else { 1 }))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter { index: l.index, inverse: !l.inverse })
                .collect(),
        }
    }

    /// Left-to-right product of `gens[index]^exp` starting from `identity`.
    pub fn evaluate<T: GroupElement>(&self, gens: &[T], identity: T) -> Result<T> {
        let mut acc = identity;
        for l in &self.letters {
            let g = gens.get(l.index).ok_or(Error::GeneratorIndexOutOfRange {
                index: l.index,
                count: gens.len(),
            })?;
            acc = if l.inverse {
                acc.compose(&g.inverse())?
            } else {
                acc.compose(g)?
            };
        }
        Ok(acc)
    }

    /// Rewrites each letter through `expansions`, a word per generator index.
    pub fn substitute(&self, expansions: &[Word]) -> Result<Word> {
        let mut out = Word::empty();
        for l in &self.letters {
            let e = expansions.get(l.index).ok_or(Error::GeneratorIndexOutOfRange {
                index: l.index,
                count: expansions.len(),
            })?;
            if l.inverse {
                out = out.concat(&e.inverse());
            } else {
                out = out.concat(e);
            }
        }
        Ok(out)
    }
}

/// Result of a single orbit computation: the orbit in BFS discovery order,
/// a transversal word per orbit point, and all Schreier generator words.
#[derive(Clone, Debug)]
pub struct OrbitWords {
    base: usize,
    orbit: Vec<usize>,
    transversal: Vec<Option<Word>>,
    schreier: Vec<Word>,
}

impl OrbitWords {
    pub fn base(&self) -> usize {
        self.base
    }

    /// Orbit points in BFS discovery order, base first.
    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    /// Word mapping the base to `point`, if `point` lies in the orbit.
    pub fn transversal_word(&self, point: usize) -> Option<&Word> {
        self.transversal.get(point).and_then(|w| w.as_ref())
    }

    /// All Schreier generator words `t_i x_r t_{i·σ_r}^{-1}`, one per
    /// (orbit point, generator) pair. Their evaluations generate the
    /// stabilizer of the base in the group generated by the input.
    pub fn schreier_words(&self) -> &[Word] {
        &self.schreier
    }
}

/// BFS orbit of `base` under `gens`, with transversal and Schreier words.
///
/// Generators are tried in index order, so the output is deterministic for a
/// fixed generator sequence.
pub fn orbit_with_words(gens: &[Permutation], base: usize) -> Result<OrbitWords> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let degree = gens[0].degree();
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    if base >= degree {
        return Err(Error::PointOutOfRange { point: base, degree });
    }

    let mut transversal: Vec<Option<Word>> = vec![None; degree];
    transversal[base] = Some(Word::empty());
    let mut orbit = vec![base];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        let w = transversal[p].clone().expect("orbit point has a word");
        for (r, g) in gens.iter().enumerate() {
            let q = g.image_of(p);
            if transversal[q].is_none() {
                transversal[q] = Some(w.concat(&Word::generator(r)));
                orbit.push(q);
            }
        }
    }

    let mut schreier = Vec::with_capacity(orbit.len() * gens.len());
    for &p in &orbit {
        let tp = transversal[p].as_ref().expect("orbit point");
        for (r, g) in gens.iter().enumerate() {
            let q = g.image_of(p);
            let tq = transversal[q].as_ref().expect("orbit closed");
            schreier.push(tp.concat(&Word::generator(r)).concat(&tq.inverse()));
        }
    }

    Ok(OrbitWords { base, orbit, transversal, schreier })
}

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // per point: transversal element and its word in the ORIGINAL generators
    transversal: Vec<Option<(Permutation, Word)>>,
}

impl ChainLevel {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn transversal(&self, point: usize) -> Option<&(Permutation, Word)> {
        self.transversal.get(point).and_then(|t| t.as_ref())
    }
}

/// A stabilizer chain supporting membership tests, order computation and
/// factorization of members as words in the original generators.
///
/// Base points are the smallest moved point at each level and transversals
/// come from BFS with generators in index order, so the chain is
/// deterministic for a fixed generator sequence.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    order: u64,
}

impl StabilizerChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        // Current level generators, each with a word in the original
        // generators. Identity and duplicate generators are dropped; they do
        // not change the generated group.
        let mut level_gens: Vec<(Permutation, Word)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, g) in generators.iter().enumerate() {
            if !g.is_identity() && seen.insert(g.clone()) {
                level_gens.push((g.clone(), Word::generator(a)));
            }
        }

        let mut levels = Vec::new();
        let mut order: u64 = 1;
        while !level_gens.is_empty() {
            let perms: Vec<Permutation> = level_gens.iter().map(|(p, _)| p.clone()).collect();
            let words: Vec<Word> = level_gens.iter().map(|(_, w)| w.clone()).collect();
            let base = perms
                .iter()
                .filter_map(|p| p.min_moved_point())
                .min()
                .expect("non-identity generators move a point");
            let ow = orbit_with_words(&perms, base)?;
            order *= ow.orbit().len() as u64;

            let mut transversal: Vec<Option<(Permutation, Word)>> = vec![None; degree];
            for &p in ow.orbit() {
                let w = ow.transversal_word(p).expect("orbit point");
                let perm = w.evaluate(&perms, Permutation::identity(degree))?;
                transversal[p] = Some((perm, w.substitute(&words)?));
            }

            let mut next: Vec<(Permutation, Word)> = Vec::new();
            let mut next_seen = BTreeSet::new();
            for sw in ow.schreier_words() {
                let perm = sw.evaluate(&perms, Permutation::identity(degree))?;
                if !perm.is_identity() && next_seen.insert(perm.clone()) {
                    next.push((perm, sw.substitute(&words)?));
                }
            }

            levels.push(ChainLevel {
                base,
                gens: perms,
                orbit: ow.orbit().to_vec(),
                transversal,
            });
            level_gens = next;
        }

        Ok(StabilizerChain { degree, levels, order })
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    pub fn base_points(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut h = g.clone();
        for level in &self.levels {
            let i = h.image_of(level.base);
            match &level.transversal[i] {
                None => return false,
                Some((u, _)) => {
                    h = h.compose(&u.inverse()).expect("equal degrees");
                }
            }
        }
        h.is_identity()
    }

    /// Sifts `g` through the chain, producing a word in the original
    /// generators that evaluates to `g`. No minimality is guaranteed.
    pub fn factor(&self, g: &Permutation) -> Result<Word> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        let mut h = g.clone();
        let mut parts: Vec<Word> = Vec::new();
        for level in &self.levels {
            let i = h.image_of(level.base);
            match &level.transversal[i] {
                None => return Err(Error::NotAMember),
                Some((u, w)) => {
                    h = h.compose(&u.inverse())?;
                    parts.push(w.clone());
                }
            }
        }
        if !h.is_identity() {
            return Err(Error::NotAMember);
        }
        // g = u_{L-1} * ... * u_1 * u_0 with parts collected level-0 first.
        let mut out = Word::empty();
        for w in parts.iter().rev() {
            out = out.concat(w);
        }
        Ok(out)
    }
}

#[derive(Debug)]
struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
    elements: OnceLock<Vec<Permutation>>,
}

/// A finite permutation group given by a designated generator sequence.
///
/// The generator sequence is part of the group's identity: two `PermGroup`s
/// are equal iff they have the same degree and the same generator image
/// lists. Stabilizer chain and element enumeration are cached behind an
/// initialize-once guard, so values are cheap to clone and safe to share
/// across threads.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GroupData", into = "GroupData")]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

#[derive(Serialize, Deserialize)]
struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
}

impl TryFrom<GroupData> for PermGroup {
    type Error = Error;

    fn try_from(d: GroupData) -> Result<Self> {
        PermGroup::new(d.degree, d.generators)
    }
}

impl From<PermGroup> for GroupData {
    fn from(g: PermGroup) -> Self {
        GroupData {
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }
    }
}

impl PermGroup {
    /// Creates a group from a generator sequence. An empty sequence is
    /// replaced by the single identity generator so the sequence invariant
    /// holds for trivial groups.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                chain: OnceLock::new(),
                elements: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("identity generator is valid")
    }

    /// Symmetric group on `n` points, generated by a transposition and an
    /// `n`-cycle.
    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return PermGroup::trivial(n);
        }
        let t = Permutation::from_cycles(n, &[&[0, 1]]).expect("valid cycle");
        let c: Vec<usize> = (0..n).collect();
        let cycle = Permutation::from_cycles(n, &[&c]).expect("valid cycle");
        if n == 2 {
            return PermGroup::new(n, vec![t]).expect("valid generators");
        }
        PermGroup::new(n, vec![t, cycle]).expect("valid generators")
    }

    /// Alternating group on `n` points.
    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return PermGroup::trivial(n);
        }
        let t = Permutation::from_cycles(n, &[&[0, 1, 2]]).expect("valid cycle");
        if n == 3 {
            return PermGroup::new(n, vec![t]).expect("valid generators");
        }
        let big: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
        let cycle = Permutation::from_cycles(n, &[&big]).expect("valid cycle");
        PermGroup::new(n, vec![t, cycle]).expect("valid generators")
    }

    /// Cyclic group of order `n` acting regularly.
    pub fn cyclic(n: usize) -> Self {
        if n == 0 {
            return PermGroup::trivial(0);
        }
        let c: Vec<usize> = (0..n).collect();
        let cycle = Permutation::from_cycles(n, &[&c]).expect("valid cycle");
        PermGroup::new(n, vec![cycle]).expect("valid generators")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral group needs n >= 3");
        let c: Vec<usize> = (0..n).collect();
        let rot = Permutation::from_cycles(n, &[&c]).expect("valid cycle");
        let refl = Permutation::new((0..n).map(|i| (n - i) % n).collect()).expect("valid");
        PermGroup::new(n, vec![rot, refl]).expect("valid generators")
    }

    /// The quaternion group of order 8 in its regular representation on the
    /// elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Self {
        let gi = Permutation::new(vec![2, 3, 1, 0, 7, 6, 4, 5]).expect("valid");
        let gj = Permutation::new(vec![4, 5, 6, 7, 1, 0, 3, 2]).expect("valid");
        PermGroup::new(8, vec![gi, gj]).expect("valid generators")
    }

    /// Klein four-group as two disjoint transpositions.
    pub fn klein_four() -> Self {
        let a = Permutation::from_cycles(4, &[&[0, 1]]).expect("valid");
        let b = Permutation::from_cycles(4, &[&[2, 3]]).expect("valid");
        PermGroup::new(4, vec![a, b]).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.inner.degree)
    }

    /// The cached stabilizer chain.
    pub fn chain(&self) -> &StabilizerChain {
        self.inner.chain.get_or_init(|| {
            StabilizerChain::build(self.inner.degree, &self.inner.generators)
                .expect("generators were validated at construction")
        })
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// All elements, sorted by image list (the fixed total order on
    /// elements used throughout the crate).
    pub fn elements(&self) -> &[Permutation] {
        self.inner.elements.get_or_init(|| {
            close_under_group_ops(self.inner.degree, &self.inner.generators)
        })
    }

    /// Factors a member as a word in the designated generators.
    pub fn factor_element(&self, g: &Permutation) -> Result<Word> {
        self.chain().factor(g)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.degree == other.inner.degree && self.inner.generators == other.inner.generators
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.inner.degree)
            .field("generators", &self.inner.generators)
            .finish()
    }
}

/// Closure of a generator set under composition and inverse, sorted by
/// image list.
pub(crate) fn close_under_group_ops(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = vec![Permutation::identity(degree)];
    set.insert(Permutation::identity(degree));
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = p.compose(g).expect("equal degrees");
            if set.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let p = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        assert!(p.compose(&p).unwrap().is_identity());
    }

    #[test]
    fn identity_law() {
        let p = perm(&[2, 0, 1]);
        assert_eq!(Permutation::identity(3).compose(&p).unwrap(), p);
        assert_eq!(p.compose(&Permutation::identity(3)).unwrap(), p);
    }

    #[test]
    fn three_cycle_squared() {
        // i ↦ q[p[i]] forces (0 1 2)^2 = (0 2 1).
        let p = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let expected = Permutation::from_cycles(3, &[&[0, 2, 1]]).unwrap();
        assert_eq!(p.compose(&p).unwrap(), expected);
    }

    #[test]
    fn compose_degree_mismatch() {
        let p = perm(&[1, 0]);
        let q = perm(&[0, 1, 2]);
        assert_eq!(p.compose(&q), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn inverse_cancels() {
        let p = perm(&[3, 0, 2, 1]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::new(vec![0, 0]), Err(Error::InvalidPermutation));
        assert_eq!(Permutation::new(vec![1, 2]), Err(Error::InvalidPermutation));
    }

    #[test]
    fn empty_word_is_identity() {
        let gens = [perm(&[1, 0, 2])];
        let e = Word::empty()
            .evaluate(&gens, Permutation::identity(3))
            .unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn word_cancellation() {
        let gens = [perm(&[1, 2, 0])];
        let w = Word::from_letters(&[(0, 1), (0, -1)]).unwrap();
        assert!(w.evaluate(&gens, Permutation::identity(3)).unwrap().is_identity());
    }

    #[test]
    fn word_left_to_right_product() {
        // (0 1) * (0 1 2) composed image-list by hand: 0→1→2, 1→0→1, 2→2→0,
        // giving the image list [2, 1, 0].
        let gens = [
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        let w = Word::from_letters(&[(0, 1), (1, 1)]).unwrap();
        let got = w.evaluate(&gens, Permutation::identity(3)).unwrap();
        assert_eq!(got, perm(&[2, 1, 0]));
    }

    #[test]
    fn word_index_out_of_range() {
        let gens = [perm(&[1, 0])];
        let w = Word::from_letters(&[(1, 1)]).unwrap();
        assert!(matches!(
            w.evaluate(&gens, Permutation::identity(2)),
            Err(Error::GeneratorIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn word_rejects_bad_exponent() {
        assert_eq!(Word::from_letters(&[(0, 2)]), Err(Error::InvalidWordExponent));
    }

    fn stab_order(ow: &OrbitWords, gens: &[Permutation], degree: usize) -> u64 {
        let evals: Vec<Permutation> = ow
            .schreier_words()
            .iter()
            .map(|w| w.evaluate(gens, Permutation::identity(degree)).unwrap())
            .collect();
        close_under_group_ops(degree, &evals).len() as u64
    }

    #[test]
    fn orbit_single_transposition() {
        let gens = [Permutation::from_cycles(2, &[&[0, 1]]).unwrap()];
        let ow = orbit_with_words(&gens, 0).unwrap();
        assert_eq!(ow.orbit(), &[0, 1]);
        assert_eq!(
            ow.transversal_word(1).unwrap(),
            &Word::from_letters(&[(0, 1)]).unwrap()
        );
        assert!(ow.transversal_word(0).unwrap().is_empty());
        assert_eq!(stab_order(&ow, &gens, 2), 1);
    }

    #[test]
    fn orbit_regular_three_cycle() {
        let gens = [Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()];
        let ow = orbit_with_words(&gens, 0).unwrap();
        assert_eq!(ow.orbit(), &[0, 1, 2]);
        assert_eq!(stab_order(&ow, &gens, 3), 1);
    }

    #[test]
    fn orbit_symmetric_three() {
        let g = PermGroup::symmetric(3);
        let ow = orbit_with_words(g.generators(), 0).unwrap();
        assert_eq!(ow.orbit().len(), 3);
        // |S| = |P| / |orbit| = 6 / 3 by orbit-stabilizer.
        assert_eq!(stab_order(&ow, g.generators(), 3), 2);
    }

    #[test]
    fn orbit_transversal_words_reach_points() {
        let g = PermGroup::symmetric(4);
        let ow = orbit_with_words(g.generators(), 0).unwrap();
        for &p in ow.orbit() {
            let w = ow.transversal_word(p).unwrap();
            let e = w.evaluate(g.generators(), Permutation::identity(4)).unwrap();
            assert_eq!(e.image_of(0), p);
        }
    }

    #[test]
    fn orbit_base_out_of_range() {
        let gens = [perm(&[1, 0])];
        assert!(matches!(
            orbit_with_words(&gens, 5),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn chain_trivial_group() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.chain().levels().len(), 0);
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Permutation::identity(4)));
        assert!(!g.contains(&perm(&[1, 0, 2, 3])));
    }

    #[test]
    fn chain_symmetric_three() {
        assert_eq!(PermGroup::symmetric(3).order(), 6);
    }

    #[test]
    fn chain_symmetric_four_matches_enumeration() {
        let g = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        // independent oracle: exhaustive closure
        assert_eq!(g.elements().len(), 24);
    }

    #[test]
    fn factor_identity_and_generators() {
        let g = PermGroup::symmetric(3);
        let w = g.factor_element(&g.identity()).unwrap();
        assert!(w
            .evaluate(g.generators(), g.identity())
            .unwrap()
            .is_identity());
        let w0 = g.factor_element(&g.generators()[0]).unwrap();
        assert_eq!(
            w0.evaluate(g.generators(), g.identity()).unwrap(),
            g.generators()[0]
        );
    }

    #[test]
    fn factor_roundtrip_symmetric_four() {
        let g = PermGroup::symmetric(4);
        for e in g.elements() {
            let w = g.factor_element(e).unwrap();
            assert_eq!(&w.evaluate(g.generators(), g.identity()).unwrap(), e);
        }
    }

    #[test]
    fn factor_non_member_and_degree_errors_are_distinct() {
        let g = PermGroup::new(3, vec![Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(g.factor_element(&perm(&[1, 0, 2])), Err(Error::NotAMember));
        assert_eq!(
            g.factor_element(&Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn named_groups_have_expected_orders() {
        assert_eq!(PermGroup::cyclic(4).order(), 4);
        assert_eq!(PermGroup::klein_four().order(), 4);
        assert_eq!(PermGroup::dihedral(4).order(), 8);
        assert_eq!(PermGroup::alternating(4).order(), 12);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        let q8 = PermGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        // exactly one involution in Q8
        let involutions = q8
            .elements()
            .iter()
            .filter(|p| !p.is_identity() && p.compose(p).unwrap().is_identity())
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn chain_is_deterministic() {
        let g1 = PermGroup::symmetric(4);
        let g2 = PermGroup::symmetric(4);
        assert_eq!(g1.chain().base_points(), g2.chain().base_points());
        assert_eq!(g1.elements(), g2.elements());
        let ow1 = orbit_with_words(g1.generators(), 0).unwrap();
        let ow2 = orbit_with_words(g2.generators(), 0).unwrap();
        assert_eq!(ow1.orbit(), ow2.orbit());
        assert_eq!(ow1.schreier_words().len(), ow2.schreier_words().len());
    }

    #[test]
    fn group_serde_roundtrip() {
        let g = PermGroup::symmetric(3);
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(j, r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#);
        let back: PermGroup = serde_json::from_str(&j).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn permutation_serde_rejects_invalid() {
        let r: std::result::Result<Permutation, _> = serde_json::from_str("[0,0,1]");
        assert!(r.is_err());
    }
}
