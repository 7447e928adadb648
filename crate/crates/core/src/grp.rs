//! Subgroup-lattice machinery on permutation groups: enumeration, conjugacy
//! classes with canonical representatives, normalizers, the table of marks,
//! coset and double-coset transversals, quotients and direct products.
//!
//! Everything here is brute force over element lists, which is cheap and
//! auditable for the intended group orders (a few hundred). The fixed total
//! order on elements is lexicographic on image lists; all enumerations are
//! deterministic across runs.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{close_under_group_ops, PermGroup, Permutation};

/// Default bound on the parent group order for full subgroup enumeration.
pub const DEFAULT_SUBGROUP_ORDER_BOUND: u64 = 400;

/// A subgroup of a [`PermGroup`], stored with its full sorted element set
/// and a greedily chosen minimal generating set.
#[derive(Clone)]
pub struct Subgroup {
    parent: PermGroup,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl Subgroup {
    /// Subgroup generated by `gens` inside `parent`.
    pub fn new(parent: &PermGroup, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != parent.degree() {
                return Err(Error::DegreeMismatch(parent.degree(), g.degree()));
            }
            if !parent.contains(g) {
                return Err(Error::NotASubgroup);
            }
        }
        let elements = close_under_group_ops(parent.degree(), &gens);
        Ok(Self::assemble(parent.clone(), elements))
    }

    /// Wraps an element set that must already be closed under the group
    /// operations.
    pub fn from_elements(parent: &PermGroup, elements: Vec<Permutation>) -> Result<Self> {
        let mut sorted = elements;
        sorted.sort();
        sorted.dedup();
        if sorted.is_empty() {
            sorted.push(parent.identity());
        }
        for g in &sorted {
            if !parent.contains(g) {
                return Err(Error::NotASubgroup);
            }
        }
        let closed = close_under_group_ops(parent.degree(), &sorted);
        if closed != sorted {
            return Err(Error::NotClosed);
        }
        Ok(Self::assemble(parent.clone(), sorted))
    }

    // `elements` must be sorted and closed.
    fn assemble(parent: PermGroup, elements: Vec<Permutation>) -> Self {
        let generators = greedy_generators(parent.degree(), &elements);
        Subgroup { parent, generators, elements }
    }

    pub fn trivial(parent: &PermGroup) -> Self {
        Self::assemble(parent.clone(), vec![parent.identity()])
    }

    pub fn whole(parent: &PermGroup) -> Self {
        let elements = parent.elements().to_vec();
        Self::assemble(parent.clone(), elements)
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    /// Canonical generating set: greedily chosen minimal generators in
    /// element order.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && is_sorted_subset(&self.elements, &other.elements)
    }

    /// The subgroup as a permutation group in its own right, acting on the
    /// parent's domain with the canonical generators designated.
    pub fn as_group(&self) -> PermGroup {
        PermGroup::new(self.parent.degree(), self.generators.clone())
            .expect("subgroup generators are valid")
    }

    /// The conjugate `g^{-1} U g` as a subgroup of the same parent.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Subgroup> {
        let mut els = Vec::with_capacity(self.elements.len());
        for u in &self.elements {
            els.push(u.conjugate_by(g)?);
        }
        els.sort();
        Ok(Self::assemble(self.parent.clone(), els))
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generators().iter().all(|g| {
            self.generators
                .iter()
                .all(|u| u.conjugate_by(g).map(|c| self.contains(&c)).unwrap_or(false))
        })
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.parent != other.parent {
            return Err(Error::GroupMismatch);
        }
        let els: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Ok(Self::assemble(self.parent.clone(), els))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn is_sorted_subset(small: &[Permutation], big: &[Permutation]) -> bool {
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            match b.cmp(s) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Greedy minimal generating set: scan elements in the fixed order, keep
/// those not yet generated.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut generated: BTreeSet<Permutation> = BTreeSet::new();
    generated.insert(Permutation::identity(degree));
    for e in elements {
        if generated.contains(e) {
            continue;
        }
        gens.push(e.clone());
        generated = close_under_group_ops(degree, &gens).into_iter().collect();
        if generated.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Every subgroup of `g`, enumerated by closing the cyclic subgroups under
/// pairwise join. Every subgroup is a join of cyclic subgroups, so the
/// fixpoint is complete. Output is sorted by (order, element list).
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<Subgroup>> {
    all_subgroups_with_bound(g, DEFAULT_SUBGROUP_ORDER_BOUND)
}

pub fn all_subgroups_with_bound(g: &PermGroup, bound: u64) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::OrderBoundExceeded { order: g.order(), bound });
    }
    let degree = g.degree();

    // element lists plus a small generating set per subgroup
    let mut subs: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new();
    let mut keys: HashSet<Vec<Permutation>> = HashSet::new();

    for e in g.elements() {
        let els = close_under_group_ops(degree, std::slice::from_ref(e));
        if keys.insert(els.clone()) {
            let gens = greedy_generators(degree, &els);
            subs.push((els, gens));
        }
    }

    let mut k = 0;
    while k < subs.len() {
        for j in 0..k {
            let (a, b) = (&subs[j], &subs[k]);
            if is_sorted_subset(&a.0, &b.0) || is_sorted_subset(&b.0, &a.0) {
                continue;
            }
            let mut gens = a.1.clone();
            gens.extend_from_slice(&b.1);
            let els = close_under_group_ops(degree, &gens);
            if keys.contains(&els) {
                continue;
            }
            keys.insert(els.clone());
            let gens = greedy_generators(degree, &els);
            subs.push((els, gens));
        }
        k += 1;
    }

    let mut lists: Vec<Vec<Permutation>> = subs.into_iter().map(|(els, _)| els).collect();
    lists.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(lists
        .into_iter()
        .map(|els| Subgroup::assemble(g.clone(), els))
        .collect())
}

/// Normalizer of `u` in `g`, by brute force over the elements of `g`.
pub fn normalizer(g: &PermGroup, u: &Subgroup) -> Result<Subgroup> {
    if u.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let els: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|x| {
            u.generators()
                .iter()
                .all(|s| u.contains(&s.conjugate_by(x).expect("equal degrees")))
        })
        .cloned()
        .collect();
    Ok(Subgroup::assemble(g.clone(), els))
}

/// Some `γ ∈ g` with `γ^{-1} U γ = V`, or `None` if `U` and `V` are not
/// conjugate in `g`. Deterministic: the first match in element order wins.
pub fn conjugator(g: &PermGroup, u: &Subgroup, v: &Subgroup) -> Result<Option<Permutation>> {
    if u.parent() != g || v.parent() != g {
        return Err(Error::NotASubgroup);
    }
    if u.order() != v.order() {
        return Ok(None);
    }
    for x in g.elements() {
        let ok = u
            .generators()
            .iter()
            .all(|s| v.contains(&s.conjugate_by(x).expect("equal degrees")));
        if ok {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}

/// Left-coset transversal of `u` in `g`: the minimal element of each coset
/// `xU`, sorted, so the identity comes first.
pub fn left_transversal(g: &PermGroup, u: &Subgroup) -> Result<Vec<Permutation>> {
    if u.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        for s in u.elements() {
            seen.insert(x.compose(s)?);
        }
    }
    Ok(reps)
}

/// One representative per double coset `VxU`, minimal in element order,
/// sorted.
pub fn double_coset_reps(v: &Subgroup, g: &PermGroup, u: &Subgroup) -> Result<Vec<Permutation>> {
    if u.parent() != g || v.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        for a in v.elements() {
            let ax = a.compose(x)?;
            for b in u.elements() {
                seen.insert(ax.compose(b)?);
            }
        }
    }
    Ok(reps)
}

/// The canonical invariant of the conjugacy class of `u` in `g`: the
/// lexicographically minimal sorted element list among all conjugates.
pub fn canonical_conjugacy_key(g: &PermGroup, u: &Subgroup) -> Result<Vec<Vec<usize>>> {
    if u.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let mut best: Option<Vec<Vec<usize>>> = None;
    for x in g.elements() {
        let mut conj: Vec<Vec<usize>> = u
            .elements()
            .iter()
            .map(|e| e.conjugate_by(x).expect("equal degrees").images().to_vec())
            .collect();
        conj.sort();
        if best.as_ref().map(|b| conj < *b).unwrap_or(true) {
            best = Some(conj);
        }
    }
    Ok(best.expect("group has at least the identity"))
}

/// A verified group homomorphism given by images of the source generators.
///
/// Verification walks the Cayley graph of the source: whenever an element
/// is reached along two generator paths, the accumulated images must agree.
/// The full element-to-image table is cached.
#[derive(Clone)]
pub struct GroupHom {
    source: PermGroup,
    target: PermGroup,
    images: Vec<Permutation>,
    table: HashMap<Permutation, Permutation>,
}

impl GroupHom {
    pub fn new(source: PermGroup, target: PermGroup, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::NotAHomomorphism);
        }
        for h in &images {
            if !target.contains(h) {
                return Err(Error::NotAHomomorphism);
            }
        }
        let table = verify_generator_map(&source, &images, target.degree())?;
        Ok(GroupHom { source, target, images, table })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn apply(&self, g: &Permutation) -> Result<&Permutation> {
        self.table.get(g).ok_or(Error::NotAMember)
    }

    pub fn is_isomorphism(&self) -> bool {
        let distinct: HashSet<&Permutation> = self.table.values().collect();
        distinct.len() as u64 == self.source.order() && self.source.order() == self.target.order()
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target.order())
            .field("images", &self.images)
            .finish()
    }
}

/// Cayley-BFS consistency check for a generator-image assignment, returning
/// the full element-to-image table. `images` need not be permutations of
/// the source degree; they only have to compose among themselves.
pub(crate) fn verify_generator_map(
    source: &PermGroup,
    images: &[Permutation],
    image_degree: usize,
) -> Result<HashMap<Permutation, Permutation>> {
    if images.len() != source.generators().len() {
        return Err(Error::NotAHomomorphism);
    }
    let mut table: HashMap<Permutation, Permutation> = HashMap::new();
    let id_src = source.identity();
    let id_img = Permutation::identity(image_degree);
    table.insert(id_src.clone(), id_img.clone());
    let mut queue = vec![(id_src, id_img)];
    while let Some((x, px)) = queue.pop() {
        for (g, h) in source.generators().iter().zip(images) {
            let x2 = x.compose(g)?;
            let px2 = px.compose(h)?;
            match table.get(&x2) {
                Some(existing) => {
                    if *existing != px2 {
                        return Err(Error::NotAHomomorphism);
                    }
                }
                None => {
                    table.insert(x2.clone(), px2.clone());
                    queue.push((x2, px2));
                }
            }
        }
    }
    Ok(table)
}

/// A quotient `G/N`: the induced permutation group on cosets, the verified
/// projection, and a section picking the minimal preimage per coset.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: PermGroup,
    projection: GroupHom,
    transversal: Vec<Permutation>,
}

impl Quotient {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    /// Coset representatives aligned with the points of the quotient group.
    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    /// Minimal preimage of a quotient element.
    pub fn section(&self, q: &Permutation) -> Result<Permutation> {
        if !self.group.contains(q) {
            return Err(Error::NotAMember);
        }
        Ok(self.transversal[q.image_of(0)].clone())
    }
}

/// Quotient of `g` by a normal subgroup `n`, realized by the translation
/// action of `g` on the cosets of `n`. For a normal subgroup left and right
/// cosets coincide, and acting by `xN ↦ (xg)N` makes the projection a
/// homomorphism under the left-to-right composition convention.
pub fn quotient_group(g: &PermGroup, n: &Subgroup) -> Result<Quotient> {
    if n.parent() != g {
        return Err(Error::NotASubgroup);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let transversal = left_transversal(g, n)?;
    let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
    for (i, t) in transversal.iter().enumerate() {
        for s in n.elements() {
            coset_of.insert(t.compose(s)?, i);
        }
    }
    let m = transversal.len();
    let mut images = Vec::with_capacity(g.generators().len());
    for gen in g.generators() {
        let mut img = vec![0usize; m];
        for (i, t) in transversal.iter().enumerate() {
            img[i] = coset_of[&t.compose(gen)?];
        }
        images.push(Permutation::new(img)?);
    }
    let quotient = PermGroup::new(m, images.clone())?;
    let projection = GroupHom::new(g.clone(), quotient.clone(), images)?;
    Ok(Quotient { group: quotient, projection, transversal })
}

/// A direct product `H × G` acting on the disjoint union of the two
/// domains, with embeddings and componentwise projections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    group: PermGroup,
    left: PermGroup,
    right: PermGroup,
}

pub fn direct_product(h: &PermGroup, g: &PermGroup) -> DirectProduct {
    let dl = h.degree();
    let dr = g.degree();
    let mut gens = Vec::with_capacity(h.generators().len() + g.generators().len());
    for p in h.generators() {
        gens.push(embed_block(p, dl, dr, true));
    }
    for p in g.generators() {
        gens.push(embed_block(p, dl, dr, false));
    }
    let group = PermGroup::new(dl + dr, gens).expect("block permutations are valid");
    DirectProduct { group, left: h.clone(), right: g.clone() }
}

fn embed_block(p: &Permutation, dl: usize, dr: usize, left: bool) -> Permutation {
    let mut images: Vec<usize> = (0..dl + dr).collect();
    if left {
        images[..dl].copy_from_slice(p.images());
    } else {
        for (slot, &j) in images[dl..].iter_mut().zip(p.images()) {
            *slot = dl + j;
        }
    }
    Permutation::new(images).expect("embedding preserves bijectivity")
}

impl DirectProduct {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn left_group(&self) -> &PermGroup {
        &self.left
    }

    pub fn right_group(&self) -> &PermGroup {
        &self.right
    }

    pub fn embed_left(&self, h: &Permutation) -> Result<Permutation> {
        if h.degree() != self.left.degree() {
            return Err(Error::DegreeMismatch(self.left.degree(), h.degree()));
        }
        Ok(embed_block(h, self.left.degree(), self.right.degree(), true))
    }

    pub fn embed_right(&self, g: &Permutation) -> Result<Permutation> {
        if g.degree() != self.right.degree() {
            return Err(Error::DegreeMismatch(self.right.degree(), g.degree()));
        }
        Ok(embed_block(g, self.left.degree(), self.right.degree(), false))
    }

    /// The element `(h, g)`.
    pub fn pair(&self, h: &Permutation, g: &Permutation) -> Result<Permutation> {
        self.embed_left(h)?.compose(&self.embed_right(g)?)
    }

    pub fn project_left(&self, p: &Permutation) -> Result<Permutation> {
        let dl = self.left.degree();
        if p.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch(self.group.degree(), p.degree()));
        }
        let images: Vec<usize> = p.images()[..dl].to_vec();
        if images.iter().any(|&i| i >= dl) {
            return Err(Error::NotInProduct);
        }
        Permutation::new(images)
    }

    pub fn project_right(&self, p: &Permutation) -> Result<Permutation> {
        let dl = self.left.degree();
        if p.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch(self.group.degree(), p.degree()));
        }
        let images: Vec<usize> = p.images()[dl..]
            .iter()
            .map(|&i| i.wrapping_sub(dl))
            .collect();
        if images.iter().any(|&i| i >= self.right.degree()) {
            return Err(Error::NotInProduct);
        }
        Permutation::new(images)
    }
}

/// Canonical table of the conjugacy classes of subgroups of a group:
/// representatives, normalizers, and the table of Burnside marks.
///
/// Representatives are sorted ascending by order, ties broken by the
/// lexicographic order of the sorted element list; each representative is
/// the minimal such list within its class. The trivial subgroup is first
/// and the whole group last. `marks[c][d]` counts the fixed points of
/// `U_d` on the cosets `Γ/U_c`; the matrix is lower triangular with
/// diagonal `[Nor(U_c) : U_c]`.
pub struct SubgroupClassTable {
    group: PermGroup,
    reps: Vec<Subgroup>,
    normalizers: Vec<Subgroup>,
    class_sizes: Vec<u64>,
    total_subgroups: u64,
    marks: Vec<Vec<u64>>,
    transversals: OnceLock<Vec<Vec<Permutation>>>,
}

impl SubgroupClassTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        Self::with_bound(group, DEFAULT_SUBGROUP_ORDER_BOUND)
    }

    pub fn with_bound(group: &PermGroup, bound: u64) -> Result<Self> {
        let all = all_subgroups_with_bound(group, bound)?;
        let total_subgroups = all.len() as u64;
        let els = group.elements();

        let mut classified: HashSet<Vec<Permutation>> = HashSet::new();
        let mut classes: Vec<(Vec<Permutation>, u64)> = Vec::new();
        for sub in &all {
            if classified.contains(sub.elements()) {
                continue;
            }
            let mut orbit: BTreeSet<Vec<Permutation>> = BTreeSet::new();
            for x in els {
                let mut conj: Vec<Permutation> = sub
                    .elements()
                    .iter()
                    .map(|e| e.conjugate_by(x).expect("equal degrees"))
                    .collect();
                conj.sort();
                orbit.insert(conj);
            }
            let canonical = orbit.iter().next().expect("orbit nonempty").clone();
            let size = orbit.len() as u64;
            for key in orbit {
                classified.insert(key);
            }
            classes.push((canonical, size));
        }
        classes.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));

        let reps: Vec<Subgroup> = classes
            .iter()
            .map(|(els, _)| Subgroup::assemble(group.clone(), els.clone()))
            .collect();
        let class_sizes: Vec<u64> = classes.iter().map(|(_, n)| *n).collect();

        let mut normalizers = Vec::with_capacity(reps.len());
        for u in &reps {
            normalizers.push(normalizer(group, u)?);
        }

        let mut table = SubgroupClassTable {
            group: group.clone(),
            reps,
            normalizers,
            class_sizes,
            total_subgroups,
            marks: Vec::new(),
            transversals: OnceLock::new(),
        };
        table.marks = table.compute_marks()?;
        Ok(table)
    }

    fn compute_marks(&self) -> Result<Vec<Vec<u64>>> {
        let l = self.reps.len();
        let mut marks = vec![vec![0u64; l]; l];
        for (c, row) in marks.iter_mut().enumerate() {
            let transversal = &self.transversals()[c];
            for (d, entry) in row.iter_mut().enumerate() {
                let mut count = 0u64;
                for x in transversal {
                    let fixed = self.reps[d].generators().iter().all(|u| {
                        self.reps[c].contains(&u.conjugate_by(x).expect("equal degrees"))
                    });
                    if fixed {
                        count += 1;
                    }
                }
                *entry = count;
            }
        }
        Ok(marks)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Number of conjugacy classes of subgroups.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Subgroup] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> &Subgroup {
        &self.reps[c]
    }

    pub fn normalizers(&self) -> &[Subgroup] {
        &self.normalizers
    }

    /// Conjugacy class sizes, aligned with `reps`.
    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// Total number of subgroups found by the enumeration.
    pub fn total_subgroups(&self) -> u64 {
        self.total_subgroups
    }

    pub fn marks(&self) -> &[Vec<u64>] {
        &self.marks
    }

    /// Index of the trivial class.
    pub fn trivial_class(&self) -> usize {
        0
    }

    /// Index of the class of the whole group.
    pub fn whole_class(&self) -> usize {
        self.reps.len() - 1
    }

    /// Left-coset transversal of `U_c`, cached per class.
    pub fn transversals(&self) -> &[Vec<Permutation>] {
        self.transversals.get_or_init(|| {
            self.reps
                .iter()
                .map(|u| left_transversal(&self.group, u).expect("reps are subgroups"))
                .collect()
        })
    }

    /// Finds the class conjugate to `u` along with a conjugator `γ`
    /// satisfying `γ^{-1} u γ = U_c`. Classes are filtered by order and the
    /// first match wins.
    pub fn class_of(&self, u: &Subgroup) -> Result<(usize, Permutation)> {
        if u.parent() != &self.group {
            return Err(Error::NotASubgroup);
        }
        for (c, rep) in self.reps.iter().enumerate() {
            if rep.order() != u.order() {
                continue;
            }
            if let Some(gamma) = conjugator(&self.group, u, rep)? {
                return Ok((c, gamma));
            }
        }
        Err(Error::NotASubgroup)
    }
}

impl fmt::Debug for SubgroupClassTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupClassTable")
            .field("group_order", &self.group.order())
            .field("classes", &self.reps.len())
            .finish()
    }
}

/// Table of Burnside marks of `g` (also available on
/// [`SubgroupClassTable`]).
pub fn table_of_marks(g: &PermGroup) -> Result<Vec<Vec<u64>>> {
    Ok(SubgroupClassTable::new(g)?.marks().to_vec())
}
