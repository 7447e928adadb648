//! The skeletal coproduct completion: finite left Γ-sets as multiplicity
//! tuples over the subgroup classes, morphisms between them, wreath-type
//! automorphisms, coequalizers of automorphisms with their colifts, and
//! products via the table of marks.
//!
//! The coequalizer of a family of automorphisms is computed per class and
//! per orbit of the permutations the automorphisms induce on copy indices.
//! For one orbit with base `b`, transversal words evaluated in the
//! automorphisms give the accumulated normalizer components `μ(i)` along
//! the paths `b → i`, and Schreier words give generators of the glue
//! subgroup `V = ⟨U_c, schreier components⟩`. The orbit contributes one
//! copy of the class of `V`, with projection component `μ(i)^{-1}·γ` where
//! `γ` conjugates `V` to its canonical class representative.

use std::fmt;

use crate::coeq::{CoeqCategory, CoeqMorphism};
use crate::error::{Error, Result};
use crate::grp::Subgroup;
use crate::perm::{orbit_with_words, GroupElement, Permutation, Word};

/// An object of the completion: a multiplicity per subgroup class. The
/// all-zero tuple is the initial object.
#[derive(Clone, PartialEq, Eq)]
pub struct GObject {
    category: CoeqCategory,
    multiplicities: Vec<usize>,
}

impl GObject {
    pub fn new(category: CoeqCategory, multiplicities: Vec<usize>) -> Result<Self> {
        if multiplicities.len() != category.len() {
            return Err(Error::CategoryMismatch);
        }
        Ok(GObject { category, multiplicities })
    }

    pub fn zero(category: CoeqCategory) -> Self {
        let l = category.len();
        GObject { category, multiplicities: vec![0; l] }
    }

    /// One copy of the transitive Γ-set of class `c`.
    pub fn transitive(category: CoeqCategory, c: usize) -> Result<Self> {
        if c >= category.len() {
            return Err(Error::ObjectMismatch);
        }
        let mut m = vec![0; category.len()];
        m[c] = 1;
        Ok(GObject { category, multiplicities: m })
    }

    pub fn category(&self) -> &CoeqCategory {
        &self.category
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn total_copies(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 0)
    }

    /// Cofactors in canonical order: class ascending, copy ascending.
    pub fn cofactors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .flat_map(|(c, &m)| (0..m).map(move |i| (c, i)))
    }

    /// Componentwise sum with coproduct injections.
    pub fn coproduct(&self, other: &GObject) -> Result<(GObject, GMorphism, GMorphism)> {
        if self.category != other.category {
            return Err(Error::CategoryMismatch);
        }
        let mults: Vec<usize> = self
            .multiplicities
            .iter()
            .zip(&other.multiplicities)
            .map(|(a, b)| a + b)
            .collect();
        let sum = GObject { category: self.category.clone(), multiplicities: mults };
        let inj1 = GMorphism::build(self.clone(), sum.clone(), |c, i, cat| {
            Ok((i, cat.identity_morphism(c)?))
        })?;
        let off = &self.multiplicities;
        let inj2 = GMorphism::build(other.clone(), sum.clone(), |c, i, cat| {
            Ok((off[c] + i, cat.identity_morphism(c)?))
        })?;
        Ok((sum, inj1, inj2))
    }

    /// The fixed-point count vector: entry `d` is the number of points of
    /// this Γ-set fixed by `U_d`.
    pub fn mark_vector(&self) -> Vec<u64> {
        let marks = self.category.table().marks();
        let l = self.category.len();
        let mut v = vec![0u64; l];
        for (c, &m) in self.multiplicities.iter().enumerate() {
            for d in 0..l {
                v[d] += m as u64 * marks[c][d];
            }
        }
        v
    }

    /// The product object, recovered from the pointwise product of mark
    /// vectors by integer back-substitution against the triangular marks
    /// matrix.
    pub fn product_via_marks(&self, other: &GObject) -> Result<GObject> {
        if self.category != other.category {
            return Err(Error::CategoryMismatch);
        }
        let va = self.mark_vector();
        let vb = other.mark_vector();
        let v: Vec<u64> = va.iter().zip(&vb).map(|(a, b)| a * b).collect();
        let marks = self.category.table().marks();
        let l = self.category.len();
        let mut mult = vec![0usize; l];
        for d in (0..l).rev() {
            let mut rest: i128 = v[d] as i128;
            for c in d + 1..l {
                rest -= mult[c] as i128 * marks[c][d] as i128;
            }
            let diag = marks[d][d] as i128;
            if rest < 0 || rest % diag != 0 {
                return Err(Error::MarksSolveFailed(d));
            }
            mult[d] = (rest / diag) as usize;
        }
        GObject::new(self.category.clone(), mult)
    }
}

impl fmt::Debug for GObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GObject{:?}", self.multiplicities)
    }
}

/// Where one source cofactor goes: the target copy within the class of the
/// carried morphism's target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    to_copy: usize,
    morphism: CoeqMorphism,
}

impl Assignment {
    pub fn new(to_copy: usize, morphism: CoeqMorphism) -> Self {
        Assignment { to_copy, morphism }
    }

    pub fn to_class(&self) -> usize {
        self.morphism.target()
    }

    pub fn to_copy(&self) -> usize {
        self.to_copy
    }

    pub fn morphism(&self) -> &CoeqMorphism {
        &self.morphism
    }
}

/// A morphism of the completion: per source cofactor a target cofactor and
/// a morphism of transitive Γ-sets.
#[derive(Clone, PartialEq, Eq)]
pub struct GMorphism {
    source: GObject,
    target: GObject,
    // indexed by [class][copy]
    assignments: Vec<Vec<Assignment>>,
}

impl GMorphism {
    pub fn new(source: GObject, target: GObject, assignments: Vec<Vec<Assignment>>) -> Result<Self> {
        if source.category != target.category {
            return Err(Error::CategoryMismatch);
        }
        if assignments.len() != source.multiplicities.len() {
            return Err(Error::ObjectMismatch);
        }
        for (c, per_copy) in assignments.iter().enumerate() {
            if per_copy.len() != source.multiplicities[c] {
                return Err(Error::ObjectMismatch);
            }
            for a in per_copy {
                if a.morphism.source() != c {
                    return Err(Error::ObjectMismatch);
                }
                let d = a.morphism.target();
                if a.to_copy >= target.multiplicities[d] {
                    return Err(Error::ObjectMismatch);
                }
            }
        }
        Ok(GMorphism { source, target, assignments })
    }

    fn build<F>(source: GObject, target: GObject, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, &CoeqCategory) -> Result<(usize, CoeqMorphism)>,
    {
        let cat = source.category.clone();
        let mut assignments = Vec::with_capacity(source.multiplicities.len());
        for (c, &m) in source.multiplicities.iter().enumerate() {
            let mut per_copy = Vec::with_capacity(m);
            for i in 0..m {
                let (to_copy, morphism) = f(c, i, &cat)?;
                per_copy.push(Assignment { to_copy, morphism });
            }
            assignments.push(per_copy);
        }
        GMorphism::new(source, target, assignments)
    }

    pub fn identity(object: &GObject) -> Result<Self> {
        GMorphism::build(object.clone(), object.clone(), |c, i, cat| {
            Ok((i, cat.identity_morphism(c)?))
        })
    }

    pub fn source(&self) -> &GObject {
        &self.source
    }

    pub fn target(&self) -> &GObject {
        &self.target
    }

    pub fn assignment(&self, class: usize, copy: usize) -> &Assignment {
        &self.assignments[class][copy]
    }

    pub fn assignments(&self) -> &[Vec<Assignment>] {
        &self.assignments
    }

    /// Componentwise composition with an index chase, left to right.
    pub fn compose(&self, other: &GMorphism) -> Result<GMorphism> {
        if self.target != other.source {
            return Err(Error::ObjectMismatch);
        }
        let cat = &self.source.category;
        GMorphism::build(self.source.clone(), other.target.clone(), |c, i, _| {
            let first = &self.assignments[c][i];
            let second = &other.assignments[first.to_class()][first.to_copy];
            let morphism = cat.compose(&first.morphism, &second.morphism)?;
            Ok((second.to_copy, morphism))
        })
    }

    /// Whether every target cofactor is hit. Since every morphism of
    /// transitive Γ-sets is epi, this is exactly being an epimorphism.
    pub fn is_epi(&self) -> bool {
        let mut hit: Vec<Vec<bool>> = self
            .target
            .multiplicities
            .iter()
            .map(|&m| vec![false; m])
            .collect();
        for per_copy in &self.assignments {
            for a in per_copy {
                hit[a.to_class()][a.to_copy] = true;
            }
        }
        hit.iter().all(|v| v.iter().all(|&b| b))
    }
}

impl fmt::Debug for GMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GMorphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("assignments", &self.assignments)
            .finish()
    }
}

/// The data of one class block of a wreath-type automorphism: a normalizer
/// element per copy and a permutation of the copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathBlock {
    nus: Vec<Permutation>,
    sigma: Permutation,
}

impl WreathBlock {
    pub fn new(nus: Vec<Permutation>, sigma: Permutation) -> Self {
        WreathBlock { nus, sigma }
    }

    pub fn nus(&self) -> &[Permutation] {
        &self.nus
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }
}

/// An automorphism of a [`GObject`]: per class a wreath element
/// `((ν_1..ν_m), σ)` with every `ν` normalizing the class representative.
/// Cofactors stay in their class. Components are stored as canonical coset
/// representatives so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct WreathAutomorphism {
    object: GObject,
    blocks: Vec<WreathBlock>,
}

impl WreathAutomorphism {
    pub fn new(object: GObject, blocks: Vec<WreathBlock>) -> Result<Self> {
        if blocks.len() != object.multiplicities.len() {
            return Err(Error::ObjectMismatch);
        }
        let cat = &object.category;
        let group = cat.group();
        let mut canonical = Vec::with_capacity(blocks.len());
        for (c, block) in blocks.iter().enumerate() {
            let m = object.multiplicities[c];
            if block.nus.len() != m || block.sigma.degree() != m {
                return Err(Error::ObjectMismatch);
            }
            let rep = cat.table().rep(c);
            let mut nus = Vec::with_capacity(m);
            for nu in &block.nus {
                if !group.contains(nu) {
                    return Err(Error::NotAMember);
                }
                if !normalizes(nu, rep) {
                    return Err(Error::NotNormalizing);
                }
                nus.push(canonical_coset_rep(nu, rep));
            }
            canonical.push(WreathBlock { nus, sigma: block.sigma.clone() });
        }
        Ok(WreathAutomorphism { object, blocks: canonical })
    }

    pub fn identity(object: &GObject) -> Self {
        let gdeg = object.category.group().degree();
        let blocks = object
            .multiplicities
            .iter()
            .map(|&m| WreathBlock {
                nus: vec![Permutation::identity(gdeg); m],
                sigma: Permutation::identity(m),
            })
            .collect();
        WreathAutomorphism { object: object.clone(), blocks }
    }

    pub fn object(&self) -> &GObject {
        &self.object
    }

    pub fn blocks(&self) -> &[WreathBlock] {
        &self.blocks
    }

    pub fn block(&self, c: usize) -> &WreathBlock {
        &self.blocks[c]
    }

    /// The composition law `(ν,σ)(ν',σ') = ((ν_i · ν'_{i·σ})_i, σσ')`,
    /// applied per class.
    pub fn compose(&self, other: &WreathAutomorphism) -> Result<WreathAutomorphism> {
        if self.object != other.object {
            return Err(Error::ObjectMismatch);
        }
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            blocks.push(compose_blocks(a, b)?);
        }
        WreathAutomorphism::new(self.object.clone(), blocks)
    }

    pub fn inverse(&self) -> Result<WreathAutomorphism> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for block in &self.blocks {
            blocks.push(invert_block(block));
        }
        WreathAutomorphism::new(self.object.clone(), blocks)
    }

    /// The same automorphism as a general morphism: copy `i` of class `c`
    /// goes to copy `i·σ_c` via `ν_{c,i}`.
    pub fn as_gmorphism(&self) -> Result<GMorphism> {
        GMorphism::build(self.object.clone(), self.object.clone(), |c, i, cat| {
            let block = &self.blocks[c];
            Ok((
                block.sigma.image_of(i),
                cat.morphism(c, c, block.nus[i].clone())?,
            ))
        })
    }
}

impl fmt::Debug for WreathAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WreathAutomorphism")
            .field("object", &self.object)
            .field("blocks", &self.blocks)
            .finish()
    }
}

fn normalizes(nu: &Permutation, rep: &Subgroup) -> bool {
    rep.generators()
        .iter()
        .all(|u| rep.contains(&u.conjugate_by(nu).expect("equal degrees")))
}

fn canonical_coset_rep(nu: &Permutation, rep: &Subgroup) -> Permutation {
    let mut best = nu.compose(&rep.elements()[0]).expect("equal degrees");
    for u in &rep.elements()[1..] {
        let cand = nu.compose(u).expect("equal degrees");
        if cand < best {
            best = cand;
        }
    }
    best
}

fn compose_blocks(a: &WreathBlock, b: &WreathBlock) -> Result<WreathBlock> {
    let m = a.sigma.degree();
    let mut nus = Vec::with_capacity(m);
    for i in 0..m {
        nus.push(a.nus[i].compose(&b.nus[a.sigma.image_of(i)])?);
    }
    Ok(WreathBlock { nus, sigma: a.sigma.compose(&b.sigma)? })
}

fn invert_block(block: &WreathBlock) -> WreathBlock {
    let m = block.sigma.degree();
    let sigma_inv = block.sigma.inverse();
    let mut nus = Vec::with_capacity(m);
    for j in 0..m {
        nus.push(block.nus[sigma_inv.image_of(j)].inverse());
    }
    WreathBlock { nus, sigma: sigma_inv }
}

// words in the automorphisms are evaluated blockwise without
// canonicalization; components feed subgroup generation where coset
// representatives are irrelevant
impl GroupElement for WreathBlock {
    fn compose(&self, other: &Self) -> Result<Self> {
        compose_blocks(self, other)
    }

    fn inverse(&self) -> Self {
        invert_block(self)
    }
}

/// Per-orbit bookkeeping of a computed coequalizer, enough to build
/// colifts: the source class and base copy of the orbit, the output
/// cofactor it produced, and the conjugator taking the glue subgroup to
/// its canonical class representative.
#[derive(Clone, Debug)]
pub struct CoequalizerOrbit {
    source_class: usize,
    base_copy: usize,
    target_class: usize,
    target_copy: usize,
    conjugator: Permutation,
}

impl CoequalizerOrbit {
    pub fn source_class(&self) -> usize {
        self.source_class
    }

    pub fn base_copy(&self) -> usize {
        self.base_copy
    }

    pub fn target_class(&self) -> usize {
        self.target_class
    }

    pub fn target_copy(&self) -> usize {
        self.target_copy
    }

    pub fn conjugator(&self) -> &Permutation {
        &self.conjugator
    }
}

/// A coequalizer of automorphisms together with the data needed for its
/// universal property.
#[derive(Clone, Debug)]
pub struct Coequalizer {
    object: GObject,
    projection: GMorphism,
    autos: Vec<WreathAutomorphism>,
    orbits: Vec<CoequalizerOrbit>,
}

impl Coequalizer {
    pub fn object(&self) -> &GObject {
        &self.object
    }

    pub fn projection(&self) -> &GMorphism {
        &self.projection
    }

    pub fn autos(&self) -> &[WreathAutomorphism] {
        &self.autos
    }

    pub fn orbits(&self) -> &[CoequalizerOrbit] {
        &self.orbits
    }
}

/// Coequalizer of the family `{id} ∪ autos` of automorphisms of `omega`.
///
/// Deterministic: classes are processed in ascending order, orbits by their
/// minimal copy index, and output copies are numbered in processing order.
pub fn coequalizer_of_automorphisms(
    omega: &GObject,
    autos: &[WreathAutomorphism],
) -> Result<Coequalizer> {
    for a in autos {
        if a.object() != omega {
            return Err(Error::ObjectMismatch);
        }
    }
    let cat = omega.category().clone();
    let group = cat.group();
    let gdeg = group.degree();
    let l = cat.len();

    let mut out_mults = vec![0usize; l];
    let mut orbits: Vec<CoequalizerOrbit> = Vec::new();
    // per source cofactor: (orbit index, projection element)
    let mut pending: Vec<Vec<Option<(usize, Permutation)>>> =
        omega.multiplicities().iter().map(|&m| vec![None; m]).collect();

    for (c, &m) in omega.multiplicities().iter().enumerate() {
        if m == 0 {
            continue;
        }
        let rep = cat.table().rep(c);
        let raw_blocks: Vec<WreathBlock> = autos.iter().map(|a| a.block(c).clone()).collect();
        let sigmas: Vec<Permutation> = raw_blocks.iter().map(|b| b.sigma.clone()).collect();
        let block_id = WreathBlock {
            nus: vec![Permutation::identity(gdeg); m],
            sigma: Permutation::identity(m),
        };

        let mut seen = vec![false; m];
        for b in 0..m {
            if seen[b] {
                continue;
            }
            // transversal and Schreier data of the orbit of b; with no
            // automorphisms every orbit is a singleton with no relations
            let (orbit_points, trans_words, schreier_words) = if autos.is_empty() {
                (vec![b], vec![(b, Word::empty())], Vec::new())
            } else {
                let ow = orbit_with_words(&sigmas, b)?;
                let trans = ow
                    .orbit()
                    .iter()
                    .map(|&p| (p, ow.transversal_word(p).expect("orbit point").clone()))
                    .collect();
                (ow.orbit().to_vec(), trans, ow.schreier_words().to_vec())
            };
            for &p in &orbit_points {
                seen[p] = true;
            }

            // V = ⟨U_c, base components of the evaluated Schreier words⟩
            let mut vgens: Vec<Permutation> = rep.generators().to_vec();
            for sw in &schreier_words {
                let blk = sw.evaluate(&raw_blocks, block_id.clone())?;
                vgens.push(blk.nus[b].clone());
            }
            let v = Subgroup::new(group, vgens)?;
            let (d, gamma) = cat.table().class_of(&v)?;

            let j = out_mults[d];
            out_mults[d] += 1;
            let orbit_index = orbits.len();
            orbits.push(CoequalizerOrbit {
                source_class: c,
                base_copy: b,
                target_class: d,
                target_copy: j,
                conjugator: gamma.clone(),
            });

            for (p, tw) in &trans_words {
                let blk = tw.evaluate(&raw_blocks, block_id.clone())?;
                // accumulated component from cofactor b to cofactor p
                let mu = blk.nus[b].clone();
                let element = mu.inverse().compose(&gamma)?;
                pending[c][*p] = Some((orbit_index, element));
            }
        }
    }

    let object = GObject::new(cat.clone(), out_mults)?;
    let mut assignments = Vec::with_capacity(l);
    for (c, per_copy) in pending.into_iter().enumerate() {
        let mut row = Vec::with_capacity(per_copy.len());
        for slot in per_copy {
            let (orbit_index, element) = slot.expect("every cofactor lies in an orbit");
            let o = &orbits[orbit_index];
            row.push(Assignment {
                to_copy: o.target_copy,
                morphism: cat.morphism(c, o.target_class, element)?,
            });
        }
        assignments.push(row);
    }
    let projection = GMorphism::new(omega.clone(), object.clone(), assignments)?;

    Ok(Coequalizer {
        object,
        projection,
        autos: autos.to_vec(),
        orbits,
    })
}

/// The universal morphism out of a coequalizer: for `μ: Ω → Θ` that
/// coequalizes the same automorphisms, the unique `u` with `π · u = μ`.
pub fn colift_along_coequalizer(coeq: &Coequalizer, mu: &GMorphism) -> Result<GMorphism> {
    if mu.source() != coeq.projection.source() {
        return Err(Error::ObjectMismatch);
    }
    for a in &coeq.autos {
        if &a.as_gmorphism()?.compose(mu)? != mu {
            return Err(Error::NotCoequalizing);
        }
    }
    let cat = mu.source().category().clone();
    let mut assignments: Vec<Vec<Option<Assignment>>> = coeq
        .object
        .multiplicities()
        .iter()
        .map(|&m| vec![None; m])
        .collect();
    for o in &coeq.orbits {
        let at_base = mu.assignment(o.source_class, o.base_copy);
        let element = o.conjugator.inverse().compose(at_base.morphism().element())?;
        assignments[o.target_class][o.target_copy] = Some(Assignment {
            to_copy: at_base.to_copy(),
            morphism: cat.morphism(o.target_class, at_base.to_class(), element)?,
        });
    }
    let assignments: Vec<Vec<Assignment>> = assignments
        .into_iter()
        .map(|row| row.into_iter().map(|a| a.expect("every output cofactor comes from an orbit")).collect())
        .collect();
    GMorphism::new(coeq.object.clone(), mu.target().clone(), assignments)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    fn cat_s3() -> CoeqCategory {
        CoeqCategory::new(&PermGroup::symmetric(3)).unwrap()
    }

    fn obj(cat: &CoeqCategory, mults: &[usize]) -> GObject {
        GObject::new(cat.clone(), mults.to_vec()).unwrap()
    }

    #[test]
    fn coproduct_is_componentwise_sum() {
        let cat = cat_s3();
        let a = obj(&cat, &[1, 0, 0, 0]);
        let b = obj(&cat, &[0, 2, 0, 0]);
        let (sum, inj1, inj2) = a.coproduct(&b).unwrap();
        assert_eq!(sum.multiplicities(), &[1, 2, 0, 0]);

        let zero = GObject::zero(cat.clone());
        let (same, _, _) = a.coproduct(&zero).unwrap();
        assert_eq!(same, a);

        // injections are jointly epimorphic: every target cofactor is hit
        let mut hit = [vec![false; 1], vec![false; 2], vec![], vec![]];
        for (c, per) in inj1.assignments().iter().enumerate() {
            for a in per {
                hit[c][a.to_copy()] = true;
            }
        }
        for (c, per) in inj2.assignments().iter().enumerate() {
            for a in per {
                hit[c][a.to_copy()] = true;
            }
        }
        assert!(hit.iter().flatten().all(|&b| b));
    }

    #[test]
    fn gmorphism_identity_laws() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 1, 0, 0]);
        let id = GMorphism::identity(&a).unwrap();
        assert_eq!(id.compose(&id).unwrap(), id);
        // f · id = f for a nontrivial f into the terminal class
        let t = obj(&cat, &[0, 0, 0, 1]);
        let f = GMorphism::build(a.clone(), t.clone(), |c, _i, cat| {
            Ok((0, cat.morphism(c, 3, cat.group().identity())?))
        })
        .unwrap();
        let id_t = GMorphism::identity(&t).unwrap();
        assert_eq!(f.compose(&id_t).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
    }

    fn wreath(
        object: &GObject,
        class: usize,
        nus: &[Permutation],
        sigma: Permutation,
    ) -> WreathAutomorphism {
        let gdeg = object.category().group().degree();
        let mut blocks: Vec<WreathBlock> = object
            .multiplicities()
            .iter()
            .map(|&m| WreathBlock::new(vec![Permutation::identity(gdeg); m], Permutation::identity(m)))
            .collect();
        blocks[class] = WreathBlock::new(nus.to_vec(), sigma);
        WreathAutomorphism::new(object.clone(), blocks).unwrap()
    }

    #[test]
    fn wreath_composition_agrees_with_gmorphism_composition() {
        let cat = cat_s3();
        let a = obj(&cat, &[3, 0, 0, 0]);
        let s3 = PermGroup::symmetric(3);
        let g1 = s3.generators()[0].clone();
        let g2 = s3.generators()[1].clone();
        let w1 = wreath(
            &a,
            0,
            &[g1.clone(), g2.clone(), s3.identity()],
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        );
        let w2 = wreath(
            &a,
            0,
            &[g2.clone(), g2.clone(), g1.clone()],
            Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
        );
        let by_law = w1.compose(&w2).unwrap();
        let by_chase = w1
            .as_gmorphism()
            .unwrap()
            .compose(&w2.as_gmorphism().unwrap())
            .unwrap();
        assert_eq!(by_law.as_gmorphism().unwrap(), by_chase);
    }

    #[test]
    fn wreath_inverse_gives_identity() {
        let cat = cat_s3();
        let a = obj(&cat, &[0, 2, 0, 0]);
        // normalizer of the C2 rep is itself, so nus must lie in it
        let rep = cat.table().rep(1).clone();
        let nu = rep.elements()[1].clone();
        let w = wreath(&a, 1, &[nu.clone(), nu], Permutation::from_cycles(2, &[&[0, 1]]).unwrap());
        let winv = w.inverse().unwrap();
        let prod = w.compose(&winv).unwrap();
        assert_eq!(prod, WreathAutomorphism::identity(&a));
    }

    #[test]
    fn wreath_rejects_non_normalizing_components() {
        let cat = cat_s3();
        let a = obj(&cat, &[0, 1, 0, 0]);
        let s3 = PermGroup::symmetric(3);
        // a 3-cycle does not normalize the C2 representative
        let bad = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let blocks = vec![
            WreathBlock::new(vec![], Permutation::identity(0)),
            WreathBlock::new(vec![bad], Permutation::identity(1)),
            WreathBlock::new(vec![], Permutation::identity(0)),
            WreathBlock::new(vec![], Permutation::identity(0)),
        ];
        assert_eq!(
            WreathAutomorphism::new(a, blocks).err(),
            Some(Error::NotNormalizing)
        );
        let _ = s3;
    }

    #[test]
    fn coequalizer_of_no_automorphisms_is_the_object() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 1, 0, 0]);
        let coeq = coequalizer_of_automorphisms(&a, &[]).unwrap();
        assert_eq!(coeq.object(), &a);
        assert_eq!(coeq.projection(), &GMorphism::identity(&a).unwrap());
    }

    #[test]
    fn coequalizer_glues_free_copy_by_transposition_action() {
        // coequalizing x ↦ x·(0 1) on the free S3-set identifies
        // x ~ x(0 1), leaving the cosets of a C2
        let cat = cat_s3();
        let a = obj(&cat, &[1, 0, 0, 0]);
        let nu = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let w = wreath(&a, 0, &[nu], Permutation::identity(1));
        let coeq = coequalizer_of_automorphisms(&a, std::slice::from_ref(&w)).unwrap();
        assert_eq!(coeq.object().multiplicities(), &[0, 1, 0, 0]);
        // π coequalizes
        let pi = coeq.projection();
        assert_eq!(&w.as_gmorphism().unwrap().compose(pi).unwrap(), pi);
        assert!(pi.is_epi());
    }

    #[test]
    fn coequalizer_glues_two_free_copies_by_swap() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 0, 0, 0]);
        let id3 = PermGroup::symmetric(3).identity();
        let w = wreath(
            &a,
            0,
            &[id3.clone(), id3.clone()],
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
        );
        let coeq = coequalizer_of_automorphisms(&a, std::slice::from_ref(&w)).unwrap();
        assert_eq!(coeq.object().multiplicities(), &[1, 0, 0, 0]);
        // both projection components are identity morphisms
        for i in 0..2 {
            let a = coeq.projection().assignment(0, i);
            assert!(a.morphism().element().is_identity());
            assert_eq!(a.to_copy(), 0);
        }
        let pi = coeq.projection();
        assert_eq!(&w.as_gmorphism().unwrap().compose(pi).unwrap(), pi);
    }

    #[test]
    fn coequalizer_on_self_normalizing_class_keeps_the_class() {
        // the C2 class of S3 is self-normalizing: any family of
        // automorphisms over it coequalizes to the same class with
        // identity projection elements
        let cat = cat_s3();
        let a = obj(&cat, &[0, 3, 0, 0]);
        let rep = cat.table().rep(1).clone();
        assert_eq!(cat.table().normalizers()[1].order(), rep.order());
        let nu = rep.elements()[1].clone();
        let w = wreath(
            &a,
            1,
            &[nu.clone(), rep.elements()[0].clone(), nu],
            Permutation::from_cycles(3, &[&[0, 2, 1]]).unwrap(),
        );
        let coeq = coequalizer_of_automorphisms(&a, &[w]).unwrap();
        assert_eq!(coeq.object().multiplicities(), &[0, 1, 0, 0]);
        for i in 0..3 {
            assert!(coeq
                .projection()
                .assignment(1, i)
                .morphism()
                .element()
                .is_identity());
        }
    }

    #[test]
    fn colift_of_projection_along_itself_is_identity() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 0, 0, 0]);
        let nu = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let w = wreath(
            &a,
            0,
            &[nu.clone(), nu.inverse()],
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
        );
        let coeq = coequalizer_of_automorphisms(&a, &[w]).unwrap();
        let u = colift_along_coequalizer(&coeq, coeq.projection()).unwrap();
        assert_eq!(u, GMorphism::identity(coeq.object()).unwrap());
    }

    #[test]
    fn colift_into_terminal_object() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 0, 0, 0]);
        let term = obj(&cat, &[0, 0, 0, 1]);
        let nu = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let w = wreath(
            &a,
            0,
            &[nu.clone(), nu],
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
        );
        let coeq = coequalizer_of_automorphisms(&a, &[w]).unwrap();
        let mu = GMorphism::build(a.clone(), term.clone(), |c, _i, cat| {
            Ok((0, cat.morphism(c, 3, cat.group().identity())?))
        })
        .unwrap();
        let u = colift_along_coequalizer(&coeq, &mu).unwrap();
        assert_eq!(coeq.projection().compose(&u).unwrap(), mu);
    }

    #[test]
    fn colift_rejects_non_coequalizing_morphisms() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 0, 0, 0]);
        let id3 = PermGroup::symmetric(3).identity();
        let w = wreath(
            &a,
            0,
            &[id3.clone(), id3],
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
        );
        let coeq = coequalizer_of_automorphisms(&a, &[w]).unwrap();
        // a morphism separating the two glued copies cannot coequalize
        let sep = GMorphism::build(a.clone(), a.clone(), |c, i, cat| {
            let e = if i == 0 {
                cat.group().identity()
            } else {
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()
            };
            Ok((i, cat.morphism(c, c, e)?))
        })
        .unwrap();
        assert_eq!(
            colift_along_coequalizer(&coeq, &sep).err(),
            Some(Error::NotCoequalizing)
        );
    }

    #[test]
    fn order_of_automorphisms_does_not_change_the_coequalizer_object() {
        let cat = cat_s3();
        let a = obj(&cat, &[2, 0, 0, 0]);
        let nu = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let w1 = wreath(&a, 0, &[nu.clone(), nu.clone()], Permutation::identity(2));
        let w2 = wreath(
            &a,
            0,
            &[PermGroup::symmetric(3).identity(), PermGroup::symmetric(3).identity()],
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
        );
        let c12 = coequalizer_of_automorphisms(&a, &[w1.clone(), w2.clone()]).unwrap();
        let c21 = coequalizer_of_automorphisms(&a, &[w2, w1]).unwrap();
        assert_eq!(c12.object(), c21.object());
        // projection components are path-independent: different transversal
        // words differ by stabilizer elements absorbed into the glue class
        assert_eq!(c12.projection(), c21.projection());
    }

    #[test]
    fn marks_product_terminal_unit() {
        let cat = cat_s3();
        let term = obj(&cat, &[0, 0, 0, 1]);
        let a = obj(&cat, &[2, 1, 1, 0]);
        assert_eq!(term.product_via_marks(&a).unwrap(), a);
        assert_eq!(a.product_via_marks(&term).unwrap(), a);
    }

    #[test]
    fn marks_product_c2_by_c2() {
        // Γ/C2 × Γ/C2 = Γ/C2 ⊔ Γ/1 over S3:
        // (3,1,0,0) ⊙ (3,1,0,0) = (9,1,0,0) = (6,0,0,0) + (3,1,0,0)
        let cat = cat_s3();
        let c2 = obj(&cat, &[0, 1, 0, 0]);
        assert_eq!(c2.mark_vector(), vec![3, 1, 0, 0]);
        let p = c2.product_via_marks(&c2).unwrap();
        assert_eq!(p.multiplicities(), &[1, 1, 0, 0]);
        // re-multiplying the recovered multiplicities gives the product
        // of the mark vectors back
        assert_eq!(p.mark_vector(), vec![9, 1, 0, 0]);
    }

    #[test]
    fn marks_product_free_times_transitive() {
        // Γ/1 × Γ/U = (Γ/1)^[Γ:U]
        let cat = cat_s3();
        let free = obj(&cat, &[1, 0, 0, 0]);
        for c in 0..cat.len() {
            let t = GObject::transitive(cat.clone(), c).unwrap();
            let p = free.product_via_marks(&t).unwrap();
            let index = (cat.group().order() / cat.table().rep(c).order()) as usize;
            let mut expected = vec![0; cat.len()];
            expected[0] = index;
            assert_eq!(p.multiplicities(), &expected[..]);
        }
    }

    #[test]
    fn marks_product_is_commutative() {
        let cat = cat_s3();
        let a = obj(&cat, &[1, 2, 0, 1]);
        let b = obj(&cat, &[0, 1, 1, 0]);
        assert_eq!(
            a.product_via_marks(&b).unwrap(),
            b.product_via_marks(&a).unwrap()
        );
    }
}
