//! The biset category of finite groups.
//!
//! A biset `G → H` is stored as an action pair: a finite left H-set Ω
//! (a [`GObject`] over H) together with one automorphism of Ω per
//! designated generator of G, subject to the assignment extending to a
//! group homomorphism `G → Aut(Ω)`. Composition is Kleisli composition:
//! the second factor is lifted along the coequalizer completion of its
//! source group and post-composed blockwise.
//!
//! Transitive bisets correspond to subgroups `D ≤ H × G` up to conjugacy;
//! the conversions in both directions, the five elementary bisets, the
//! Goursat-style decomposition and the Mackey right-hand side all live
//! here. Equality of bisets is isomorphism, checked through the subgroup
//! correspondence.

use std::collections::HashMap;
use std::fmt;

use crate::coeq::{CoeqCategory, CoeqMorphism};
use crate::error::{Error, Result};
use crate::gfinset::{
    coequalizer_of_automorphisms, colift_along_coequalizer, Coequalizer, GMorphism, GObject,
    WreathAutomorphism, WreathBlock,
};
use crate::grp::{
    direct_product, double_coset_reps, left_transversal, quotient_group, DirectProduct, GroupHom,
    Quotient, Subgroup,
};
use crate::perm::{orbit_with_words, PermGroup, Permutation};

/// A biset `G → H` as an action pair: an object of H-sets plus one
/// automorphism per designated generator of G. Validated on construction
/// by walking the Cayley graph of G; the full table `g ↦ χ(g)` is cached.
#[derive(Clone)]
pub struct ActionPair {
    source: PermGroup,
    object: GObject,
    autos: Vec<WreathAutomorphism>,
    table: HashMap<Permutation, WreathAutomorphism>,
}

impl ActionPair {
    /// Validates the shape and the homomorphism property of the assignment
    /// `g_a ↦ autos[a]`.
    pub fn new(source: PermGroup, object: GObject, autos: Vec<WreathAutomorphism>) -> Result<Self> {
        if autos.len() != source.generators().len() {
            return Err(Error::InvalidBiset(format!(
                "{} generators but {} automorphisms",
                source.generators().len(),
                autos.len()
            )));
        }
        for a in &autos {
            if a.object() != &object {
                return Err(Error::ObjectMismatch);
            }
        }
        // Cayley-BFS: accumulate automorphisms along generator paths; any
        // element reached twice must receive equal automorphisms.
        let mut table: HashMap<Permutation, WreathAutomorphism> = HashMap::new();
        let id = source.identity();
        let id_auto = WreathAutomorphism::identity(&object);
        table.insert(id.clone(), id_auto.clone());
        let mut queue = vec![(id, id_auto)];
        while let Some((x, ax)) = queue.pop() {
            for (g, w) in source.generators().iter().zip(&autos) {
                let x2 = x.compose(g)?;
                let ax2 = ax.compose(w)?;
                match table.get(&x2) {
                    Some(existing) => {
                        if existing != &ax2 {
                            return Err(Error::NotAHomomorphism);
                        }
                    }
                    None => {
                        table.insert(x2.clone(), ax2.clone());
                        queue.push((x2, ax2));
                    }
                }
            }
        }
        Ok(ActionPair { source, object, autos, table })
    }

    /// The identity biset of `g`: one free copy with each generator acting
    /// by right multiplication.
    pub fn identity(g: &PermGroup) -> Result<Self> {
        let category = CoeqCategory::new(g)?;
        Self::identity_in(g, &category)
    }

    /// Identity biset over an already computed category of `g`.
    pub fn identity_in(g: &PermGroup, category: &CoeqCategory) -> Result<Self> {
        if category.group() != g {
            return Err(Error::GroupMismatch);
        }
        let object = GObject::transitive(category.clone(), category.trivial_class())?;
        let mut autos = Vec::with_capacity(g.generators().len());
        for gen in g.generators() {
            let mut blocks: Vec<WreathBlock> = (0..category.len())
                .map(|_| WreathBlock::new(vec![], Permutation::identity(0)))
                .collect();
            blocks[category.trivial_class()] =
                WreathBlock::new(vec![gen.clone()], Permutation::identity(1));
            autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(g.clone(), object, autos)
    }

    /// The empty biset (initial object) between two groups.
    pub fn empty(source: &PermGroup, target_category: &CoeqCategory) -> Result<Self> {
        let object = GObject::zero(target_category.clone());
        let autos = vec![WreathAutomorphism::identity(&object); source.generators().len()];
        ActionPair::new(source.clone(), object, autos)
    }

    pub fn source_group(&self) -> &PermGroup {
        &self.source
    }

    pub fn target_group(&self) -> &PermGroup {
        self.object.category().group()
    }

    pub fn category(&self) -> &CoeqCategory {
        self.object.category()
    }

    pub fn object(&self) -> &GObject {
        &self.object
    }

    pub fn autos(&self) -> &[WreathAutomorphism] {
        &self.autos
    }

    /// The automorphism `χ(g)` for any `g` in the source group.
    pub fn chi(&self, g: &Permutation) -> Result<&WreathAutomorphism> {
        self.table.get(g).ok_or(Error::NotAMember)
    }

    /// Coproduct of two bisets between the same groups: objects add, copy
    /// indices of the second summand are shifted.
    pub fn coproduct(&self, other: &ActionPair) -> Result<ActionPair> {
        if self.source != other.source {
            return Err(Error::GroupMismatch);
        }
        if self.category() != other.category() {
            return Err(Error::GroupMismatch);
        }
        let (object, _, _) = self.object.coproduct(&other.object)?;
        let l = self.category().len();
        let mut autos = Vec::with_capacity(self.autos.len());
        for (wa, wb) in self.autos.iter().zip(&other.autos) {
            let mut blocks = Vec::with_capacity(l);
            for c in 0..l {
                let a = wa.block(c);
                let b = wb.block(c);
                let ma = a.sigma().degree();
                let mut nus = a.nus().to_vec();
                nus.extend_from_slice(b.nus());
                let mut sigma = Vec::with_capacity(ma + b.sigma().degree());
                sigma.extend(a.sigma().images().iter().copied());
                sigma.extend(b.sigma().images().iter().map(|&j| j + ma));
                blocks.push(WreathBlock::new(nus, Permutation::new(sigma)?));
            }
            autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(self.source.clone(), object, autos)
    }

    /// Whether the biset is transitive: one class carries all copies and
    /// the induced copy permutations act transitively on them.
    pub fn is_transitive(&self) -> bool {
        let support: Vec<usize> = self
            .object
            .multiplicities()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(c, _)| c)
            .collect();
        if support.len() != 1 {
            return false;
        }
        let c = support[0];
        let m = self.object.multiplicities()[c];
        copy_orbit(&self.autos, c, m, 0).len() == m
    }

    /// Splits into transitive pieces: by class, then by orbits of the copy
    /// permutations; copy indices are relabeled to `0..`.
    pub fn decompose(&self) -> Result<Vec<ActionPair>> {
        let cat = self.category().clone();
        let mut pieces = Vec::new();
        for (c, &m) in self.object.multiplicities().iter().enumerate() {
            if m == 0 {
                continue;
            }
            let mut seen = vec![false; m];
            for start in 0..m {
                if seen[start] {
                    continue;
                }
                let orbit = copy_orbit(&self.autos, c, m, start);
                for &p in &orbit {
                    seen[p] = true;
                }
                let mut sorted = orbit.clone();
                sorted.sort_unstable();
                let pos: HashMap<usize, usize> =
                    sorted.iter().enumerate().map(|(k, &p)| (p, k)).collect();

                let object = GObject::new(cat.clone(), {
                    let mut v = vec![0; cat.len()];
                    v[c] = sorted.len();
                    v
                })?;
                let mut autos = Vec::with_capacity(self.autos.len());
                for w in &self.autos {
                    let block = w.block(c);
                    let nus: Vec<Permutation> =
                        sorted.iter().map(|&p| block.nus()[p].clone()).collect();
                    let sigma = Permutation::new(
                        sorted
                            .iter()
                            .map(|&p| pos[&block.sigma().image_of(p)])
                            .collect(),
                    )?;
                    let mut blocks: Vec<WreathBlock> = (0..cat.len())
                        .map(|_| WreathBlock::new(vec![], Permutation::identity(0)))
                        .collect();
                    blocks[c] = WreathBlock::new(nus, sigma);
                    autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
                }
                pieces.push(ActionPair::new(self.source.clone(), object, autos)?);
            }
        }
        Ok(pieces)
    }

    /// Lifts this biset `H → K` to the transitive H-set of class `c`: the
    /// coequalizer of `χ(u)` over the generators `u` of `U_c`.
    ///
    /// `source_category` must be a category over this biset's source group;
    /// it supplies the subgroup class representatives.
    pub fn lift_object(&self, c: usize, source_category: &CoeqCategory) -> Result<Coequalizer> {
        if source_category.group() != &self.source {
            return Err(Error::GroupMismatch);
        }
        let rep = source_category.table().rep(c);
        let mut autos = Vec::with_capacity(rep.generators().len());
        for u in rep.generators() {
            autos.push(self.chi(u)?.clone());
        }
        coequalizer_of_automorphisms(&self.object, &autos)
    }

    /// The lifted morphism `T_s → T_t` for `γ: s → t`, computed as the
    /// colift of `χ(γ) · ρ_t` along `ρ_s`.
    pub fn lift_morphism(
        &self,
        lifted_source: &Coequalizer,
        lifted_target: &Coequalizer,
        gamma: &CoeqMorphism,
    ) -> Result<GMorphism> {
        let mu = self
            .chi(gamma.element())?
            .as_gmorphism()?
            .compose(lifted_target.projection())?;
        colift_along_coequalizer(lifted_source, &mu)
    }

    /// Kleisli composition `self: G → H` then `other: H → K`.
    ///
    /// The middle group must carry an identical generator designation. The
    /// composite object is the coproduct over the cofactors `(c, i)` of
    /// this biset's object of the lifts `T_c`; each G-generator acts by
    /// sending block `(c, i)` to block `(c, i·σ)` via the lifted morphism
    /// of the wreath component.
    pub fn kleisli_compose(&self, other: &ActionPair) -> Result<ActionPair> {
        if self.target_group() != other.source_group() {
            return Err(Error::GroupMismatch);
        }
        let cat_mid = self.category();
        let cat_out = other.category().clone();
        let l_mid = cat_mid.len();
        let l_out = cat_out.len();

        let mut lifted: Vec<Option<Coequalizer>> = vec![None; l_mid];
        for (c, &m) in self.object.multiplicities().iter().enumerate() {
            if m > 0 {
                lifted[c] = Some(other.lift_object(c, cat_mid)?);
            }
        }

        // copy-index offsets per output class, block by block in cofactor
        // order of the middle object
        let mut out_mults = vec![0usize; l_out];
        let mut offsets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (c, i) in self.object.cofactors() {
            let t_c = lifted[c].as_ref().expect("lift computed").object();
            let base = out_mults.clone();
            for (slot, &extra) in out_mults.iter_mut().zip(t_c.multiplicities()) {
                *slot += extra;
            }
            offsets.insert((c, i), base);
        }
        let object = GObject::new(cat_out.clone(), out_mults)?;

        let gdeg_out = cat_out.group().degree();
        let mut autos = Vec::with_capacity(self.autos.len());
        for w in &self.autos {
            let mut nus: Vec<Vec<Permutation>> = object
                .multiplicities()
                .iter()
                .map(|&m| vec![Permutation::identity(gdeg_out); m])
                .collect();
            let mut sigma_images: Vec<Vec<usize>> = object
                .multiplicities()
                .iter()
                .map(|&m| (0..m).collect())
                .collect();
            for (c, i) in self.object.cofactors() {
                let coeq = lifted[c].as_ref().expect("lift computed");
                let block = w.block(c);
                let i2 = block.sigma().image_of(i);
                let kappa = cat_mid.morphism(c, c, block.nus()[i].clone())?;
                let lm = other.lift_morphism(coeq, coeq, &kappa)?;
                let src_base = &offsets[&(c, i)];
                let dst_base = &offsets[&(c, i2)];
                for (e, j) in coeq.object().cofactors() {
                    let a = lm.assignment(e, j);
                    if a.to_class() != e {
                        return Err(Error::InvalidBiset(
                            "lifted automorphism does not preserve classes".into(),
                        ));
                    }
                    let src = src_base[e] + j;
                    let dst = dst_base[e] + a.to_copy();
                    sigma_images[e][src] = dst;
                    nus[e][src] = a.morphism().element().clone();
                }
            }
            let blocks: Vec<WreathBlock> = nus
                .into_iter()
                .zip(sigma_images)
                .map(|(nu, si)| Ok(WreathBlock::new(nu, Permutation::new(si)?)))
                .collect::<Result<_>>()?;
            autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(self.source.clone(), object, autos)
    }

    /// The defining subgroup of a transitive biset: the stabilizer of the
    /// base coset of the first cofactor inside `H × G`.
    pub fn to_subgroup(&self) -> Result<(DirectProduct, Subgroup)> {
        let prod = direct_product(self.target_group(), &self.source);
        let d = self.to_subgroup_in(&prod)?;
        Ok((prod, d))
    }

    /// Like [`ActionPair::to_subgroup`] over a caller-supplied product.
    pub fn to_subgroup_in(&self, prod: &DirectProduct) -> Result<Subgroup> {
        if prod.left_group() != self.target_group() || prod.right_group() != &self.source {
            return Err(Error::GroupMismatch);
        }
        let support: Vec<usize> = self
            .object
            .multiplicities()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(c, _)| c)
            .collect();
        if support.len() != 1 {
            return Err(Error::NotTransitive);
        }
        let c = support[0];
        let m = self.object.multiplicities()[c];
        let rep = self.category().table().rep(c);
        let gdeg = self.target_group().degree();

        // generators of the stabilizer of copy 0 under g ↦ σ_g, by
        // Schreier's lemma applied to the copy action of G
        let stab_gens: Vec<Permutation> = if m == 1 {
            self.source.generators().to_vec()
        } else {
            let sigmas: Vec<Permutation> = self
                .autos
                .iter()
                .map(|w| w.block(c).sigma().clone())
                .collect();
            let ow = orbit_with_words(&sigmas, 0)?;
            if ow.orbit().len() != m {
                return Err(Error::NotTransitive);
            }
            ow.schreier_words()
                .iter()
                .map(|w| w.evaluate(self.source.generators(), self.source.identity()))
                .collect::<Result<_>>()?
        };

        let mut dgens: Vec<Permutation> = Vec::new();
        for u in rep.generators() {
            dgens.push(prod.embed_left(u)?);
        }
        for g in &stab_gens {
            let phi = self.pair_component(c, g, gdeg)?;
            dgens.push(prod.pair(&phi, g)?);
        }
        Subgroup::new(prod.group(), dgens)
    }

    // accumulated class-c component at copy 0 of χ(g), computed by
    // factoring g over the designated generators
    fn pair_component(&self, c: usize, g: &Permutation, gdeg: usize) -> Result<Permutation> {
        let word = self.source.factor_element(g)?;
        let m = self.object.multiplicities()[c];
        let blocks: Vec<WreathBlock> = self.autos.iter().map(|w| w.block(c).clone()).collect();
        let identity = WreathBlock::new(
            vec![Permutation::identity(gdeg); m],
            Permutation::identity(m),
        );
        let blk = word.evaluate(&blocks, identity)?;
        Ok(blk.nus()[0].clone())
    }

    /// The transitive biset of a subgroup `D ≤ H × G`, as an action pair
    /// over the left factor.
    pub fn from_subgroup(prod: &DirectProduct, d: &Subgroup) -> Result<ActionPair> {
        let category = CoeqCategory::new(prod.left_group())?;
        Self::from_subgroup_in(prod, d, &category)
    }

    /// Like [`ActionPair::from_subgroup`] over an already computed category
    /// of the left factor.
    pub fn from_subgroup_in(
        prod: &DirectProduct,
        d: &Subgroup,
        category: &CoeqCategory,
    ) -> Result<ActionPair> {
        if d.parent() != prod.group() {
            return Err(Error::NotASubgroup);
        }
        if category.group() != prod.left_group() {
            return Err(Error::GroupMismatch);
        }
        let h_group = prod.left_group();
        let g_group = prod.right_group();

        // projections and the left kernel of D
        let mut p2_els: Vec<Permutation> = Vec::new();
        let mut k1_els: Vec<Permutation> = Vec::new();
        // first element of D per right component, in element order
        let mut by_right: HashMap<Permutation, Permutation> = HashMap::new();
        for e in d.elements() {
            let right = prod.project_right(e)?;
            let left = prod.project_left(e)?;
            p2_els.push(right.clone());
            if right.is_identity() {
                k1_els.push(left.clone());
            }
            by_right.entry(right).or_insert(left);
        }
        p2_els.sort();
        p2_els.dedup();
        let p2 = Subgroup::from_elements(g_group, p2_els)?;
        let k1 = Subgroup::from_elements(h_group, k1_els)?;

        let (c, gamma) = category.table().class_of(&k1)?;
        // h with h K1 h^{-1} = U_c
        let h_conj = gamma.inverse();

        let transversal = left_transversal(g_group, &p2)?;
        let m = transversal.len();
        let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
        for (i, t) in transversal.iter().enumerate() {
            for s in p2.elements() {
                coset_of.insert(t.compose(s)?, i);
            }
        }

        let mut object_mults = vec![0; category.len()];
        object_mults[c] = m;
        let object = GObject::new(category.clone(), object_mults)?;

        let mut autos = Vec::with_capacity(g_group.generators().len());
        for gen in g_group.generators() {
            let gen_inv = gen.inverse();
            let mut sigma_images = vec![0usize; m];
            let mut nus = Vec::with_capacity(m);
            for (i, t) in transversal.iter().enumerate() {
                let moved = gen_inv.compose(t)?;
                let j = coset_of[&moved];
                sigma_images[i] = j;
                // g_{a,i} = t_j^{-1} g^{-1} t_i ∈ P2, lift to D and push
                // the left part through the class conjugation
                let g_ai = transversal[j].inverse().compose(&moved)?;
                let h_ai = by_right
                    .get(&g_ai)
                    .ok_or_else(|| Error::InvalidBiset("right projection misses P2".into()))?;
                let nu = h_conj
                    .compose(&h_ai.inverse())?
                    .compose(&h_conj.inverse())?;
                nus.push(nu);
            }
            let mut blocks: Vec<WreathBlock> = (0..category.len())
                .map(|_| WreathBlock::new(vec![], Permutation::identity(0)))
                .collect();
            blocks[c] = WreathBlock::new(nus, Permutation::new(sigma_images)?);
            autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(g_group.clone(), object, autos)
    }

    /// Biset isomorphism: both sides decompose into transitive pieces whose
    /// defining subgroups are compared as multisets of conjugacy classes in
    /// `H × G`.
    pub fn is_isomorphic_to(&self, other: &ActionPair) -> Result<bool> {
        if self.source != other.source || self.target_group() != other.target_group() {
            return Err(Error::GroupMismatch);
        }
        let prod = direct_product(self.target_group(), &self.source);
        let mut a = self.transitive_class_keys(&prod)?;
        let mut b = other.transitive_class_keys(&prod)?;
        a.sort();
        b.sort();
        Ok(a == b)
    }

    fn transitive_class_keys(&self, prod: &DirectProduct) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut keys = Vec::new();
        for piece in self.decompose()? {
            let d = piece.to_subgroup_in(prod)?;
            keys.push(crate::grp::canonical_conjugacy_key(prod.group(), &d)?);
        }
        Ok(keys)
    }
}

impl fmt::Debug for ActionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionPair")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target_group().order())
            .field("object", &self.object)
            .finish()
    }
}

fn copy_orbit(autos: &[WreathAutomorphism], c: usize, m: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; m];
    seen[start] = true;
    let mut orbit = vec![start];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        for w in autos {
            let q = w.block(c).sigma().image_of(p);
            if !seen[q] {
                seen[q] = true;
                orbit.push(q);
            }
        }
    }
    orbit
}

/// The five elementary biset kinds. `Ind`/`Res` take the subgroup inside
/// its parent; `Inf`/`Def` take the normal subgroup defining the quotient;
/// `Iso` takes a verified isomorphism.
#[derive(Clone, Debug)]
pub enum ElementaryBiset {
    Ind(Subgroup),
    Res(Subgroup),
    Inf(Subgroup),
    Def(Subgroup),
    Iso(GroupHom),
}

/// Builds an elementary transitive biset through its defining subgroup of
/// the appropriate direct product.
pub fn elementary_biset(kind: &ElementaryBiset) -> Result<ActionPair> {
    match kind {
        ElementaryBiset::Ind(u) => {
            // morphism U → Γ carried by Γ with right U-action
            let gamma = u.parent().clone();
            let u_group = u.as_group();
            let prod = direct_product(&gamma, &u_group);
            let dgens = u
                .generators()
                .iter()
                .map(|x| prod.pair(x, x))
                .collect::<Result<Vec<_>>>()?;
            let d = Subgroup::new(prod.group(), dgens)?;
            ActionPair::from_subgroup(&prod, &d)
        }
        ElementaryBiset::Res(u) => {
            // morphism Γ → U carried by Γ with left U-action
            let gamma = u.parent().clone();
            let u_group = u.as_group();
            let prod = direct_product(&u_group, &gamma);
            let dgens = u
                .generators()
                .iter()
                .map(|x| prod.pair(x, x))
                .collect::<Result<Vec<_>>>()?;
            let d = Subgroup::new(prod.group(), dgens)?;
            ActionPair::from_subgroup(&prod, &d)
        }
        ElementaryBiset::Inf(n) => {
            // morphism Γ/N → Γ
            let gamma = n.parent().clone();
            let q = quotient_group(&gamma, n)?;
            let prod = direct_product(&gamma, q.group());
            let dgens = gamma
                .generators()
                .iter()
                .map(|x| prod.pair(x, q.projection().apply(x)?))
                .collect::<Result<Vec<_>>>()?;
            let d = Subgroup::new(prod.group(), dgens)?;
            ActionPair::from_subgroup(&prod, &d)
        }
        ElementaryBiset::Def(n) => {
            // morphism Γ → Γ/N
            let gamma = n.parent().clone();
            let q = quotient_group(&gamma, n)?;
            let prod = direct_product(q.group(), &gamma);
            let dgens = gamma
                .generators()
                .iter()
                .map(|x| prod.pair(q.projection().apply(x)?, x))
                .collect::<Result<Vec<_>>>()?;
            let d = Subgroup::new(prod.group(), dgens)?;
            ActionPair::from_subgroup(&prod, &d)
        }
        ElementaryBiset::Iso(phi) => {
            // morphism Γ' → Γ along φ: Γ' → Γ
            if !phi.is_isomorphism() {
                return Err(Error::NotAnIsomorphism);
            }
            let prod = direct_product(phi.target(), phi.source());
            let dgens = phi
                .source()
                .generators()
                .iter()
                .zip(phi.images())
                .map(|(g, h)| prod.pair(h, g))
                .collect::<Result<Vec<_>>>()?;
            let d = Subgroup::new(prod.group(), dgens)?;
            ActionPair::from_subgroup(&prod, &d)
        }
    }
}

/// Goursat data of a subgroup `D ≤ H × G`: the two projections, the two
/// kernels, their quotients, and the verified isomorphism between them.
#[derive(Clone, Debug)]
pub struct GoursatData {
    p1: Subgroup,
    k1: Subgroup,
    p2: Subgroup,
    k2: Subgroup,
    q1: Quotient,
    q2: Quotient,
    iso: GroupHom,
}

impl GoursatData {
    pub fn p1(&self) -> &Subgroup {
        &self.p1
    }

    pub fn k1(&self) -> &Subgroup {
        &self.k1
    }

    pub fn p2(&self) -> &Subgroup {
        &self.p2
    }

    pub fn k2(&self) -> &Subgroup {
        &self.k2
    }

    pub fn quotient_left(&self) -> &Quotient {
        &self.q1
    }

    pub fn quotient_right(&self) -> &Quotient {
        &self.q2
    }

    /// The isomorphism `P2/K2 → P1/K1`.
    pub fn iso(&self) -> &GroupHom {
        &self.iso
    }

    /// Recovers `D` as `{(h, g) ∈ P1 × P2 : h K1 = iso(g K2)}`, exactly.
    pub fn reconstruct(&self, prod: &DirectProduct) -> Result<Subgroup> {
        let mut els = Vec::new();
        for h in self.p1.elements() {
            let qh = self.q1.projection().apply(h)?;
            for g in self.p2.elements() {
                let qg = self.iso.apply(self.q2.projection().apply(g)?)?;
                if qh == qg {
                    els.push(prod.pair(h, g)?);
                }
            }
        }
        Subgroup::from_elements(prod.group(), els)
    }
}

/// A Goursat-style decomposition: the data plus the five elementary
/// factors, composable left to right into a biset isomorphic to the one
/// defined by `D`.
#[derive(Clone, Debug)]
pub struct GoursatDecomposition {
    data: GoursatData,
    factors: [ActionPair; 5],
}

impl GoursatDecomposition {
    pub fn data(&self) -> &GoursatData {
        &self.data
    }

    /// `[Res, Def, Iso, Inf, Ind]` in composition order.
    pub fn factors(&self) -> &[ActionPair; 5] {
        &self.factors
    }

    /// The Kleisli composite of the five factors.
    pub fn composite(&self) -> Result<ActionPair> {
        let mut acc = self.factors[0].clone();
        for f in &self.factors[1..] {
            acc = acc.kleisli_compose(f)?;
        }
        Ok(acc)
    }
}

/// Decomposes the transitive biset of `D ≤ H × G` into its five elementary
/// factors.
pub fn goursat_bouc(prod: &DirectProduct, d: &Subgroup) -> Result<GoursatDecomposition> {
    if d.parent() != prod.group() {
        return Err(Error::NotASubgroup);
    }
    let h_group = prod.left_group();
    let g_group = prod.right_group();

    let mut p1_els = Vec::new();
    let mut p2_els = Vec::new();
    let mut k1_els = Vec::new();
    let mut k2_els = Vec::new();
    for e in d.elements() {
        let left = prod.project_left(e)?;
        let right = prod.project_right(e)?;
        if right.is_identity() {
            k1_els.push(left.clone());
        }
        if left.is_identity() {
            k2_els.push(right.clone());
        }
        p1_els.push(left);
        p2_els.push(right);
    }
    p1_els.sort();
    p1_els.dedup();
    p2_els.sort();
    p2_els.dedup();
    let p1 = Subgroup::from_elements(h_group, p1_els)?;
    let p2 = Subgroup::from_elements(g_group, p2_els)?;

    let p1_group = p1.as_group();
    let p2_group = p2.as_group();
    let k1 = Subgroup::from_elements(&p1_group, k1_els)?;
    let k2 = Subgroup::from_elements(&p2_group, k2_els)?;
    let q1 = quotient_group(&p1_group, &k1)?;
    let q2 = quotient_group(&p2_group, &k2)?;

    // iso on the designated generators of Q2: pick any (h, g) ∈ D over g
    let mut by_right: HashMap<Permutation, Permutation> = HashMap::new();
    for e in d.elements() {
        by_right
            .entry(prod.project_right(e)?)
            .or_insert(prod.project_left(e)?);
    }
    let mut images = Vec::with_capacity(p2_group.generators().len());
    for g in p2_group.generators() {
        let h = by_right
            .get(g)
            .ok_or_else(|| Error::InvalidBiset("projection misses P2 generator".into()))?;
        images.push(q1.projection().apply(h)?.clone());
    }
    let iso = GroupHom::new(q2.group().clone(), q1.group().clone(), images)?;
    if !iso.is_isomorphism() {
        return Err(Error::NotAnIsomorphism);
    }

    let factors = [
        elementary_biset(&ElementaryBiset::Res(p2.clone()))?,
        elementary_biset(&ElementaryBiset::Def(k2.clone()))?,
        elementary_biset(&ElementaryBiset::Iso(iso.clone()))?,
        elementary_biset(&ElementaryBiset::Inf(k1.clone()))?,
        elementary_biset(&ElementaryBiset::Ind(p1.clone()))?,
    ];

    Ok(GoursatDecomposition {
        data: GoursatData { p1, k1, p2, k2, q1, q2, iso },
        factors,
    })
}

/// The right-hand side of the Mackey formula for `Res^Γ_V · Ind^Γ_U`: one
/// transitive (V,U)-biset per double coset `VxU`, each the composite
/// `Res^U_{V^x ∩ U}` then `Iso(conjugation by x)` then `Ind^V_{V ∩ ˣU}`.
pub fn mackey_rhs(gamma: &PermGroup, u: &Subgroup, v: &Subgroup) -> Result<Vec<ActionPair>> {
    if u.parent() != gamma || v.parent() != gamma {
        return Err(Error::NotASubgroup);
    }
    let u_group = u.as_group();
    let v_group = v.as_group();
    let mut summands = Vec::new();
    for x in double_coset_reps(v, gamma, u)? {
        // ˣU = xUx^{-1} and V^x = x^{-1}Vx
        let u_conj = u.conjugate_by(&x.inverse())?;
        let v_conj = v.conjugate_by(&x)?;
        let a = Subgroup::from_elements(
            &v_group,
            v.elements()
                .iter()
                .filter(|e| u_conj.contains(e))
                .cloned()
                .collect(),
        )?;
        let b = Subgroup::from_elements(
            &u_group,
            u.elements()
                .iter()
                .filter(|e| v_conj.contains(e))
                .cloned()
                .collect(),
        )?;
        let a_group = a.as_group();
        let b_group = b.as_group();
        // conjugation by x maps V^x ∩ U onto V ∩ ˣU
        let images = b_group
            .generators()
            .iter()
            .map(|g| g.conjugate_by(&x.inverse()))
            .collect::<Result<Vec<_>>>()?;
        let phi = GroupHom::new(b_group, a_group, images)?;

        let res = elementary_biset(&ElementaryBiset::Res(b))?;
        let iso = elementary_biset(&ElementaryBiset::Iso(phi))?;
        let ind = elementary_biset(&ElementaryBiset::Ind(a))?;
        summands.push(res.kleisli_compose(&iso)?.kleisli_compose(&ind)?);
    }
    Ok(summands)
}
