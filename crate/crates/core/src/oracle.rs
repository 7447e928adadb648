//! Brute-force reference semantics for bisets: explicit finite sets with a
//! left H-action and a commuting right G-action, naive composition as the
//! quotient by the diagonal middle action, and conversions to and from
//! action pairs.
//!
//! This module is the trusted slow path; nothing here is tuned for speed.

use std::collections::HashMap;
use std::fmt;

use crate::biset::ActionPair;
use crate::coeq::CoeqCategory;
use crate::error::{Error, Result};
use crate::gfinset::{GObject, WreathAutomorphism, WreathBlock};
use crate::grp::{
    canonical_conjugacy_key, direct_product, left_transversal, DirectProduct, Subgroup,
};
use crate::perm::{PermGroup, Permutation};

/// An explicit biset: `size` points, a verified left action of `left_group`
/// and a verified commuting right action of `right_group`, both stored as
/// generator images with the full element tables cached.
#[derive(Clone)]
pub struct ExplicitBiset {
    left_group: PermGroup,
    right_group: PermGroup,
    size: usize,
    left_images: Vec<Permutation>,
    right_images: Vec<Permutation>,
    left_table: HashMap<Permutation, Permutation>,
    right_table: HashMap<Permutation, Permutation>,
}

impl ExplicitBiset {
    /// Verifies both actions by Cayley-BFS and the commutation law on all
    /// generator pairs and points.
    pub fn new(
        left_group: &PermGroup,
        right_group: &PermGroup,
        size: usize,
        left_images: Vec<Permutation>,
        right_images: Vec<Permutation>,
    ) -> Result<Self> {
        for p in left_images.iter().chain(&right_images) {
            if p.degree() != size {
                return Err(Error::DegreeMismatch(size, p.degree()));
            }
        }
        let left_table = verify_action(left_group, &left_images, size, true)?;
        let right_table = verify_action(right_group, &right_images, size, false)?;
        for l in &left_images {
            for r in &right_images {
                if l.compose(r)? != r.compose(l)? {
                    return Err(Error::InvalidBiset(
                        "left and right actions do not commute".into(),
                    ));
                }
            }
        }
        Ok(ExplicitBiset {
            left_group: left_group.clone(),
            right_group: right_group.clone(),
            size,
            left_images,
            right_images,
            left_table,
            right_table,
        })
    }

    pub fn left_group(&self) -> &PermGroup {
        &self.left_group
    }

    pub fn right_group(&self) -> &PermGroup {
        &self.right_group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn left_images(&self) -> &[Permutation] {
        &self.left_images
    }

    pub fn right_images(&self) -> &[Permutation] {
        &self.right_images
    }

    /// The point `h · x`.
    pub fn act_left(&self, h: &Permutation, x: usize) -> Result<usize> {
        Ok(self.left_table.get(h).ok_or(Error::NotAMember)?.image_of(x))
    }

    /// The point `x · g`.
    pub fn act_right(&self, x: usize, g: &Permutation) -> Result<usize> {
        Ok(self.right_table.get(g).ok_or(Error::NotAMember)?.image_of(x))
    }

    /// The explicit biset of a subgroup `D ≤ H × G`: points are the cosets
    /// `zD`, `h` acts by left multiplication with `(h, 1)` and `g` by left
    /// multiplication with `(1, g)^{-1}`.
    pub fn from_product_subgroup(prod: &DirectProduct, d: &Subgroup) -> Result<Self> {
        if d.parent() != prod.group() {
            return Err(Error::NotASubgroup);
        }
        let transversal = left_transversal(prod.group(), d)?;
        let n = transversal.len();
        let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
        for (i, t) in transversal.iter().enumerate() {
            for s in d.elements() {
                coset_of.insert(t.compose(s)?, i);
            }
        }
        let act_by = |mover: &Permutation| -> Result<Permutation> {
            let mut images = vec![0usize; n];
            for (i, t) in transversal.iter().enumerate() {
                images[i] = coset_of[&mover.compose(t)?];
            }
            Permutation::new(images)
        };
        let mut left_images = Vec::new();
        for h in prod.left_group().generators() {
            left_images.push(act_by(&prod.embed_left(h)?)?);
        }
        let mut right_images = Vec::new();
        for g in prod.right_group().generators() {
            right_images.push(act_by(&prod.embed_right(g)?.inverse())?);
        }
        ExplicitBiset::new(prod.left_group(), prod.right_group(), n, left_images, right_images)
    }

    /// Realizes an action pair as an explicit biset: points are pairs of a
    /// cofactor and a left coset of its class representative; the right
    /// action of a generator sends `(c, i, xU_c)` to `(c, i·σ, x·ν_i U_c)`.
    pub fn from_action_pair(pair: &ActionPair) -> Result<Self> {
        let h_group = pair.target_group().clone();
        let g_group = pair.source_group().clone();
        let cat = pair.category();
        let table = cat.table();

        // per class: coset transversal and membership map
        let transversals = table.transversals();
        let mut coset_of: Vec<HashMap<Permutation, usize>> = Vec::with_capacity(cat.len());
        for (c, trans) in transversals.iter().enumerate() {
            let mut map = HashMap::new();
            for (j, t) in trans.iter().enumerate() {
                for s in table.rep(c).elements() {
                    map.insert(t.compose(s)?, j);
                }
            }
            coset_of.push(map);
        }

        // flat point index per (cofactor, coset)
        let mut offset: HashMap<(usize, usize), usize> = HashMap::new();
        let mut n = 0usize;
        for (c, i) in pair.object().cofactors() {
            offset.insert((c, i), n);
            n += transversals[c].len();
        }

        let mut left_images = Vec::new();
        for h in h_group.generators() {
            let mut images = vec![0usize; n];
            for (c, i) in pair.object().cofactors() {
                let base = offset[&(c, i)];
                for (j, t) in transversals[c].iter().enumerate() {
                    let moved = coset_of[c][&h.compose(t)?];
                    images[base + j] = base + moved;
                }
            }
            left_images.push(Permutation::new(images)?);
        }

        let mut right_images = Vec::new();
        for w in pair.autos() {
            let mut images = vec![0usize; n];
            for (c, i) in pair.object().cofactors() {
                let block = w.block(c);
                let i2 = block.sigma().image_of(i);
                let base = offset[&(c, i)];
                let base2 = offset[&(c, i2)];
                for (j, t) in transversals[c].iter().enumerate() {
                    let moved = coset_of[c][&t.compose(&block.nus()[i])?];
                    images[base + j] = base2 + moved;
                }
            }
            right_images.push(Permutation::new(images)?);
        }

        ExplicitBiset::new(&h_group, &g_group, n, left_images, right_images)
    }

    /// Reads an action pair back off the explicit set: H-orbits become
    /// cofactors, their point stabilizers pick the class, and the right
    /// generator actions give the copy permutations and normalizer
    /// components.
    pub fn to_action_pair(&self) -> Result<ActionPair> {
        let category = CoeqCategory::new(&self.left_group)?;
        self.to_action_pair_in(&category)
    }

    pub fn to_action_pair_in(&self, category: &CoeqCategory) -> Result<ActionPair> {
        if category.group() != &self.left_group {
            return Err(Error::GroupMismatch);
        }
        let h_group = &self.left_group;

        // H-orbits ordered by minimal point, with a transversal element
        // per point: carrier[p] · base = p
        let mut orbit_of = vec![usize::MAX; self.size];
        let mut orbits: Vec<OrbitData> = Vec::new();
        for start in 0..self.size {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut points = vec![start];
            let mut carrier: HashMap<usize, Permutation> = HashMap::new();
            carrier.insert(start, h_group.identity());
            orbit_of[start] = orbits.len();
            let mut head = 0;
            while head < points.len() {
                let p = points[head];
                head += 1;
                let tau = carrier[&p].clone();
                for hgen in h_group.generators() {
                    let q = self.act_left(hgen, p)?;
                    if orbit_of[q] == usize::MAX {
                        orbit_of[q] = orbits.len();
                        carrier.insert(q, hgen.compose(&tau)?);
                        points.push(q);
                    }
                }
            }
            // stabilizer of the base point, brute force over H
            let stab_els: Vec<Permutation> = h_group
                .elements()
                .iter()
                .filter(|h| self.act_left(h, start).expect("verified action") == start)
                .cloned()
                .collect();
            let stab = Subgroup::from_elements(h_group, stab_els)?;
            let (class, gamma) = category.table().class_of(&stab)?;
            orbits.push(OrbitData { base: start, class, kappa: gamma, carrier });
        }

        // copy indices per class in orbit order
        let mut mults = vec![0usize; category.len()];
        let mut copy_index = Vec::with_capacity(orbits.len());
        for o in &orbits {
            copy_index.push(mults[o.class]);
            mults[o.class] += 1;
        }
        let object = GObject::new(category.clone(), mults)?;

        let mut autos = Vec::with_capacity(self.right_images.len());
        for g in self.right_group.generators() {
            let mut per_class: Vec<(Vec<Permutation>, Vec<usize>)> = object
                .multiplicities()
                .iter()
                .map(|&m| (vec![h_group.identity(); m], (0..m).collect()))
                .collect();
            for (oi, o) in orbits.iter().enumerate() {
                let image_point = self.act_right(o.base, g)?;
                let o2 = &orbits[orbit_of[image_point]];
                if o2.class != o.class {
                    return Err(Error::InvalidBiset(
                        "right action moves an orbit across classes".into(),
                    ));
                }
                let tau = &o2.carrier[&image_point];
                // coordinate change: ν = κ^{-1} τ κ'
                let nu = o.kappa.inverse().compose(tau)?.compose(&o2.kappa)?;
                let (nus, sigma) = &mut per_class[o.class];
                nus[copy_index[oi]] = nu;
                sigma[copy_index[oi]] = copy_index[orbit_of[image_point]];
            }
            let blocks: Vec<WreathBlock> = per_class
                .into_iter()
                .map(|(nus, sigma)| Ok(WreathBlock::new(nus, Permutation::new(sigma)?)))
                .collect::<Result<_>>()?;
            autos.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(self.right_group.clone(), object, autos)
    }

    /// Isomorphism of explicit bisets: equal multisets of combined-orbit
    /// stabilizer classes in `H × G`.
    pub fn is_isomorphic_to(&self, other: &ExplicitBiset) -> Result<bool> {
        if self.left_group != other.left_group || self.right_group != other.right_group {
            return Err(Error::GroupMismatch);
        }
        if self.size != other.size {
            return Ok(false);
        }
        let prod = direct_product(&self.left_group, &self.right_group);
        let mut a = self.stabilizer_class_keys(&prod)?;
        let mut b = other.stabilizer_class_keys(&prod)?;
        a.sort();
        b.sort();
        Ok(a == b)
    }

    fn stabilizer_class_keys(&self, prod: &DirectProduct) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut seen = vec![false; self.size];
        let mut keys = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            // combined orbit under both actions
            let mut points = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < points.len() {
                let p = points[head];
                head += 1;
                for l in &self.left_images {
                    let q = l.image_of(p);
                    if !seen[q] {
                        seen[q] = true;
                        points.push(q);
                    }
                }
                for r in &self.right_images {
                    let q = r.image_of(p);
                    if !seen[q] {
                        seen[q] = true;
                        points.push(q);
                    }
                }
            }
            // stabilizer of the base under (h, g) · x = h x g^{-1}
            let mut stab_els = Vec::new();
            for h in self.left_group.elements() {
                for g in self.right_group.elements() {
                    let moved = self.act_left(h, self.act_right(start, &g.inverse())?)?;
                    if moved == start {
                        stab_els.push(prod.pair(h, g)?);
                    }
                }
            }
            let stab = Subgroup::from_elements(prod.group(), stab_els)?;
            keys.push(canonical_conjugacy_key(prod.group(), &stab)?);
        }
        Ok(keys)
    }
}

impl fmt::Debug for ExplicitBiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExplicitBiset")
            .field("size", &self.size)
            .field("left_order", &self.left_group.order())
            .field("right_order", &self.right_group.order())
            .finish()
    }
}

struct OrbitData {
    base: usize,
    class: usize,
    kappa: Permutation,
    carrier: HashMap<usize, Permutation>,
}

/// Cayley-BFS verification of a generator-image assignment into the
/// symmetric group on the points. Left actions accumulate on the left
/// (`table[x·g] = image(g) then table[x]`), right actions on the right.
fn verify_action(
    group: &PermGroup,
    images: &[Permutation],
    size: usize,
    left: bool,
) -> Result<HashMap<Permutation, Permutation>> {
    if images.len() != group.generators().len() {
        return Err(Error::NotAHomomorphism);
    }
    let mut table: HashMap<Permutation, Permutation> = HashMap::new();
    let id = group.identity();
    let id_act = Permutation::identity(size);
    table.insert(id.clone(), id_act.clone());
    let mut queue = vec![(id, id_act)];
    while let Some((x, px)) = queue.pop() {
        for (g, img) in group.generators().iter().zip(images) {
            let x2 = x.compose(g)?;
            let px2 = if left { img.compose(&px)? } else { px.compose(img)? };
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

/// Size-indexed union-find with deterministic orbit numbering.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // smaller root wins, keeping numbering order-independent
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Naive composition `Y ∘ X` for `Y: (K,H)` and `X: (H,G)`: the points are
/// the orbits of the diagonal H-action `h · (y, x) = (y·h^{-1}, h·x)` on
/// `Y × X`, with K acting through the first coordinate and G through the
/// second. Well-definedness of both induced actions is verified.
pub fn naive_compose(y: &ExplicitBiset, x: &ExplicitBiset) -> Result<ExplicitBiset> {
    if y.right_group != x.left_group {
        return Err(Error::GroupMismatch);
    }
    let ny = y.size;
    let nx = x.size;
    let n = ny * nx;
    let index = |a: usize, b: usize| a * nx + b;

    let mut uf = UnionFind::new(n);
    let h_group = &y.right_group;
    for h in h_group.generators() {
        let back = h.inverse();
        for a in 0..ny {
            let a2 = y.act_right(a, &back)?;
            for b in 0..nx {
                let b2 = x.act_left(h, b)?;
                uf.union(index(a, b), index(a2, b2));
            }
        }
    }

    // orbit numbering in first-seen order
    let mut orbit_number: HashMap<usize, usize> = HashMap::new();
    let mut orbit_index = vec![0usize; n];
    for (p, slot) in orbit_index.iter_mut().enumerate() {
        let root = uf.find(p);
        let next = orbit_number.len();
        *slot = *orbit_number.entry(root).or_insert(next);
    }
    let orbits = orbit_number.len();

    let induced = |mover: &dyn Fn(usize, usize) -> Result<(usize, usize)>| -> Result<Permutation> {
        let mut images = vec![usize::MAX; orbits];
        for a in 0..ny {
            for b in 0..nx {
                let (a2, b2) = mover(a, b)?;
                let from = orbit_index[index(a, b)];
                let to = orbit_index[index(a2, b2)];
                if images[from] == usize::MAX {
                    images[from] = to;
                } else if images[from] != to {
                    return Err(Error::InvalidBiset(
                        "induced action is not well defined on orbits".into(),
                    ));
                }
            }
        }
        Permutation::new(images)
    };

    let mut left_images = Vec::new();
    for k in y.left_group.generators() {
        left_images.push(induced(&|a, b| Ok((y.act_left(k, a)?, b)))?);
    }
    let mut right_images = Vec::new();
    for g in x.right_group.generators() {
        right_images.push(induced(&|a, b| Ok((a, x.act_right(b, g)?)))?);
    }

    ExplicitBiset::new(&y.left_group, &x.right_group, orbits, left_images, right_images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{all_subgroups, conjugator};

    fn s3() -> PermGroup {
        PermGroup::symmetric(3)
    }

    #[test]
    fn identity_biset_is_biregular() {
        let g = s3();
        let x = ActionPair::identity(&g).unwrap();
        let e = ExplicitBiset::from_action_pair(&x).unwrap();
        assert_eq!(e.size(), 6);
        // both actions are free
        for h in g.elements() {
            if !h.is_identity() {
                assert_ne!(e.act_left(h, 0).unwrap(), 0);
                assert_ne!(e.act_right(0, h).unwrap(), 0);
            }
        }
    }

    #[test]
    fn terminal_biset_is_a_point() {
        let g = s3();
        let prod = direct_product(&g, &g);
        let full = Subgroup::whole(prod.group());
        let x = ActionPair::from_subgroup(&prod, &full).unwrap();
        let e = ExplicitBiset::from_action_pair(&x).unwrap();
        assert_eq!(e.size(), 1);
    }

    #[test]
    fn sizes_sum_over_cofactors() {
        let g = s3();
        let x = ActionPair::identity(&g).unwrap();
        let xx = x.coproduct(&x).unwrap();
        let e = ExplicitBiset::from_action_pair(&xx).unwrap();
        assert_eq!(e.size(), 12);
    }

    #[test]
    fn compose_with_identity_gives_isomorphic_biset() {
        let g = s3();
        let id_pair = ActionPair::identity(&g).unwrap();
        let id_explicit = ExplicitBiset::from_action_pair(&id_pair).unwrap();
        let prod = direct_product(&g, &g);
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let d = Subgroup::new(prod.group(), vec![prod.pair(&t, &t).unwrap()]).unwrap();
        let x = ExplicitBiset::from_product_subgroup(&prod, &d).unwrap();
        let composed = naive_compose(&id_explicit, &x).unwrap();
        assert!(composed.is_isomorphic_to(&x).unwrap());
    }

    #[test]
    fn compose_with_empty_is_empty() {
        let g = s3();
        let id_pair = ActionPair::identity(&g).unwrap();
        let y = ExplicitBiset::from_action_pair(&id_pair).unwrap();
        let empty = ExplicitBiset::new(
            &g,
            &g,
            0,
            vec![Permutation::identity(0); 2],
            vec![Permutation::identity(0); 2],
        )
        .unwrap();
        let z = naive_compose(&y, &empty).unwrap();
        assert_eq!(z.size(), 0);
    }

    #[test]
    fn composite_size_of_free_biset() {
        // for free X the composite has |Y|·|X|/|H| points
        let g = s3();
        let id_pair = ActionPair::identity(&g).unwrap();
        let y = ExplicitBiset::from_action_pair(&id_pair).unwrap();
        let x = ExplicitBiset::from_action_pair(&id_pair).unwrap();
        let z = naive_compose(&y, &x).unwrap();
        assert_eq!(z.size(), 6 * 6 / 6);
    }

    #[test]
    fn roundtrip_over_all_subgroups_of_s3_c2() {
        let h = s3();
        let g = PermGroup::cyclic(2);
        let prod = direct_product(&h, &g);
        let cat = CoeqCategory::new(&h).unwrap();
        for d in all_subgroups(prod.group()).unwrap() {
            let e = ExplicitBiset::from_product_subgroup(&prod, &d).unwrap();
            let pair = e.to_action_pair_in(&cat).unwrap();
            let back = ExplicitBiset::from_action_pair(&pair).unwrap();
            assert!(e.is_isomorphic_to(&back).unwrap());
            // the recovered defining subgroup is conjugate to D
            let (p2, dd) = pair.to_subgroup().unwrap();
            assert!(conjugator(p2.group(), &dd, &d).unwrap().is_some());
        }
    }

    #[test]
    fn explicit_iso_reflexive_and_size_aware() {
        let g = s3();
        let id_pair = ActionPair::identity(&g).unwrap();
        let e = ExplicitBiset::from_action_pair(&id_pair).unwrap();
        assert!(e.is_isomorphic_to(&e).unwrap());
        let sum = id_pair.coproduct(&id_pair).unwrap();
        let bigger = ExplicitBiset::from_action_pair(&sum).unwrap();
        assert!(!e.is_isomorphic_to(&bigger).unwrap());
    }

    #[test]
    fn rejects_non_commuting_actions() {
        let c2 = PermGroup::cyclic(2);
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let r = ExplicitBiset::new(&c2, &c2, 3, vec![a], vec![b]);
        assert!(matches!(r, Err(Error::InvalidBiset(_))));
    }

    #[test]
    fn rejects_inconsistent_action_tables() {
        let c2 = PermGroup::cyclic(2);
        // an order-3 image of an involution cannot define a C2-action
        let bad = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let r = ExplicitBiset::new(&c2, &c2, 3, vec![bad], vec![Permutation::identity(3)]);
        assert_eq!(r.err(), Some(Error::NotAHomomorphism));
    }

    #[test]
    fn naive_compose_is_associative_up_to_isomorphism() {
        let g = s3();
        let prod = direct_product(&g, &g);
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let d = Subgroup::new(prod.group(), vec![prod.pair(&t, &t).unwrap()]).unwrap();
        let a = ExplicitBiset::from_product_subgroup(&prod, &d).unwrap();
        let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let d2 = Subgroup::new(prod.group(), vec![prod.pair(&c3, &c3).unwrap()]).unwrap();
        let b = ExplicitBiset::from_product_subgroup(&prod, &d2).unwrap();
        let id = ExplicitBiset::from_action_pair(&ActionPair::identity(&g).unwrap()).unwrap();

        let left = naive_compose(&naive_compose(&a, &b).unwrap(), &id).unwrap();
        let right = naive_compose(&a, &naive_compose(&b, &id).unwrap()).unwrap();
        assert!(left.is_isomorphic_to(&right).unwrap());
    }

    #[test]
    fn naive_compose_matches_kleisli_on_a_fixed_instance() {
        let g = s3();
        let prod = direct_product(&g, &g);
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let d = Subgroup::new(prod.group(), vec![prod.pair(&t, &t).unwrap()]).unwrap();
        let x = ActionPair::from_subgroup(&prod, &d).unwrap();
        let y = ActionPair::identity(&g).unwrap();

        let kleisli = x.kleisli_compose(&y).unwrap();
        let oracle = naive_compose(
            &ExplicitBiset::from_action_pair(&y).unwrap(),
            &ExplicitBiset::from_action_pair(&x).unwrap(),
        )
        .unwrap();
        let oracle_pair = oracle.to_action_pair().unwrap();
        assert!(kleisli.is_isomorphic_to(&oracle_pair).unwrap());
    }
}
