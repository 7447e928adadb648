//! The skeletal category of transitive left Γ-sets.
//!
//! Objects are indices into the canonical subgroup class table of Γ, the
//! object `c` standing for the coset space `Γ/U_c`. A morphism `s → t` is a
//! group element `γ` with `γ^{-1} U_s γ ⊆ U_t`, modeling the Γ-map
//! `x U_s ↦ x γ U_t`. Two parallel morphisms are equal iff their elements
//! lie in the same coset of `U_t`; morphisms store the minimal coset
//! representative eagerly so equality is a plain comparison.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::SubgroupClassTable;
use crate::perm::{PermGroup, Permutation};

/// The skeletal category of transitive left Γ-sets over a canonical
/// subgroup class table. Cheap to clone; two values over equal groups are
/// interchangeable.
#[derive(Clone)]
pub struct CoeqCategory {
    table: Arc<SubgroupClassTable>,
}

impl CoeqCategory {
    pub fn new(group: &PermGroup) -> Result<Self> {
        Ok(CoeqCategory {
            table: Arc::new(SubgroupClassTable::new(group)?),
        })
    }

    pub fn from_table(table: SubgroupClassTable) -> Self {
        CoeqCategory { table: Arc::new(table) }
    }

    pub fn group(&self) -> &PermGroup {
        self.table.group()
    }

    pub fn table(&self) -> &SubgroupClassTable {
        &self.table
    }

    /// Number of objects (= conjugacy classes of subgroups).
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The object corresponding to the trivial subgroup (the principal
    /// Γ-set).
    pub fn trivial_class(&self) -> usize {
        self.table.trivial_class()
    }

    /// The object corresponding to the whole group (the terminal one-point
    /// Γ-set).
    pub fn whole_class(&self) -> usize {
        self.table.whole_class()
    }

    /// Validates and canonicalizes a morphism `source → target` carried by
    /// `element`.
    pub fn morphism(&self, source: usize, target: usize, element: Permutation) -> Result<CoeqMorphism> {
        self.check_object(source)?;
        self.check_object(target)?;
        if !self.group().contains(&element) {
            return Err(Error::NotAMember);
        }
        let us = self.table.rep(source);
        let ut = self.table.rep(target);
        for u in us.generators() {
            if !ut.contains(&u.conjugate_by(&element)?) {
                return Err(Error::ConjugationConstraint);
            }
        }
        Ok(self.canonicalize(source, target, element))
    }

    /// Identity morphism on `c`.
    pub fn identity_morphism(&self, c: usize) -> Result<CoeqMorphism> {
        self.morphism(c, c, self.group().identity())
    }

    /// Composition `s → c → t`, left to right.
    pub fn compose(&self, f: &CoeqMorphism, g: &CoeqMorphism) -> Result<CoeqMorphism> {
        if f.target != g.source {
            return Err(Error::ObjectMismatch);
        }
        let element = f.element.compose(&g.element)?;
        // validity is inherited: conjugating U_s through f lands in U_c,
        // and through g inside U_t
        debug_assert!(self
            .table
            .rep(f.source)
            .generators()
            .iter()
            .all(|u| self
                .table
                .rep(g.target)
                .contains(&u.conjugate_by(&element).expect("equal degrees"))));
        Ok(self.canonicalize(f.source, g.target, element))
    }

    /// All distinct morphisms `s → t`.
    pub fn morphisms_between(&self, source: usize, target: usize) -> Result<Vec<CoeqMorphism>> {
        self.check_object(source)?;
        self.check_object(target)?;
        let mut out: Vec<CoeqMorphism> = Vec::new();
        for e in self.group().elements() {
            if let Ok(m) = self.morphism(source, target, e.clone()) {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    fn check_object(&self, c: usize) -> Result<()> {
        if c >= self.len() {
            return Err(Error::ObjectMismatch);
        }
        Ok(())
    }

    // minimal element of the coset element·U_t
    fn canonicalize(&self, source: usize, target: usize, element: Permutation) -> CoeqMorphism {
        let ut = self.table.rep(target);
        let mut best = element.compose(&ut.elements()[0]).expect("equal degrees");
        for u in &ut.elements()[1..] {
            let cand = element.compose(u).expect("equal degrees");
            if cand < best {
                best = cand;
            }
        }
        CoeqMorphism { source, target, element: best }
    }
}

impl PartialEq for CoeqCategory {
    fn eq(&self, other: &Self) -> bool {
        self.group() == other.group()
    }
}

impl Eq for CoeqCategory {}

impl fmt::Debug for CoeqCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoeqCategory")
            .field("group_order", &self.group().order())
            .field("objects", &self.len())
            .finish()
    }
}

/// A morphism in the skeletal category, stored with the canonical coset
/// representative of its element.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeqMorphism {
    source: usize,
    target: usize,
    element: Permutation,
}

impl CoeqMorphism {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Canonical coset representative.
    pub fn element(&self) -> &Permutation {
        &self.element
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }
}

impl fmt::Debug for CoeqMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> {}", self.source, self.element, self.target)
    }
}
