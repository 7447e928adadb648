//! Wire formats for interchange and the CLI.
//!
//! Permutations serialize as image lists and groups as
//! `{"degree": n, "generators": [[...], ...]}` (both directly on the
//! types). The structures here cover subgroup class tables, morphisms of
//! the completion, action pairs (with a `subgroup_of_product` shorthand
//! for transitive bisets) and explicit bisets.

use serde::{Deserialize, Serialize};

use crate::biset::ActionPair;
use crate::coeq::{CoeqCategory, CoeqMorphism};
use crate::error::{Error, Result};
use crate::gfinset::{Assignment, GMorphism, GObject, WreathAutomorphism, WreathBlock};
use crate::grp::{direct_product, Subgroup, SubgroupClassTable};
use crate::perm::{PermGroup, Permutation};

/// Class table export: generator arrays of the representatives and their
/// normalizers, plus the table of marks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassTableJson {
    pub reps: Vec<Vec<Permutation>>,
    pub normalizer_gens: Vec<Vec<Permutation>>,
    pub marks: Vec<Vec<u64>>,
}

impl From<&SubgroupClassTable> for ClassTableJson {
    fn from(t: &SubgroupClassTable) -> Self {
        ClassTableJson {
            reps: t.reps().iter().map(|u| u.generators().to_vec()).collect(),
            normalizer_gens: t
                .normalizers()
                .iter()
                .map(|u| u.generators().to_vec())
                .collect(),
            marks: t.marks().to_vec(),
        }
    }
}

/// Morphism of the skeletal category: `{"source": s, "target": t,
/// "element": image-list}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoeqMorphismJson {
    pub source: usize,
    pub target: usize,
    pub element: Permutation,
}

impl From<&CoeqMorphism> for CoeqMorphismJson {
    fn from(m: &CoeqMorphism) -> Self {
        CoeqMorphismJson {
            source: m.source(),
            target: m.target(),
            element: m.element().clone(),
        }
    }
}

impl CoeqMorphismJson {
    pub fn into_morphism(self, category: &CoeqCategory) -> Result<CoeqMorphism> {
        category.morphism(self.source, self.target, self.element)
    }
}

/// Object of the completion: `{"multiplicities": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GObjectJson {
    pub multiplicities: Vec<usize>,
}

impl From<&GObject> for GObjectJson {
    fn from(o: &GObject) -> Self {
        GObjectJson { multiplicities: o.multiplicities().to_vec() }
    }
}

impl GObjectJson {
    pub fn into_object(self, category: &CoeqCategory) -> Result<GObject> {
        GObject::new(category.clone(), self.multiplicities)
    }
}

/// One cofactor entry of a morphism of the completion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GMorphismEntryJson {
    pub class: usize,
    pub copy: usize,
    pub to_class: usize,
    pub to_copy: usize,
    pub element: Permutation,
}

/// Morphism of the completion: source and target multiplicities plus one
/// entry per source cofactor.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GMorphismJson {
    pub source_multiplicities: Vec<usize>,
    pub target_multiplicities: Vec<usize>,
    pub assignments: Vec<GMorphismEntryJson>,
}

impl From<&GMorphism> for GMorphismJson {
    fn from(m: &GMorphism) -> Self {
        let mut assignments = Vec::new();
        for (c, per_copy) in m.assignments().iter().enumerate() {
            for (i, a) in per_copy.iter().enumerate() {
                assignments.push(GMorphismEntryJson {
                    class: c,
                    copy: i,
                    to_class: a.to_class(),
                    to_copy: a.to_copy(),
                    element: a.morphism().element().clone(),
                });
            }
        }
        GMorphismJson {
            source_multiplicities: m.source().multiplicities().to_vec(),
            target_multiplicities: m.target().multiplicities().to_vec(),
            assignments,
        }
    }
}

impl GMorphismJson {
    pub fn into_morphism(self, category: &CoeqCategory) -> Result<GMorphism> {
        let source = GObject::new(category.clone(), self.source_multiplicities)?;
        let target = GObject::new(category.clone(), self.target_multiplicities)?;
        let mut table: Vec<Vec<Option<Assignment>>> = source
            .multiplicities()
            .iter()
            .map(|&m| vec![None; m])
            .collect();
        for e in self.assignments {
            if e.class >= table.len() || e.copy >= table[e.class].len() {
                return Err(Error::ObjectMismatch);
            }
            let morphism = category.morphism(e.class, e.to_class, e.element)?;
            table[e.class][e.copy] = Some(Assignment::new(e.to_copy, morphism));
        }
        let assignments: Vec<Vec<Assignment>> = table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or(Error::ObjectMismatch)
            })
            .collect::<Result<_>>()?;
        GMorphism::new(source, target, assignments)
    }
}

/// One wreath block: `{"nu": [image-lists], "sigma": image-list}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WreathBlockJson {
    pub nu: Vec<Permutation>,
    pub sigma: Permutation,
}

/// An action pair, either in full form (`multiplicities` + `autos`, one
/// outer entry per source generator, one inner entry per class) or as a
/// transitive biset through `subgroup_of_product` (generators of
/// `D ≤ H × G` over the juxtaposed domains).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionPairJson {
    pub source_group: PermGroup,
    pub target_group: PermGroup,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub autos: Option<Vec<Vec<WreathBlockJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup_of_product: Option<Vec<Permutation>>,
}

impl From<&ActionPair> for ActionPairJson {
    fn from(x: &ActionPair) -> Self {
        let autos = x
            .autos()
            .iter()
            .map(|w| {
                w.blocks()
                    .iter()
                    .map(|b| WreathBlockJson {
                        nu: b.nus().to_vec(),
                        sigma: b.sigma().clone(),
                    })
                    .collect()
            })
            .collect();
        ActionPairJson {
            source_group: x.source_group().clone(),
            target_group: x.target_group().clone(),
            multiplicities: Some(x.object().multiplicities().to_vec()),
            autos: Some(autos),
            subgroup_of_product: None,
        }
    }
}

impl ActionPairJson {
    pub fn into_pair(self) -> Result<ActionPair> {
        let source = self.source_group;
        let target = self.target_group;
        if let Some(gens) = self.subgroup_of_product {
            let prod = direct_product(&target, &source);
            let d = Subgroup::new(prod.group(), gens)?;
            return ActionPair::from_subgroup(&prod, &d);
        }
        let (mults, autos) = match (self.multiplicities, self.autos) {
            (Some(m), Some(a)) => (m, a),
            _ => {
                return Err(Error::InvalidBiset(
                    "need either multiplicities+autos or subgroup_of_product".into(),
                ))
            }
        };
        let category = CoeqCategory::new(&target)?;
        let object = GObject::new(category.clone(), mults)?;
        let mut wreaths = Vec::with_capacity(autos.len());
        for per_class in autos {
            if per_class.len() != category.len() {
                return Err(Error::InvalidBiset(
                    "one wreath block per subgroup class is required".into(),
                ));
            }
            let blocks: Vec<WreathBlock> = per_class
                .into_iter()
                .map(|b| WreathBlock::new(b.nu, b.sigma))
                .collect();
            wreaths.push(WreathAutomorphism::new(object.clone(), blocks)?);
        }
        ActionPair::new(source, object, wreaths)
    }
}

/// Explicit biset wire form: `{"size": N, "left": [...], "right": [...]}`.
/// The groups travel separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExplicitBisetJson {
    pub size: usize,
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
}

impl From<&crate::oracle::ExplicitBiset> for ExplicitBisetJson {
    fn from(b: &crate::oracle::ExplicitBiset) -> Self {
        ExplicitBisetJson {
            size: b.size(),
            left: b.left_images().to_vec(),
            right: b.right_images().to_vec(),
        }
    }
}

impl ExplicitBisetJson {
    pub fn into_biset(
        self,
        left_group: &PermGroup,
        right_group: &PermGroup,
    ) -> Result<crate::oracle::ExplicitBiset> {
        crate::oracle::ExplicitBiset::new(left_group, right_group, self.size, self.left, self.right)
    }
}

/// A subgroup of a direct product, as used by the decomposition CLI:
/// `{"left_group": …, "right_group": …, "generators": [image-lists]}` over
/// the juxtaposed domains.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductSubgroupJson {
    pub left_group: PermGroup,
    pub right_group: PermGroup,
    pub generators: Vec<Permutation>,
}

impl ProductSubgroupJson {
    pub fn into_parts(self) -> Result<(crate::grp::DirectProduct, Subgroup)> {
        let prod = direct_product(&self.left_group, &self.right_group);
        let d = Subgroup::new(prod.group(), self.generators)?;
        Ok((prod, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::conjugator;

    #[test]
    fn action_pair_roundtrip_full_form() {
        let g = PermGroup::symmetric(3);
        let x = ActionPair::identity(&g).unwrap();
        let wire = ActionPairJson::from(&x);
        let s = serde_json::to_string(&wire).unwrap();
        let back: ActionPairJson = serde_json::from_str(&s).unwrap();
        let y = back.into_pair().unwrap();
        assert_eq!(y.object(), x.object());
        assert_eq!(y.autos(), x.autos());
    }

    #[test]
    fn action_pair_from_subgroup_form() {
        let g = PermGroup::symmetric(3);
        let prod = direct_product(&g, &g);
        let diag: Vec<Permutation> = g
            .generators()
            .iter()
            .map(|h| prod.pair(h, h).unwrap())
            .collect();
        let wire = ActionPairJson {
            source_group: g.clone(),
            target_group: g.clone(),
            multiplicities: None,
            autos: None,
            subgroup_of_product: Some(diag),
        };
        let x = wire.into_pair().unwrap();
        let id = ActionPair::identity(&g).unwrap();
        assert!(x.is_isomorphic_to(&id).unwrap());
    }

    #[test]
    fn action_pair_rejects_incomplete_wire() {
        let g = PermGroup::cyclic(2);
        let wire = ActionPairJson {
            source_group: g.clone(),
            target_group: g,
            multiplicities: Some(vec![1, 0]),
            autos: None,
            subgroup_of_product: None,
        };
        assert!(matches!(wire.into_pair(), Err(Error::InvalidBiset(_))));
    }

    #[test]
    fn coeq_morphism_roundtrip() {
        let g = PermGroup::symmetric(3);
        let cat = CoeqCategory::new(&g).unwrap();
        let m = cat.morphism(0, 1, g.generators()[0].clone()).unwrap();
        let wire = CoeqMorphismJson::from(&m);
        let back = wire.into_morphism(&cat).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn gmorphism_roundtrip() {
        let g = PermGroup::symmetric(3);
        let cat = CoeqCategory::new(&g).unwrap();
        let a = GObject::new(cat.clone(), vec![2, 0, 0, 0]).unwrap();
        let id = GMorphism::identity(&a).unwrap();
        let wire = GMorphismJson::from(&id);
        let back = wire.into_morphism(&cat).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn explicit_biset_roundtrip() {
        let g = PermGroup::symmetric(3);
        let x = ActionPair::identity(&g).unwrap();
        let e = crate::oracle::ExplicitBiset::from_action_pair(&x).unwrap();
        let wire = ExplicitBisetJson::from(&e);
        let back = wire.into_biset(&g, &g).unwrap();
        assert!(e.is_isomorphic_to(&back).unwrap());
    }

    #[test]
    fn product_subgroup_wire() {
        let g = PermGroup::symmetric(3);
        let wire = ProductSubgroupJson {
            left_group: g.clone(),
            right_group: g.clone(),
            generators: vec![Permutation::identity(6)],
        };
        let (prod, d) = wire.into_parts().unwrap();
        assert!(d.is_trivial());
        assert!(conjugator(prod.group(), &d, &d).unwrap().is_some());
    }

    #[test]
    fn class_table_export_shape() {
        let t = SubgroupClassTable::new(&PermGroup::symmetric(3)).unwrap();
        let wire = ClassTableJson::from(&t);
        assert_eq!(wire.reps.len(), 4);
        assert_eq!(wire.marks[0], vec![6, 0, 0, 0]);
        let v = serde_json::to_value(&wire).unwrap();
        assert!(v.get("normalizer_gens").is_some());
    }
}
