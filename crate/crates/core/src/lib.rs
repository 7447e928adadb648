//! Bisets of finite groups, built as a categorical tower over permutation
//! group algorithms.
//!
//! The layers, bottom to top:
//!
//! - [`perm`]: permutations, words, orbits with transversal words and
//!   stabilizer chains.
//! - [`grp`]: subgroup lattice machinery — conjugacy classes of subgroups,
//!   normalizers, table of marks, cosets, double cosets, quotients and
//!   direct products.
//! - [`coeq`]: the skeletal category of transitive left Γ-sets; objects are
//!   subgroup classes, morphisms are group elements with a conjugation
//!   constraint.
//! - [`gfinset`]: the coproduct completion — finite Γ-sets as multiplicity
//!   tuples, wreath-type automorphisms, coequalizers of automorphisms and
//!   colifts, products via the table of marks.
//! - [`biset`]: the biset category — action pairs, Kleisli composition,
//!   subgroup ↔ action-pair conversions, elementary bisets, the
//!   Goursat-style decomposition and the Mackey right-hand side.
//! - [`oracle`]: brute-force reference semantics on explicit sets with two
//!   commuting actions.
//! - [`json`]: wire formats used by the CLI and for interchange.

pub mod biset;
pub mod coeq;
pub mod error;
pub mod gfinset;
pub mod grp;
pub mod json;
pub mod oracle;
pub mod perm;

pub use biset::{
    elementary_biset, goursat_bouc, mackey_rhs, ActionPair, ElementaryBiset, GoursatData,
    GoursatDecomposition,
};
pub use coeq::{CoeqCategory, CoeqMorphism};
pub use error::{Error, Result};
pub use gfinset::{
    coequalizer_of_automorphisms, colift_along_coequalizer, Assignment, Coequalizer, GMorphism,
    GObject, WreathAutomorphism, WreathBlock,
};
pub use grp::{
    all_subgroups, canonical_conjugacy_key, conjugator, direct_product, double_coset_reps,
    left_transversal, normalizer, quotient_group, table_of_marks, DirectProduct, GroupHom,
    Quotient, Subgroup, SubgroupClassTable,
};
pub use oracle::{naive_compose, ExplicitBiset};
pub use perm::{
    orbit_with_words, GroupElement, OrbitWords, PermGroup, Permutation, StabilizerChain, Word,
};
