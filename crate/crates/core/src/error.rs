//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image list is not a permutation of 0..n")]
    InvalidPermutation,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("word exponent must be +1 or -1")]
    InvalidWordExponent,

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndexOutOfRange { index: usize, count: usize },

    #[error("orbit computation needs at least one generator")]
    EmptyGenerators,

    #[error("permutation is not a member of the group")]
    NotAMember,

    #[error("not a subgroup of the expected parent group")]
    NotASubgroup,

    #[error("element set is not closed under the group operations")]
    NotClosed,

    #[error("subgroup is not normal in its parent")]
    NotNormal,

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderBoundExceeded { order: u64, bound: u64 },

    #[error("generator images do not extend to a group homomorphism")]
    NotAHomomorphism,

    #[error("homomorphism is not an isomorphism")]
    NotAnIsomorphism,

    #[error("element does not preserve block structure of the direct product")]
    NotInProduct,

    #[error("conjugation constraint violated: conjugate of the source class is not inside the target class")]
    ConjugationConstraint,

    #[error("element does not normalize the subgroup class representative")]
    NotNormalizing,

    #[error("categories over different groups cannot be mixed")]
    CategoryMismatch,

    #[error("object mismatch: morphisms are not composable or not parallel as required")]
    ObjectMismatch,

    #[error("source and target groups do not match")]
    GroupMismatch,

    #[error("morphism does not coequalize the given automorphisms")]
    NotCoequalizing,

    #[error("action pair is not transitive")]
    NotTransitive,

    #[error("marks back-substitution failed at class {0}: no nonnegative integer solution")]
    MarksSolveFailed(usize),

    #[error("invalid biset data: {0}")]
    InvalidBiset(String),
}
