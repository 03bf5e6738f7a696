//! Permutations, functions on `S_n`, finite abelian groups and their
//! characters, and transitive abelian subgroups of `S_n`.

mod abelian;
mod functions;
mod perm;
mod subgroups;

pub use abelian::{abelian_groups_of_order, FiniteAbelianGroup, GroupElement};
pub use functions::{e_sigma_product_check, FunctionOnSn};
pub use perm::{factorial, Permutation};
pub use subgroups::{
    closure, conjugacy_key, regularity_report, transitive_abelian_subgroups, SubgroupMode, TransitiveAbelianClass,
    BRUTE_FORCE_MAX_DEGREE, CONJUGACY_KEY_MAX_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("invalid group descriptor {0:?} (expected e.g. Z4xZ2)")]
    Descriptor(String),
    #[error("degree must be positive, got {0}")]
    Degree(usize),
    #[error("{what} is limited to n <= {max} (got n = {n}); {hint}")]
    CostGuard { what: String, n: usize, max: usize, hint: String },
}
