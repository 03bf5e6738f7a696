//! Quantum permutation algebras `A_s(n, K)` and their verifiers.

mod hopf;
mod identities;
mod matrix;
mod presentation;
mod symmetric;
mod wang;

pub use presentation::{
    ground_field, group_algebra_z2, magic_presentation, semi_magic_presentation, Family, HopfPresentation,
    LabelledRelation, PresentationKind, RelationCounts,
};

pub use hopf::{iterated_coproduct, verify_hopf_axioms};
pub use identities::{column_sum_identity, three_family_identity, TransposeIdentity};
pub use matrix::{check_magic, check_multiplicative, check_semi_magic, coaction_algebra_map_check, MatrixOverAlgebra};
pub use symmetric::{pi_n, pi_n_isomorphism_check, pi_n_relations_check};
pub use wang::{two_idempotents, wang_matrix, wang_witness};

use crate::rewrite::RewriteError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QpermError {
    #[error("unknown relation family {0:?} (expected row-orth, row-sum, col-orth or col-sum)")]
    UnknownFamily(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
