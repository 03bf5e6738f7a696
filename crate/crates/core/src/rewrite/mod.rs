//! Rewriting modulo a two-sided ideal of the free algebra.
//!
//! A [`RewriteSystem`] holds oriented relations `lhs → rhs` (every word of
//! `rhs` is smaller than `lhs`). Reduction gives normal forms; [`complete`]
//! runs degree-truncated critical-pair completion so that, up to the cap,
//! normal forms are canonical coset representatives.
//!
//! [`complete`]: RewriteSystem::complete

mod completion;
mod file;
mod system;

pub use completion::CompletionResult;
pub use file::{parse_presentation, PresentationFile};
pub use system::{CompletionStatus, Reduction, RewriteRule, RewriteSystem};

use crate::ncalg::AlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("degree cap {cap} is below the largest rule degree {max_degree}")]
    CapTooSmall { cap: usize, max_degree: usize },
    #[error("relations and system use different alphabets")]
    AlphabetMismatch,
    #[error("filtration up to degree {requested} needs completion up to degree {required}, system is {status}")]
    InsufficientCompletion { requested: usize, required: usize, status: String },
    #[error("presentation file line {line}: {reason}")]
    File { line: usize, reason: String },
    #[error(transparent)]
    Alg(#[from] AlgError),
}
