//! Group gradings on the diagonal algebra `K^n`.

mod classify;
mod file;
mod freeprod;
mod grading;
mod orbit;

pub use classify::{classify_gradings, partitions, Classification, ClassifiedGrading, CLASSIFY_MAX_DEGREE};
pub use file::{parse_grading, render_grading};
pub use freeprod::{FreeProductPresentation, FreeWord};
pub use grading::{
    character_vectors, grading_from_partition, grading_from_regular_abelian, pointwise, verify_grading, Grading,
    LawWitness, Vector,
};
pub use orbit::{orbit_decompose, OrbitReport, RestrictedBlock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("{0}")]
    Shape(String),
    #[error("grading file: {0}")]
    Parse(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error("{what} is limited to n <= {max} (got n = {n})")]
    CostGuard { what: String, n: usize, max: usize },
}
