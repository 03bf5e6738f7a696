//! The free associative algebra `K⟨X⟩` over an exact coefficient field.
//!
//! [`NCPoly`] is the single container for every algebra element in the
//! crate: generators of presentations, relation polynomials, images of
//! structure maps and elements of tensor powers (through
//! [`TensorEncoding`]). Words are compared degree-first, then
//! lexicographically on generator indices.

mod alphabet;
mod parse;
mod poly;
mod tensor;
mod word;

pub use alphabet::{Alphabet, Letter};
pub use poly::{Direction, NCPoly};
pub use tensor::TensorEncoding;
pub use word::{compare_words, MonomialOrder, Word};

use crate::exactnum::NumError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("polynomials live over different generator alphabets")]
    AlphabetMismatch,
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("no image given for generator {0:?}")]
    MissingImage(String),
    #[error("alphabet too large ({0} generators)")]
    TooManyGenerators(usize),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error(transparent)]
    Num(#[from] NumError),
}
