use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::AlgError;

/// Index of a generator inside its alphabet.
pub type Letter = u16;

/// An ordered list of distinct generator names. The position of a name is
/// its letter index, and that index order is the generator order used by
/// every monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '@' | '\''))
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, AlgError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > Letter::MAX as usize {
            return Err(AlgError::TooManyGenerators(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(AlgError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i as Letter).is_some() {
                return Err(AlgError::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Arc::new(Alphabet { names, index }))
    }

    /// The alphabet with no generators; polynomials over it are scalars.
    pub fn empty() -> Arc<Self> {
        Arc::new(Alphabet { names: Vec::new(), index: HashMap::new() })
    }

    /// Generators `{symbol}{i}{j}` of an n×n matrix, row-major. For `n > 9`
    /// indices are separated: `{symbol}{i}_{j}`.
    pub fn matrix(symbol: &str, n: usize) -> Arc<Self> {
        let names = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| {
            if n > 9 {
                format!("{symbol}{i}_{j}")
            } else {
                format!("{symbol}{i}{j}")
            }
        });
        Self::new(names.collect::<Vec<_>>()).expect("matrix generator names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Result<Letter, AlgError> {
        self.index.get(name).copied().ok_or_else(|| AlgError::UnknownGenerator(name.to_string()))
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_alphabet_is_row_major() {
        let a = Alphabet::matrix("u", 3);
        assert_eq!(a.len(), 9);
        assert_eq!(a.name(0), "u11");
        assert_eq!(a.name(1), "u12");
        assert_eq!(a.name(3), "u21");
        assert_eq!(a.letter("u33").unwrap(), 8);
        assert_eq!(Alphabet::matrix("x", 10).name(9), "x1_10");
    }

    #[test]
    fn rejects_bad_names() {
        assert_eq!(Alphabet::new(["p", "p"]).unwrap_err(), AlgError::DuplicateGenerator("p".into()));
        assert!(matches!(Alphabet::new(["a.b"]), Err(AlgError::InvalidName(_))));
        assert!(matches!(Alphabet::new(["1x"]), Err(AlgError::InvalidName(_))));
        assert!(Alphabet::new(["u11@2", "g'"]).is_ok());
    }
}
