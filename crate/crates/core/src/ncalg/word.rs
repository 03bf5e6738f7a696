use std::cmp::Ordering;
use std::fmt;

use super::Letter;

/// A monomial of the free algebra: a finite sequence of letters. The empty
/// word is the unit.
///
/// `Ord` on `Word` is the degree-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Letter) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Position of the first occurrence of `factor`, if any.
    pub fn find(&self, factor: &[Letter]) -> Option<usize> {
        if factor.is_empty() {
            return Some(0);
        }
        self.0.windows(factor.len()).position(|w| w == factor)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// Admissible monomial orders (total, well-founded, compatible with
/// concatenation on both sides).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Degree first, then lexicographic from the left.
    #[default]
    DegLex,
    /// Degree first, then lexicographic reading from the right.
    DegLexRight,
}

impl MonomialOrder {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "deglex" => Some(MonomialOrder::DegLex),
            "deglex-right" => Some(MonomialOrder::DegLexRight),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegLexRight => "deglex-right",
        }
    }
}

pub fn compare_words(a: &Word, b: &Word, order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::DegLex => a.cmp(b),
        MonomialOrder::DegLexRight => a
            .len()
            .cmp(&b.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Alphabet;
    use proptest::prelude::*;

    #[test]
    fn deglex_examples() {
        let a = Alphabet::matrix("u", 2);
        let w = |names: &[&str]| Word(names.iter().map(|n| a.letter(n).unwrap()).collect());
        let o = MonomialOrder::DegLex;
        assert_eq!(compare_words(&Word::empty(), &w(&["u11"]), o), Ordering::Less);
        assert_eq!(compare_words(&w(&["u11", "u12"]), &w(&["u12"]), o), Ordering::Greater);
        assert_eq!(compare_words(&w(&["u11", "u12"]), &w(&["u11", "u21"]), o), Ordering::Less);
        assert_eq!(compare_words(&w(&["u12", "u11"]), &w(&["u12", "u11"]), o), Ordering::Equal);
    }

    #[test]
    fn right_order_reads_backwards() {
        let o = MonomialOrder::DegLexRight;
        assert_eq!(compare_words(&Word(vec![0, 1]), &Word(vec![1, 0]), o), Ordering::Greater);
        assert_eq!(compare_words(&Word(vec![0, 1]), &Word(vec![1, 0]), MonomialOrder::DegLex), Ordering::Less);
    }

    fn word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u16..3, 0..5).prop_map(Word)
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![Just(MonomialOrder::DegLex), Just(MonomialOrder::DegLexRight)]
    }

    proptest! {
        #[test]
        fn orders_are_compatible_with_concatenation(
            a in word(), b in word(), x in word(), y in word(), o in order()
        ) {
            let lhs = compare_words(&a, &b, o);
            let ext = compare_words(&x.concat(&a).concat(&y), &x.concat(&b).concat(&y), o);
            prop_assert_eq!(lhs, ext);
        }

        #[test]
        fn orders_are_total_and_antisymmetric(a in word(), b in word(), c in word(), o in order()) {
            prop_assert_eq!(compare_words(&a, &b, o), compare_words(&b, &a, o).reverse());
            prop_assert_eq!(compare_words(&a, &b, o) == Ordering::Equal, a == b);
            if compare_words(&a, &b, o) != Ordering::Greater && compare_words(&b, &c, o) != Ordering::Greater {
                prop_assert!(compare_words(&a, &c, o) != Ordering::Greater);
            }
        }
    }
}
