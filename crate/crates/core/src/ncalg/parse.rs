//! Text syntax for polynomials.
//!
//! ```text
//! poly  := "0" | ["+"|"-"] term (("+"|"-") term)*
//! term  := coeff | coeff "*" word | word
//! coeff := integer | integer "/" integer
//! word  := generator ("." generator)*
//! ```
//!
//! Whitespace is ignored. Example: `1*u11.u12 - 1*u12.u11`, `p.p - p`,
//! `1 - u11 - u12`.

use std::sync::Arc;

use super::{AlgError, Alphabet, NCPoly, Word};
use crate::exactnum::{parse_rational, Rational, Scalar};

impl NCPoly<Rational> {
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self, AlgError> {
        let err = |reason: &str| AlgError::Parse { text: text.to_string(), reason: reason.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let terms = crate::exactnum::split_signed_terms(&compact).ok_or_else(|| err("empty term"))?;
        let mut out = NCPoly::zero(alphabet);
        for (neg, term) in terms {
            let (coef, word) = match term.split_once('*') {
                Some((c, w)) => (parse_rational(c).map_err(|_| err("bad coefficient"))?, Some(w)),
                None if term.starts_with(|c: char| c.is_ascii_digit()) => {
                    (parse_rational(term).map_err(|_| err("bad coefficient"))?, None)
                }
                None => (Rational::one(), Some(term)),
            };
            let word = match word {
                None => Word::empty(),
                Some(w) => {
                    let letters = w
                        .split('.')
                        .map(|name| alphabet.letter(name))
                        .collect::<Result<Vec<_>, _>>()?;
                    Word::from(letters)
                }
            };
            out.add_term(word, if neg { coef.neg() } else { coef });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn parses_documented_examples() {
        let a = Alphabet::matrix("u", 2);
        let p = NCPoly::parse(&a, "1*u11.u12 - 1*u12.u11").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "-1*u12.u11 + 1*u11.u12");
        let q = NCPoly::parse(&a, " 1 - u11 -u12 ").unwrap();
        assert_eq!(q.as_constant(), None);
        assert_eq!(q.coefficient(&Word::empty()), rat(1, 1));
        assert_eq!(NCPoly::parse(&a, "0").unwrap(), NCPoly::zero(&a));
        assert_eq!(NCPoly::parse(&a, "-3/2*u22").unwrap().to_string(), "-3/2*u22");
    }

    #[test]
    fn display_round_trips() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        for text in ["p.q - q.p", "2/3*p.p.q + 7 - q", "-1*q"] {
            let p = NCPoly::parse(&a, text).unwrap();
            assert_eq!(NCPoly::parse(&a, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_errors() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        assert!(matches!(NCPoly::parse(&a, "p + r"), Err(AlgError::UnknownGenerator(_))));
        assert!(matches!(NCPoly::parse(&a, "p +"), Err(AlgError::Parse { .. })));
        assert!(matches!(NCPoly::parse(&a, "x/y*p"), Err(AlgError::Parse { .. })));
        assert!(matches!(NCPoly::parse(&a, ""), Err(AlgError::Parse { .. })));
    }
}
