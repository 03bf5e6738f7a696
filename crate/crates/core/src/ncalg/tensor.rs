//! Tensor powers `A^{⊗k}` of a free algebra encoded inside one free algebra.
//!
//! Each base generator `g` gets one tagged copy `g@t` per tensor factor `t`
//! (`1 ≤ t ≤ k`). Letters with different tags commute; modulo the
//! straightening relations `g@t · h@s = h@s · g@t` (`t > s`) every word has
//! a unique representative with tags in nondecreasing order, which
//! corresponds to the pure tensor of its tag blocks.

use std::sync::Arc;

use super::{Alphabet, Letter, NCPoly, Word};
use crate::exactnum::Scalar;

#[derive(Debug, Clone)]
pub struct TensorEncoding {
    base: Arc<Alphabet>,
    factors: usize,
    alphabet: Arc<Alphabet>,
}

impl TensorEncoding {
    pub fn new(base: &Arc<Alphabet>, factors: usize) -> Self {
        assert!(factors >= 1, "tensor power needs at least one factor");
        let names: Vec<String> = (1..=factors)
            .flat_map(|t| base.names().iter().map(move |n| format!("{n}@{t}")))
            .collect();
        let alphabet = Alphabet::new(names).expect("tagged names are valid");
        TensorEncoding { base: base.clone(), factors, alphabet }
    }

    pub fn base(&self) -> &Arc<Alphabet> {
        &self.base
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Letter of generator `g` in tensor slot `slot` (0-based).
    pub fn tagged(&self, slot: usize, g: Letter) -> Letter {
        (slot * self.base.len()) as Letter + g
    }

    /// `(slot, base letter)` of a tagged letter.
    pub fn untag(&self, letter: Letter) -> (usize, Letter) {
        let n = self.base.len();
        ((letter as usize) / n, (letter as usize % n) as Letter)
    }

    /// The image of `p` in tensor slot `slot`.
    pub fn embed<C: Scalar>(&self, slot: usize, p: &NCPoly<C>) -> NCPoly<C> {
        assert!(slot < self.factors);
        let terms = p.terms().map(|(w, c)| {
            let letters: Vec<Letter> = w.letters().iter().map(|&g| self.tagged(slot, g)).collect();
            (Word::from(letters), c.clone())
        });
        NCPoly::from_terms(&self.alphabet, terms)
    }

    /// `p_1 ⊗ p_2 ⊗ … ⊗ p_k` in straightened form.
    pub fn pure_tensor<C: Scalar>(&self, parts: &[NCPoly<C>]) -> NCPoly<C> {
        assert_eq!(parts.len(), self.factors, "one polynomial per tensor factor");
        parts
            .iter()
            .enumerate()
            .fold(NCPoly::one(&self.alphabet), |acc, (slot, p)| &acc * &self.embed(slot, p))
    }

    /// Splits a straightened word into its per-factor words; `None` if the
    /// tags are out of order.
    pub fn decode(&self, w: &Word) -> Option<Vec<Word>> {
        let mut parts = vec![Vec::new(); self.factors];
        let mut last = 0;
        for &l in w.letters() {
            let (slot, g) = self.untag(l);
            if slot < last {
                return None;
            }
            last = slot;
            parts[slot].push(g);
        }
        Some(parts.into_iter().map(Word::from).collect())
    }

    /// Straightening relations `g@t · h@s − h@s · g@t` for `t > s`,
    /// restricted to base letters accepted by `keep`.
    pub fn straightening_relations<C: Scalar>(&self, keep: impl Fn(Letter) -> bool) -> Vec<NCPoly<C>> {
        let letters: Vec<Letter> = (0..self.base.len() as Letter).filter(|&g| keep(g)).collect();
        let mut out = Vec::new();
        for t in 1..self.factors {
            for s in 0..t {
                for &g in &letters {
                    for &h in &letters {
                        let hi = self.tagged(t, g);
                        let lo = self.tagged(s, h);
                        let mut p = NCPoly::monomial(&self.alphabet, Word::from(vec![hi, lo]), C::one());
                        p.add_term(Word::from(vec![lo, hi]), C::one().neg());
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn pure_tensors_decode() {
        let base = Alphabet::matrix("u", 2);
        let enc = TensorEncoding::new(&base, 2);
        assert_eq!(enc.alphabet().len(), 8);
        assert_eq!(enc.alphabet().name(enc.tagged(1, 2)), "u21@2");
        let u11: NCPoly<Rational> = NCPoly::var(&base, "u11").unwrap();
        let u12: NCPoly<Rational> = NCPoly::var(&base, "u12").unwrap();
        let t = enc.pure_tensor(&[&u11 * &u12, u12.clone()]);
        let (w, _) = t.terms().next().unwrap();
        let parts = enc.decode(w).unwrap();
        assert_eq!(parts[0], Word::from(vec![0, 1]));
        assert_eq!(parts[1], Word::from(vec![1]));
        assert!(enc.decode(&Word::from(vec![enc.tagged(1, 0), enc.tagged(0, 0)])).is_none());
    }

    #[test]
    fn straightening_relation_count() {
        let base = Alphabet::new(["p", "q"]).unwrap();
        let rels: Vec<NCPoly<Rational>> = TensorEncoding::new(&base, 3).straightening_relations(|_| true);
        // 3 ordered tag pairs, 4 letter pairs each
        assert_eq!(rels.len(), 12);
    }
}
