use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::completion::Workspace;
use super::RewriteError;
use crate::exactnum::{Rational, Scalar};
use crate::ncalg::{Alphabet, Letter, MonomialOrder, NCPoly, TensorEncoding, Word};

/// `lhs → rhs`, with every word of `rhs` smaller than `lhs`.
#[derive(Clone, Debug)]
pub struct RewriteRule<C: Scalar = Rational> {
    pub lhs: Word,
    pub rhs: NCPoly<C>,
}

impl<C: Scalar> RewriteRule<C> {
    /// The relation `lhs − rhs` this rule encodes.
    pub fn relation(&self) -> NCPoly<C> {
        let mut p = self.rhs.scale(&C::one().neg());
        p.add_term(self.lhs.clone(), C::one());
        p
    }

    pub fn degree(&self) -> usize {
        self.lhs.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletionStatus {
    Raw,
    CompleteUpTo(usize),
    Confluent,
}

impl fmt::Display for CompletionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompletionStatus::Raw => write!(f, "raw"),
            CompletionStatus::CompleteUpTo(d) => write!(f, "complete up to degree {d}"),
            CompletionStatus::Confluent => write!(f, "confluent"),
        }
    }
}

/// Outcome of reducing one polynomial.
#[derive(Debug, Clone)]
pub struct Reduction<C: Scalar = Rational> {
    pub normal_form: NCPoly<C>,
    pub reduced_to_zero: bool,
    /// A nonzero normal form against a non-confluent system says nothing
    /// about ideal membership.
    pub inconclusive: bool,
}

#[derive(Clone)]
pub struct RewriteSystem<C: Scalar = Rational> {
    alphabet: Arc<Alphabet>,
    order: MonomialOrder,
    rules: Vec<RewriteRule<C>>,
    index: HashMap<Vec<Letter>, usize>,
    lhs_lengths: Vec<usize>,
    status: CompletionStatus,
}

impl<C: Scalar> RewriteSystem<C> {
    /// A system with no rules: the free algebra itself, trivially confluent.
    pub fn free(alphabet: &Arc<Alphabet>, order: MonomialOrder) -> Self {
        RewriteSystem {
            alphabet: alphabet.clone(),
            order,
            rules: Vec::new(),
            index: HashMap::new(),
            lhs_lengths: Vec::new(),
            status: CompletionStatus::Confluent,
        }
    }

    /// Orients and inter-reduces `relations` without completing.
    pub fn from_relations(
        alphabet: &Arc<Alphabet>,
        order: MonomialOrder,
        relations: &[NCPoly<C>],
    ) -> Result<Self, RewriteError> {
        for r in relations {
            if !Alphabet::same(r.alphabet(), alphabet) {
                return Err(RewriteError::AlphabetMismatch);
            }
        }
        let mut ws = Workspace::new(alphabet, order);
        ws.absorb(relations.to_vec());
        ws.normalize_rhs();
        let status = if ws.is_empty() { CompletionStatus::Confluent } else { CompletionStatus::Raw };
        Ok(ws.freeze(status))
    }

    /// Builds a system from rules that are already oriented and
    /// inter-reduced, with a known status.
    pub(crate) fn from_rules_unchecked(
        alphabet: &Arc<Alphabet>,
        order: MonomialOrder,
        rules: Vec<RewriteRule<C>>,
        status: CompletionStatus,
    ) -> Self {
        let mut sys = Self::free(alphabet, order);
        sys.status = status;
        for r in rules {
            sys.push_rule(r);
        }
        sys
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        &self.rules
    }

    pub fn status(&self) -> CompletionStatus {
        self.status
    }

    pub fn is_confluent(&self) -> bool {
        self.status == CompletionStatus::Confluent
    }

    pub fn max_rule_degree(&self) -> usize {
        self.lhs_lengths.last().copied().unwrap_or(0)
    }

    /// Letters that are not themselves the left side of a rule.
    pub fn is_irreducible_letter(&self, g: Letter) -> bool {
        !self.index.contains_key(&[g][..])
    }

    pub(crate) fn push_rule(&mut self, rule: RewriteRule<C>) -> usize {
        let id = self.rules.len();
        let len = rule.lhs.len();
        self.index.insert(rule.lhs.letters().to_vec(), id);
        if let Err(pos) = self.lhs_lengths.binary_search(&len) {
            self.lhs_lengths.insert(pos, len);
        }
        self.rules.push(rule);
        id
    }

    /// Leftmost-innermost occurrence of a rule left side in `w`, as
    /// `(start, rule index)`.
    pub(crate) fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        if self.lhs_lengths.first() == Some(&0) {
            return Some((0, self.index[&Vec::new()]));
        }
        for end in 1..=w.len() {
            for &l in &self.lhs_lengths {
                if l > end {
                    break;
                }
                if let Some(&id) = self.index.get(&w[end - l..end]) {
                    return Some((end - l, id));
                }
            }
        }
        None
    }

    pub fn is_reducible_word(&self, w: &Word) -> bool {
        self.find_redex(w.letters()).is_some()
    }

    /// The unique word-by-word reduct of `p`: no term contains a rule left
    /// side, and the result is congruent to `p` modulo the ideal.
    pub fn normal_form(&self, p: &NCPoly<C>) -> NCPoly<C> {
        assert!(
            Alphabet::same(p.alphabet(), &self.alphabet),
            "polynomial and rewrite system use different alphabets"
        );
        let terms = reduce_terms(self, p.clone().into_terms());
        NCPoly::from_map(self.alphabet.clone(), terms)
    }

    pub fn reduces_to_zero(&self, p: &NCPoly<C>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn reduce(&self, p: &NCPoly<C>) -> Reduction<C> {
        let normal_form = self.normal_form(p);
        let reduced_to_zero = normal_form.is_zero();
        Reduction { inconclusive: !reduced_to_zero && !self.is_confluent(), reduced_to_zero, normal_form }
    }

    /// All words of length `≤ max_len` containing no rule left side, in
    /// deglex order.
    pub fn irreducible_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        self.walk_irreducible(max_len, &mut |w| out.push(Word::from(w)));
        out.sort();
        out
    }

    fn walk_irreducible(&self, max_len: usize, visit: &mut impl FnMut(&[Letter])) {
        if self.find_redex(&[]).is_some() {
            return;
        }
        let mut stack: Vec<Letter> = Vec::new();
        self.walk_rec(&mut stack, max_len, visit);
    }

    fn walk_rec(&self, stack: &mut Vec<Letter>, max_len: usize, visit: &mut impl FnMut(&[Letter])) {
        visit(stack);
        if stack.len() == max_len {
            return;
        }
        for g in 0..self.alphabet.len() as Letter {
            stack.push(g);
            if !self.suffix_reducible(stack) {
                self.walk_rec(stack, max_len, visit);
            }
            stack.pop();
        }
    }

    fn suffix_reducible(&self, w: &[Letter]) -> bool {
        self.lhs_lengths
            .iter()
            .take_while(|&&l| l <= w.len())
            .any(|&l| self.index.contains_key(&w[w.len() - l..]))
    }

    /// Number of irreducible words of each exact length `0..=max_len`.
    pub fn irreducible_counts(&self, max_len: usize) -> Vec<usize> {
        let mut counts = vec![0usize; max_len + 1];
        self.walk_irreducible(max_len, &mut |w| counts[w.len()] += 1);
        counts
    }

    /// Dimensions of the span of irreducible words of length `≤ e`, for
    /// `e = 0..=d`.
    pub fn filtration_dimension(&self, d: usize) -> Result<Vec<usize>, RewriteError> {
        let required = d + self.max_rule_degree();
        let ok = match self.status {
            CompletionStatus::Confluent => true,
            CompletionStatus::CompleteUpTo(e) => e >= required,
            CompletionStatus::Raw => false,
        };
        if !ok {
            return Err(RewriteError::InsufficientCompletion {
                requested: d,
                required,
                status: self.status.to_string(),
            });
        }
        let counts = self.irreducible_counts(d);
        Ok(counts
            .iter()
            .scan(0usize, |acc, c| {
                *acc += c;
                Some(*acc)
            })
            .collect())
    }

    /// The full normal-form basis when it is finite: `Some` as soon as some
    /// length has no irreducible words (then no longer word is irreducible
    /// either), searching up to `max_len`.
    pub fn finite_basis(&self, max_len: usize) -> Option<Vec<Word>> {
        let counts = self.irreducible_counts(max_len);
        let stop = counts.iter().position(|&c| c == 0)?;
        Some(self.irreducible_words(stop))
    }

    /// The system for `A^{⊗k}`: a tagged copy of every rule per tensor slot
    /// plus straightening rules between irreducible letters of different
    /// slots.
    pub fn tensor_power(&self, enc: &TensorEncoding) -> Self {
        assert!(Alphabet::same(enc.base(), &self.alphabet), "encoding over a different alphabet");
        let mut rules = Vec::new();
        for slot in 0..enc.factors() {
            for r in &self.rules {
                let lhs: Vec<Letter> = r.lhs.letters().iter().map(|&g| enc.tagged(slot, g)).collect();
                rules.push(RewriteRule { lhs: Word::from(lhs), rhs: enc.embed(slot, &r.rhs) });
            }
        }
        let straighten = enc.straightening_relations::<C>(|g| self.is_irreducible_letter(g));
        for rel in straighten {
            let (lw, _) = rel.leading_term(self.order).expect("nonzero");
            let lhs = lw.clone();
            let mut rhs = rel.clone();
            rhs.add_term(lhs.clone(), C::one().neg());
            rules.push(RewriteRule { lhs, rhs: rhs.scale(&C::one().neg()) });
        }
        Self::from_rules_unchecked(enc.alphabet(), self.order, rules, self.status)
    }
}

/// Lookup of the leftmost-innermost redex of a word.
pub(crate) trait Redex<C: Scalar> {
    fn redex(&self, w: &[Letter]) -> Option<(usize, &RewriteRule<C>)>;
}

impl<C: Scalar> Redex<C> for RewriteSystem<C> {
    fn redex(&self, w: &[Letter]) -> Option<(usize, &RewriteRule<C>)> {
        self.find_redex(w).map(|(start, id)| (start, &self.rules[id]))
    }
}

/// Reduces a term map to normal form, largest words first.
pub(crate) fn reduce_terms<C: Scalar, R: Redex<C>>(rules: &R, terms: BTreeMap<Word, C>) -> BTreeMap<Word, C> {
    let mut work = terms;
    let mut result: BTreeMap<Word, C> = BTreeMap::new();
    while let Some((w, c)) = work.pop_last() {
        match rules.redex(w.letters()) {
            None => add_into(&mut result, w, c),
            Some((start, rule)) => {
                let (head, rest) = w.letters().split_at(start);
                let tail = &rest[rule.lhs.len()..];
                for (rw, rc) in rule.rhs.terms() {
                    let mut v = Vec::with_capacity(head.len() + rw.len() + tail.len());
                    v.extend_from_slice(head);
                    v.extend_from_slice(rw.letters());
                    v.extend_from_slice(tail);
                    add_into(&mut work, Word::from(v), c.mul(rc));
                }
            }
        }
    }
    result
}

pub(crate) fn add_into<C: Scalar>(map: &mut BTreeMap<Word, C>, w: Word, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl<C: Scalar> fmt::Debug for RewriteSystem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RewriteSystem({}, {} rules, {})", self.order.name(), self.rules.len(), self.status)?;
        for r in &self.rules {
            let lhs = NCPoly::<C>::monomial(&self.alphabet, r.lhs.clone(), C::one());
            writeln!(f, "  {lhs} -> {}", r.rhs)?;
        }
        Ok(())
    }
}
