//! Degree-truncated critical-pair completion.
//!
//! Overlaps `w = a·b·c` of two left sides `ab` and `bc` are processed in
//! increasing length (ties by the overlap word). Each overlap yields the
//! difference of its two one-step reducts; a nonzero normal form becomes a
//! new rule, and rules whose left side contains the new left side are
//! evicted and re-inserted after reduction. Once every overlap of length
//! `≤ cap` resolves, all ideal elements with a representation of degree
//! `≤ cap` reduce to zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use super::system::{reduce_terms, Redex};
use super::{CompletionStatus, RewriteError, RewriteRule, RewriteSystem};
use crate::exactnum::{Rational, Scalar};
use crate::ncalg::{Alphabet, Letter, MonomialOrder, NCPoly, Word};

#[derive(Debug, Clone)]
pub struct CompletionResult<C: Scalar = Rational> {
    pub system: RewriteSystem<C>,
    /// `Confluent` or `CompleteUpTo(cap)`.
    pub status: CompletionStatus,
    /// Rule count at the start and after each overlap-degree level.
    pub rule_count_history: Vec<usize>,
}

/// Mutable rule set with stable rule identifiers.
pub(crate) struct Workspace<C: Scalar> {
    alphabet: Arc<Alphabet>,
    order: MonomialOrder,
    rules: BTreeMap<u64, RewriteRule<C>>,
    index: HashMap<Vec<Letter>, u64>,
    lengths: BTreeMap<usize, usize>,
    next_id: u64,
}

impl<C: Scalar> Redex<C> for Workspace<C> {
    fn redex(&self, w: &[Letter]) -> Option<(usize, &RewriteRule<C>)> {
        for end in 0..=w.len() {
            for &l in self.lengths.keys() {
                if l > end {
                    break;
                }
                if let Some(id) = self.index.get(&w[end - l..end]) {
                    return Some((end - l, &self.rules[id]));
                }
            }
        }
        None
    }
}

impl<C: Scalar> Workspace<C> {
    pub(crate) fn new(alphabet: &Arc<Alphabet>, order: MonomialOrder) -> Self {
        Workspace {
            alphabet: alphabet.clone(),
            order,
            rules: BTreeMap::new(),
            index: HashMap::new(),
            lengths: BTreeMap::new(),
            next_id: 0,
        }
    }

    fn from_system(sys: &RewriteSystem<C>) -> Self {
        let mut ws = Self::new(sys.alphabet(), sys.order());
        for r in sys.rules() {
            ws.insert(r.clone());
        }
        ws
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn len(&self) -> usize {
        self.rules.len()
    }

    fn insert(&mut self, rule: RewriteRule<C>) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        self.index.insert(rule.lhs.letters().to_vec(), id);
        *self.lengths.entry(rule.lhs.len()).or_default() += 1;
        self.rules.insert(id, rule);
        id
    }

    fn remove(&mut self, id: u64) -> RewriteRule<C> {
        let rule = self.rules.remove(&id).expect("live rule");
        self.index.remove(rule.lhs.letters());
        let count = self.lengths.get_mut(&rule.lhs.len()).expect("length tracked");
        *count -= 1;
        if *count == 0 {
            self.lengths.remove(&rule.lhs.len());
        }
        rule
    }

    fn normal_form(&self, p: NCPoly<C>) -> NCPoly<C> {
        let alphabet = p.alphabet().clone();
        NCPoly::from_map(alphabet, reduce_terms(self, p.into_terms()))
    }

    fn orient(&self, p: &NCPoly<C>) -> Option<RewriteRule<C>> {
        let (lw, lc) = p.leading_term(self.order)?;
        let lhs = lw.clone();
        let inv = lc.inv().expect("leading coefficient is nonzero");
        let mut rhs = p.scale(&inv.neg());
        rhs.add_term(lhs.clone(), C::one());
        Some(RewriteRule { lhs, rhs })
    }

    /// Inserts relations one at a time, keeping left sides inter-reduced.
    /// Returns the ids of newly created rules that are still alive.
    pub(crate) fn absorb(&mut self, relations: Vec<NCPoly<C>>) -> Vec<u64> {
        let mut pending = relations;
        pending.reverse();
        let mut created = Vec::new();
        while let Some(p) = pending.pop() {
            let nf = self.normal_form(p);
            let Some(rule) = self.orient(&nf) else { continue };
            let evict: Vec<u64> = self
                .rules
                .iter()
                .filter(|(_, r)| r.lhs.find(rule.lhs.letters()).is_some())
                .map(|(&id, _)| id)
                .collect();
            for id in evict {
                let old = self.remove(id);
                pending.push(old.relation());
            }
            created.push(self.insert(rule));
        }
        created.retain(|id| self.rules.contains_key(id));
        created
    }

    pub(crate) fn normalize_rhs(&mut self) {
        let ids: Vec<u64> = self.rules.keys().copied().collect();
        for id in ids {
            let rhs = self.rules[&id].rhs.clone();
            let nf = self.normal_form(rhs);
            self.rules.get_mut(&id).expect("live rule").rhs = nf;
        }
    }

    pub(crate) fn freeze(self, status: CompletionStatus) -> RewriteSystem<C> {
        let mut rules: Vec<RewriteRule<C>> = self.rules.into_values().collect();
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        RewriteSystem::from_rules_unchecked(&self.alphabet, self.order, rules, status)
    }

    /// Overlaps of `a` followed by `b`: `(overlap length k, overlap word)`.
    fn overlaps(a: &Word, b: &Word) -> Vec<(usize, Word)> {
        let (la, lb) = (a.letters(), b.letters());
        (1..la.len().min(lb.len()))
            .filter(|&k| la[la.len() - k..] == lb[..k])
            .map(|k| {
                let mut v = la.to_vec();
                v.extend_from_slice(&lb[k..]);
                (k, Word::from(v))
            })
            .collect()
    }

    /// Difference of the two one-step reducts of an overlap, normalized.
    fn resolve(&self, a: u64, b: u64, k: usize) -> Option<NCPoly<C>> {
        let (ra, rb) = (self.rules.get(&a)?, self.rules.get(&b)?);
        let head = &ra.lhs.letters()[..ra.lhs.len() - k];
        let tail = &rb.lhs.letters()[k..];
        let left = ra.rhs.sandwich(&[], tail);
        let right = rb.rhs.sandwich(head, &[]);
        Some(self.normal_form(&left - &right))
    }
}

type Pair = (usize, Word, u64, u64, usize);

impl<C: Scalar> RewriteSystem<C> {
    /// Resolves every overlap of length `≤ degree_cap`, then checks the
    /// remaining (longer) overlaps to decide full confluence.
    pub fn complete(&self, degree_cap: usize) -> Result<CompletionResult<C>, RewriteError> {
        let max_degree = self.max_rule_degree();
        if degree_cap < max_degree {
            return Err(RewriteError::CapTooSmall { cap: degree_cap, max_degree });
        }
        let mut ws = Workspace::from_system(self);
        ws.normalize_rhs();
        let mut queue: BTreeSet<Pair> = BTreeSet::new();
        let ids: Vec<u64> = ws.rules.keys().copied().collect();
        for &id in &ids {
            enqueue_pairs(&ws, id, degree_cap, &mut queue);
        }
        let mut history = vec![ws.len()];
        let mut level = None;
        while let Some(pair) = queue.pop_first() {
            let (len, _, a, b, k) = pair;
            if level != Some(len) {
                if level.is_some() {
                    ws.normalize_rhs();
                    history.push(ws.len());
                }
                level = Some(len);
            }
            let Some(s) = ws.resolve(a, b, k) else { continue };
            if s.is_zero() {
                continue;
            }
            for id in ws.absorb(vec![s]) {
                enqueue_pairs(&ws, id, degree_cap, &mut queue);
            }
        }
        ws.normalize_rhs();
        history.push(ws.len());

        let confluent = all_overlaps_resolve(&ws);
        let status = if confluent { CompletionStatus::Confluent } else { CompletionStatus::CompleteUpTo(degree_cap) };
        Ok(CompletionResult { system: ws.freeze(status), status, rule_count_history: history })
    }
}

fn enqueue_pairs<C: Scalar>(ws: &Workspace<C>, id: u64, cap: usize, queue: &mut BTreeSet<Pair>) {
    let Some(new) = ws.rules.get(&id) else { return };
    for (&other, rule) in &ws.rules {
        for (k, w) in Workspace::<C>::overlaps(&new.lhs, &rule.lhs) {
            if w.len() <= cap {
                queue.insert((w.len(), w, id, other, k));
            }
        }
        if other != id {
            for (k, w) in Workspace::<C>::overlaps(&rule.lhs, &new.lhs) {
                if w.len() <= cap {
                    queue.insert((w.len(), w, other, id, k));
                }
            }
        }
    }
}

fn all_overlaps_resolve<C: Scalar>(ws: &Workspace<C>) -> bool {
    let mut pairs: Vec<Pair> = Vec::new();
    for (&a, ra) in &ws.rules {
        for (&b, rb) in &ws.rules {
            for (k, w) in Workspace::<C>::overlaps(&ra.lhs, &rb.lhs) {
                pairs.push((w.len(), w, a, b, k));
            }
        }
    }
    pairs.sort();
    pairs.into_iter().all(|(_, _, a, b, k)| ws.resolve(a, b, k).is_some_and(|s| s.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Alphabet;

    fn idempotents() -> RewriteSystem {
        let a = Alphabet::new(["p", "q"]).unwrap();
        let rels = ["p.p - p", "q.q - q"].map(|t| NCPoly::parse(&a, t).unwrap());
        RewriteSystem::from_relations(&a, MonomialOrder::DegLex, &rels).unwrap()
    }

    /// Brute-force overlap enumeration used as an oracle.
    fn overlap_count(sys: &RewriteSystem, cap: usize) -> usize {
        let mut n = 0;
        for a in sys.rules() {
            for b in sys.rules() {
                n += Workspace::<Rational>::overlaps(&a.lhs, &b.lhs).iter().filter(|(_, w)| w.len() <= cap).count();
            }
        }
        n
    }

    #[test]
    fn two_idempotents_need_no_new_rules() {
        let sys = idempotents();
        assert_eq!(overlap_count(&sys, 10), 2);
        let res = sys.complete(10).unwrap();
        assert_eq!(res.status, CompletionStatus::Confluent);
        assert_eq!(res.system.rules().len(), 2);
        assert!(res.rule_count_history.iter().all(|&c| c == 2));
    }

    #[test]
    fn cap_below_rule_degree_is_rejected() {
        let err = idempotents().complete(1).unwrap_err();
        assert_eq!(err, RewriteError::CapTooSmall { cap: 1, max_degree: 2 });
    }

    #[test]
    fn completion_discovers_consequences() {
        // x.y = y.x, x.x = 1, y.y = 0  ⇒  x.y.y = y.x.y ... forces y = 0 only
        // through y.y; here check the classic: a.b - b.a, a.a - b gives
        // b.a = a.b and a.b = b.a consistent; add overlap-driven rule.
        let a = Alphabet::new(["a", "b"]).unwrap();
        let rels = ["b.a - a", "a.a - 1"].map(|t| NCPoly::parse(&a, t).unwrap());
        let sys = RewriteSystem::from_relations(&a, MonomialOrder::DegLex, &rels).unwrap();
        let res = sys.complete(6).unwrap();
        // b.a.a: (b.a).a -> a.a -> 1 ; b.(a.a) -> b  ⇒  b = 1
        let b = NCPoly::var(&a, "b").unwrap();
        assert!(res.system.reduces_to_zero(&(&b - &NCPoly::one(&a))));
        assert_eq!(res.status, CompletionStatus::Confluent);
    }
}
