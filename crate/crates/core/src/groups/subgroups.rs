use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::abelian::{abelian_groups_of_order, FiniteAbelianGroup};
use super::perm::Permutation;
use super::GroupError;
use crate::report::CertificateReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupMode {
    /// Regular embeddings of the abelian groups of order `n`.
    Classified,
    /// Direct search through the abelian subgroups of `S_n`.
    BruteForce,
}

pub const BRUTE_FORCE_MAX_DEGREE: usize = 6;

/// Conjugacy keys scan all of `S_n`; above this degree classified mode
/// leaves them empty.
pub const CONJUGACY_KEY_MAX_DEGREE: usize = 8;

/// A conjugacy class of transitive abelian subgroups of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitiveAbelianClass {
    pub group: FiniteAbelianGroup,
    pub generators: Vec<Permutation>,
    pub elements: Vec<Permutation>,
    /// Sorted ranks of the lexicographically least conjugate.
    pub conjugacy_key: Vec<usize>,
}

fn ranks(perms: &[Permutation]) -> Vec<usize> {
    let mut r: Vec<usize> = perms.iter().map(Permutation::rank).collect();
    r.sort_unstable();
    r
}

/// Canonical label of the conjugacy class of a subgroup.
pub fn conjugacy_key(elements: &[Permutation]) -> Vec<usize> {
    let n = elements.first().map_or(0, Permutation::degree);
    Permutation::all(n)
        .par_iter()
        .map(|t| {
            let ti = t.inverse();
            ranks(&elements.iter().map(|h| t.compose(h).compose(&ti)).collect::<Vec<_>>())
        })
        .min()
        .unwrap_or_default()
}

/// Isomorphism type of an abelian permutation group, read off from the
/// number of elements of each order.
fn isomorphism_type(elements: &[Permutation]) -> FiniteAbelianGroup {
    let mut profile: BTreeMap<u64, usize> = BTreeMap::new();
    for e in elements {
        *profile.entry(e.order() as u64).or_default() += 1;
    }
    abelian_groups_of_order(elements.len() as u64)
        .into_iter()
        .find(|g| {
            let mut p: BTreeMap<u64, usize> = BTreeMap::new();
            for x in g.elements() {
                *p.entry(g.element_order(&x)).or_default() += 1;
            }
            p == profile
        })
        .expect("abelian groups are determined by their order statistics")
}

fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = elements.first().map(|e| Permutation::identity(e.degree())).into_iter().collect();
    let mut sorted = elements.to_vec();
    sorted.sort_by_key(Permutation::rank);
    for e in sorted {
        if !span.contains(&e) {
            gens.push(e);
            span = closure(&gens, elements[0].degree()).into_iter().collect();
        }
    }
    gens
}

/// Subgroup generated by `gens`.
pub fn closure(gens: &[Permutation], n: usize) -> Vec<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn is_transitive(elements: &[Permutation], n: usize) -> bool {
    let orbit: HashSet<usize> = elements.iter().map(|g| g.apply(0)).collect();
    orbit.len() == n
}

fn all_abelian_subgroups(n: usize) -> Vec<Vec<Permutation>> {
    let all = Permutation::all(n);
    let id = Permutation::identity(n);
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: Vec<Vec<Permutation>> = vec![vec![id.clone()]];
    found.insert(vec![id.rank()]);
    let mut out = Vec::new();
    while let Some(h) = queue.pop() {
        let members: HashSet<&Permutation> = h.iter().collect();
        for s in &all {
            if members.contains(s) || !h.iter().all(|x| x.compose(s) == s.compose(x)) {
                continue;
            }
            let mut k: BTreeSet<Permutation> = BTreeSet::new();
            let mut power = id.clone();
            loop {
                for x in &h {
                    k.insert(power.compose(x));
                }
                power = power.compose(s);
                if power.is_identity() {
                    break;
                }
            }
            let k: Vec<Permutation> = k.into_iter().collect();
            if found.insert(ranks(&k)) {
                queue.push(k);
            }
        }
        out.push(h);
    }
    out
}

pub fn transitive_abelian_subgroups(n: usize, mode: SubgroupMode) -> Result<Vec<TransitiveAbelianClass>, GroupError> {
    if n == 0 {
        return Err(GroupError::Degree(n));
    }
    let mut classes: Vec<TransitiveAbelianClass> = match mode {
        SubgroupMode::Classified => abelian_groups_of_order(n as u64)
            .into_par_iter()
            .map(|g| {
                let elements = g.regular_embedding();
                TransitiveAbelianClass {
                    conjugacy_key: if n <= CONJUGACY_KEY_MAX_DEGREE { conjugacy_key(&elements) } else { Vec::new() },
                    generators: g.regular_generators(),
                    elements,
                    group: g,
                }
            })
            .collect(),
        SubgroupMode::BruteForce => {
            if n > BRUTE_FORCE_MAX_DEGREE {
                return Err(GroupError::CostGuard {
                    what: "brute-force subgroup enumeration".into(),
                    n,
                    max: BRUTE_FORCE_MAX_DEGREE,
                    hint: "use classified mode; transitive abelian subgroups are regular".into(),
                });
            }
            let mut by_key: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
            for h in all_abelian_subgroups(n).into_iter().filter(|h| is_transitive(h, n)) {
                by_key.entry(conjugacy_key(&h)).or_insert(h);
            }
            by_key
                .into_iter()
                .map(|(key, h)| {
                    let elements: Vec<Permutation> = key.iter().map(|&r| Permutation::unrank(n, r)).collect();
                    debug_assert_eq!(conjugacy_key(&elements), key);
                    TransitiveAbelianClass {
                        group: isomorphism_type(&h),
                        generators: greedy_generators(&elements),
                        elements,
                        conjugacy_key: key,
                    }
                })
                .collect()
        }
    };
    let order = abelian_groups_of_order(n as u64);
    classes.sort_by_key(|c| (order.iter().position(|g| *g == c.group), c.conjugacy_key.clone()));
    Ok(classes)
}

/// Order `n`, transitivity, commutativity and trivial point stabilizers.
pub fn regularity_report(elements: &[Permutation]) -> CertificateReport {
    let n = elements.first().map_or(0, Permutation::degree);
    let mut r = CertificateReport::new(format!("transitive abelian subgroup of S_{n} is regular"));
    r.fact("order", elements.len() == n, format!("|G| = {}, n = {n}", elements.len()));
    r.fact("transitive", is_transitive(elements, n), "orbit of 1 is [n]");
    let commutes = elements.iter().all(|a| elements.iter().all(|b| a.compose(b) == b.compose(a)));
    r.fact("abelian", commutes, "all pairs commute");
    let free = (0..n).all(|i| elements.iter().filter(|g| g.apply(i) == i).count() == 1);
    r.fact("stabilizers", free, "every point stabilizer is trivial");
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[TransitiveAbelianClass]) -> Vec<String> {
        v.iter().map(|c| c.group.to_string()).collect()
    }

    #[test]
    fn modes_agree_up_to_six() {
        for n in 1..=6 {
            let a = transitive_abelian_subgroups(n, SubgroupMode::Classified).unwrap();
            let b = transitive_abelian_subgroups(n, SubgroupMode::BruteForce).unwrap();
            assert_eq!(names(&a), names(&b), "n = {n}");
            let ka: Vec<_> = a.iter().map(|c| &c.conjugacy_key).collect();
            let kb: Vec<_> = b.iter().map(|c| &c.conjugacy_key).collect();
            assert_eq!(ka, kb, "n = {n}");
            for c in a.iter().chain(&b) {
                assert!(regularity_report(&c.elements).is_verified());
                assert_eq!(closure(&c.generators, n), {
                    let mut e = c.elements.clone();
                    e.sort();
                    e
                });
            }
        }
    }

    #[test]
    fn counts() {
        let count = |n| transitive_abelian_subgroups(n, SubgroupMode::Classified).unwrap().len();
        assert_eq!([count(4), count(5), count(6), count(8)], [2, 1, 1, 3]);
    }

    #[test]
    fn cost_guard() {
        assert!(matches!(
            transitive_abelian_subgroups(7, SubgroupMode::BruteForce),
            Err(GroupError::CostGuard { n: 7, .. })
        ));
    }
}
