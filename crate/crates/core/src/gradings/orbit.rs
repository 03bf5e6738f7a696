use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::freeprod::{FreeProductPresentation, FreeWord};
use super::grading::{verify_grading, Grading, Vector};
use super::GradingError;
use crate::exactnum::linalg::Span;
use crate::exactnum::Cyclotomic;
use crate::report::Verdict;

/// The grading restricted to one orbit block `K^n·f_i`.
#[derive(Debug, Clone, Serialize)]
pub struct RestrictedBlock {
    /// 1-based coordinates of the block.
    pub coordinates: Vec<usize>,
    pub components: usize,
    pub ergodic: bool,
    pub verdict: Verdict,
    #[serde(skip)]
    pub grading: Grading,
}

/// `K^n = K^{m_1} ⊕ ⋯ ⊕ K^{m_k}` cut out by the minimal idempotents of the
/// degree-one component.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    /// `m_1 ≥ ⋯ ≥ m_k`.
    pub partition: Vec<usize>,
    pub k: usize,
    pub dim_a1: usize,
    /// The idempotents `f_i` as 0/1 vectors, in block order.
    pub fixed_basis: Vec<Vec<u8>>,
    pub blocks: Vec<RestrictedBlock>,
}

fn restrict(grading: &Grading, coords: &[usize]) -> Grading {
    let m = coords.len();
    let mut components: BTreeMap<FreeWord, Vec<Vector>> = BTreeMap::new();
    for (g, vs) in grading.components() {
        let restricted: Vec<Vector> = vs.iter().map(|v| coords.iter().map(|&c| v[c].clone()).collect()).collect();
        let basis = Span::new(m, &restricted).basis().to_vec();
        if !basis.is_empty() {
            components.insert(g.clone(), basis);
        }
    }
    let parent = grading.group();
    let factors: BTreeSet<usize> = components.keys().flat_map(|w| w.letters().iter().map(|(f, _)| *f)).collect();
    let single_letters = components.keys().all(|w| w.len() <= 1);
    let (group, components) = match (factors.len(), single_letters) {
        (0, _) => (FreeProductPresentation::trivial(), components),
        (1, true) => {
            let f = *factors.first().expect("one factor");
            let group = FreeProductPresentation::single(parent.factors[f].clone(), m);
            let relabelled = components
                .into_iter()
                .map(|(w, vs)| (w.letters().first().map_or(FreeWord::identity(), |(_, g)| group.letter(0, g.clone())), vs))
                .collect();
            (group, relabelled)
        }
        _ => (FreeProductPresentation { factors: parent.factors.clone(), blocks: Vec::new() }, components),
    };
    Grading::new(m, group, components).expect("restricted vectors have block length")
}

/// Blocks are the classes of coordinates on which every vector of `A_1`
/// takes equal values; for a grading, `A_1` is a unital subalgebra, so the
/// block indicators are its minimal idempotents and form a basis.
pub fn orbit_decompose(grading: &Grading) -> Result<OrbitReport, GradingError> {
    let n = grading.dimension();
    let a1 = grading.identity_component();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let key = |j: usize| -> Vec<&Cyclotomic> { a1.iter().map(|v| &v[j]).collect() };
        match classes.iter_mut().find(|c| key(c[0]) == key(i)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let span = Span::new(n, a1);
    let indicators: Vec<Vector> = classes
        .iter()
        .map(|c| (0..n).map(|i| Cyclotomic::from_int(i64::from(c.contains(&i)))).collect())
        .collect();
    if classes.len() != span.dimension() || !indicators.iter().all(|f| span.contains(f)) {
        return Err(GradingError::Inconsistent(format!(
            "degree-one component (dimension {}) is not spanned by {} block indicators",
            span.dimension(),
            classes.len()
        )));
    }
    classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let blocks: Vec<RestrictedBlock> = classes
        .iter()
        .map(|c| {
            let g = restrict(grading, c);
            let verdict = verify_grading(&g).verdict;
            RestrictedBlock {
                coordinates: c.iter().map(|i| i + 1).collect(),
                components: g.components().len(),
                ergodic: g.identity_component().len() == 1,
                verdict,
                grading: g,
            }
        })
        .collect();
    Ok(OrbitReport {
        n,
        partition: classes.iter().map(Vec::len).collect(),
        k: classes.len(),
        dim_a1: span.dimension(),
        fixed_basis: classes.iter().map(|c| (0..n).map(|i| u8::from(c.contains(&i))).collect()).collect(),
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::super::grading::{grading_from_partition, grading_from_regular_abelian};
    use super::*;
    use crate::groups::FiniteAbelianGroup;

    #[test]
    fn examples() {
        let r = orbit_decompose(&grading_from_regular_abelian(&FiniteAbelianGroup::cyclic(4))).unwrap();
        assert_eq!((r.partition.clone(), r.k), (vec![4], 1));
        let g = grading_from_partition(&[3, 2], &[FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(2)]).unwrap();
        let r = orbit_decompose(&g).unwrap();
        assert_eq!((r.partition.clone(), r.k), (vec![3, 2], 2));
        assert!(r.blocks.iter().all(|b| b.ergodic && b.verdict == Verdict::Verified));
        assert_eq!(r.blocks[1].coordinates, vec![4, 5]);
        let r = orbit_decompose(&Grading::trivial(3)).unwrap();
        assert_eq!((r.partition.clone(), r.k), (vec![1, 1, 1], 3));
    }

    #[test]
    fn rejects_non_algebra_degree_one() {
        let mut comps = BTreeMap::new();
        let v = |xs: &[i64]| xs.iter().map(|&x| Cyclotomic::from_int(x)).collect::<Vector>();
        comps.insert(FreeWord::identity(), vec![v(&[1, 2, 3])]);
        let g = Grading::new(3, FreeProductPresentation::trivial(), comps).unwrap();
        assert!(orbit_decompose(&g).is_err());
    }
}
