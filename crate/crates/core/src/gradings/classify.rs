use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::grading::{grading_from_partition, grading_from_regular_abelian, verify_grading};
use super::orbit::orbit_decompose;
use super::GradingError;
use crate::groups::{abelian_groups_of_order, FiniteAbelianGroup};
use crate::report::Verdict;

pub const CLASSIFY_MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct ClassifiedGrading {
    pub partition: Vec<usize>,
    pub groups: Vec<FiniteAbelianGroup>,
    /// `G_1 * ⋯ * G_k`.
    pub grading_group: String,
    pub verdict: Verdict,
    pub ergodic: bool,
    pub faithful: bool,
    pub dim_a1: usize,
    /// Partition and `k` recovered by orbit decomposition.
    pub orbit_partition: Vec<usize>,
    pub orbit_k: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub n: usize,
    /// Transitive abelian groups of degree `n` with their character
    /// gradings.
    pub ergodic: Vec<ClassifiedGrading>,
    /// One entry per partition of `n` and per ordered choice of groups for
    /// its blocks; empty when only the ergodic case was requested.
    pub general: Vec<ClassifiedGrading>,
    pub verdict: Verdict,
    pub conclusion: String,
    pub scope_notes: Vec<String>,
}

/// Partitions of `n` as nonincreasing sequences, in reverse lexicographic
/// order: `(5), (4,1), (3,2), (3,1,1), …`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn classify_one(partition: &[usize], groups: &[FiniteAbelianGroup]) -> ClassifiedGrading {
    let grading = grading_from_partition(partition, groups).expect("orders match block sizes");
    let report = verify_grading(&grading);
    let orbit = orbit_decompose(&grading).expect("constructed gradings decompose");
    ClassifiedGrading {
        partition: partition.to_vec(),
        groups: groups.to_vec(),
        grading_group: grading.group().descriptor(),
        verdict: report.verdict,
        ergodic: grading.identity_component().len() == 1,
        faithful: report.facts.iter().any(|f| f.label == "faithful" && f.holds),
        dim_a1: grading.identity_component().len(),
        orbit_partition: orbit.partition,
        orbit_k: orbit.k,
    }
}

pub fn classify_gradings(n: usize, ergodic_only: bool) -> Result<Classification, GradingError> {
    if n == 0 || n > CLASSIFY_MAX_DEGREE {
        return Err(GradingError::CostGuard { what: "grading classification".into(), n, max: CLASSIFY_MAX_DEGREE });
    }
    let ergodic: Vec<ClassifiedGrading> = abelian_groups_of_order(n as u64)
        .into_par_iter()
        .map(|g| {
            let mut c = classify_one(&[n], std::slice::from_ref(&g));
            debug_assert_eq!(grading_from_regular_abelian(&g), grading_from_partition(&[n], &[g]).unwrap());
            c.partition = vec![n];
            c
        })
        .collect();
    let general: Vec<ClassifiedGrading> = if ergodic_only {
        Vec::new()
    } else {
        let jobs: Vec<(Vec<usize>, Vec<FiniteAbelianGroup>)> = partitions(n)
            .into_iter()
            .flat_map(|p| {
                let choices: Vec<Vec<FiniteAbelianGroup>> = p.iter().map(|&m| abelian_groups_of_order(m as u64)).collect();
                choices.into_iter().multi_cartesian_product().map(move |gs| (p.clone(), gs))
            })
            .collect();
        jobs.into_par_iter().map(|(p, gs)| classify_one(&p, &gs)).collect()
    };
    let verdict = Verdict::combine(ergodic.iter().chain(&general).map(|c| {
        let consistent = c.orbit_partition == c.partition && c.orbit_k == c.dim_a1 && c.faithful;
        if consistent { c.verdict } else { Verdict::RefutedWithWitness }
    }));
    let ergodic_names = ergodic.iter().map(|c| c.groups[0].to_string()).join(", ");
    let conclusion = format!(
        "Ergodic gradings of K^{n} by faithful groups come from the transitive abelian subgroups of S_{n} ({ergodic_names}). \
         Every cocommutative cosemisimple Hopf algebra quotient of A_s({n}, K) is K[G] for a quotient G of a free product \
         G_1 * ... * G_k of transitive abelian groups G_i in S_(m_i), m_1 + ... + m_k = {n}; the universal free-product gradings \
         for each partition and block-group choice are listed{}.",
        if ergodic_only { " only in the ergodic case" } else { "" }
    );
    let scope_notes = vec![
        "quotients G of the free products are not enumerated".to_string(),
        "group choices are ordered per block; blocks of equal size are not identified up to relabeling".to_string(),
    ];
    Ok(Classification { n, ergodic, general, verdict, conclusion, scope_notes })
}
