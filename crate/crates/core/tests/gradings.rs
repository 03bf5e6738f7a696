use proptest::prelude::*;
use quantum_permutations::gradings::{
    grading_from_partition, grading_from_regular_abelian, orbit_decompose, parse_grading, render_grading, verify_grading,
    FreeWord,
};
use quantum_permutations::groups::{abelian_groups_of_order, FiniteAbelianGroup};
use quantum_permutations::report::Verdict;

fn group() -> impl Strategy<Value = FiniteAbelianGroup> {
    (1u64..=8).prop_flat_map(|n| {
        let gs = abelian_groups_of_order(n);
        (0..gs.len()).prop_map(move |i| gs[i].clone())
    })
}

/// Blocks of nonincreasing size with a random group per block.
fn blocks() -> impl Strategy<Value = (Vec<usize>, Vec<FiniteAbelianGroup>)> {
    prop::collection::vec(group(), 1..4).prop_map(|mut gs| {
        gs.sort_by_key(|g| std::cmp::Reverse(g.order()));
        (gs.iter().map(|g| g.order() as usize).collect(), gs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partition_gradings_verify_and_decompose((p, gs) in blocks()) {
        let g = grading_from_partition(&p, &gs).unwrap();
        prop_assert_eq!(verify_grading(&g).verdict, Verdict::Verified);
        let r = orbit_decompose(&g).unwrap();
        prop_assert_eq!(&r.partition, &p);
        prop_assert_eq!(r.k, g.identity_component().len());
    }

    #[test]
    fn file_round_trip((p, gs) in blocks()) {
        let g = grading_from_partition(&p, &gs).unwrap();
        let back = parse_grading(&render_grading(&g)).unwrap();
        prop_assert_eq!(render_grading(&back), render_grading(&g));
        prop_assert_eq!(verify_grading(&back).verdict, Verdict::Verified);
    }

    #[test]
    fn moving_the_unit_out_of_degree_one_is_refuted(g in group(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() > 1);
        let mut grading = grading_from_regular_abelian(&g);
        let others: Vec<FreeWord> = grading.support().into_iter().filter(|w| !w.is_identity()).cloned().collect();
        let other = pick.get(&others).clone();
        grading.swap_labels(&FreeWord::identity(), &other);
        let r = verify_grading(&grading);
        prop_assert_eq!(r.verdict, Verdict::RefutedWithWitness);
        prop_assert!(r.facts.iter().any(|f| f.label == "unit in degree 1" && !f.holds));
    }
}

#[test]
fn ergodic_gradings_have_abelian_groups_and_finite_orders() {
    for n in 1..=8 {
        for g in abelian_groups_of_order(n) {
            let r = verify_grading(&grading_from_regular_abelian(&g));
            for label in ["faithful", "supported elements have finite order", "ergodic grading has abelian group"] {
                assert!(r.facts.iter().any(|f| f.label == label && f.holds), "{g}: {label}");
            }
        }
    }
}
