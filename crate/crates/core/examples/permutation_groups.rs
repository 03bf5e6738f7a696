//! Transitive abelian subgroups of S_n: classified versus brute force.

use quantum_permutations::groups::{abelian_groups_of_order, transitive_abelian_subgroups, Permutation, SubgroupMode};

fn main() {
    let s = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
    println!("{s} has order {}", s.order());
    println!("abelian groups of order 8: {:?}", abelian_groups_of_order(8).iter().map(ToString::to_string).collect::<Vec<_>>());
    for n in [4, 6] {
        let classified = transitive_abelian_subgroups(n, SubgroupMode::Classified).unwrap();
        let brute = transitive_abelian_subgroups(n, SubgroupMode::BruteForce).unwrap();
        for c in &classified {
            let gens: Vec<String> = c.generators.iter().map(ToString::to_string).collect();
            println!("n = {n}: {} generated by {}", c.group, gens.join(", "));
        }
        println!("n = {n}: brute force finds {} classes", brute.len());
    }
}
