//! Gradings of K^n by partition and per-block transitive abelian groups.

use quantum_permutations::gradings::classify_gradings;

fn main() {
    for n in [4, 5, 6, 8] {
        let c = classify_gradings(n, true).unwrap();
        let names: Vec<String> = c.ergodic.iter().map(|e| e.groups[0].to_string()).collect();
        println!("n = {n}: ergodic groups {}", names.join(", "));
    }
    let c = classify_gradings(5, false).unwrap();
    for g in &c.general {
        println!("{:?} by {}: dim A_1 = {}", g.partition, g.grading_group, g.dim_a1);
    }
    println!("{}", c.conclusion);
}
