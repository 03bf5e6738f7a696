//! Splitting K^n along the degree-one component of a grading, and the
//! grading file format.

use quantum_permutations::gradings::{grading_from_partition, orbit_decompose, parse_grading, render_grading};

fn main() {
    let g = grading_from_partition(&[3, 2, 1], &["Z3".parse().unwrap(), "Z2".parse().unwrap(), "Z1".parse().unwrap()]).unwrap();
    let text = render_grading(&g);
    print!("{text}");
    let back = parse_grading(&text).unwrap();
    let r = orbit_decompose(&back).unwrap();
    println!("partition {:?}, k = {}, dim A_1 = {}", r.partition, r.k, r.dim_a1);
    for b in &r.blocks {
        println!("block {:?}: ergodic {}, {}", b.coordinates, b.ergodic, b.verdict);
    }
}
