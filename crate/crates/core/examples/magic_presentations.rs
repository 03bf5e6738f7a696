//! The magic presentation of A_s(n, K): relation counts and quotient bases.

use quantum_permutations::qperm::{magic_presentation, semi_magic_presentation};

fn main() {
    for n in 1..=3 {
        let h = magic_presentation(n);
        let sys = h.complete(8).unwrap();
        let basis = sys.finite_basis(8).unwrap();
        println!("n = {n}: {} rules, {}, basis size {}", sys.rules().len(), sys.status(), basis.len());
    }
    let c = magic_presentation(4).relation_counts();
    println!("n = 4 counts: {:?}", c);
    let semi = semi_magic_presentation(3).complete(8).unwrap();
    println!("semi-magic n = 3: {}, filtration {:?}", semi.status(), semi.filtration_dimension(3).unwrap());
}
