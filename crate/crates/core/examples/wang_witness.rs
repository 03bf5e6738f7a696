//! The two-idempotent block matrix: [u11, u33] is nonzero and the image
//! grows linearly, for every n >= 4.

use quantum_permutations::qperm::{two_idempotents, wang_matrix, wang_witness};

fn main() {
    let t = two_idempotents();
    let w = wang_matrix(4, &t).unwrap();
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| w.entry(i, j).to_string()).collect();
        println!("[{}]", row.join(" | "));
    }
    let r = wang_witness(5, 10).unwrap();
    println!("{}: {}", r.claim, r.verdict);
    println!("filtration: {}", r.data["filtration"]);
}
