//! x.x^t = I and x^t.x = I from three relation families, and
//! x^t.x = diag(u_1, ..., u_n) over the semi-magic presentation.

use quantum_permutations::qperm::{column_sum_identity, three_family_identity, Family};

fn main() {
    let subsets = [
        [Family::RowOrth, Family::RowSum, Family::ColOrth],
        [Family::RowSum, Family::ColOrth, Family::ColSum],
        [Family::RowOrth, Family::ColOrth, Family::ColSum],
        [Family::RowOrth, Family::RowSum, Family::ColSum],
    ];
    for fams in subsets {
        let r = three_family_identity(3, &fams, 8).unwrap();
        println!("{}: {}", r.claim, r.verdict);
    }
    print!("{}", column_sum_identity(3, 8).unwrap());
}
