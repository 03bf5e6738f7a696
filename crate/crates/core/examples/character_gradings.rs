//! Character gradings f_c = sum_g chi_c(g) e_g and the law f_c f_d = f_{c+d}.

use quantum_permutations::gradings::{character_vectors, grading_from_regular_abelian, pointwise, verify_grading};
use quantum_permutations::groups::FiniteAbelianGroup;

fn main() {
    let g: FiniteAbelianGroup = "Z2xZ4".parse().unwrap();
    let els = g.elements();
    let f = character_vectors(&g);
    let (a, b) = (3, 6);
    let c = els.iter().position(|x| *x == g.add(&els[a], &els[b])).unwrap();
    println!(
        "f_{} * f_{} == f_{}: {}",
        g.format_element(&els[a]),
        g.format_element(&els[b]),
        g.format_element(&els[c]),
        pointwise(&f[a], &f[b]) == f[c]
    );
    print!("{}", verify_grading(&grading_from_regular_abelian(&g)));
}
