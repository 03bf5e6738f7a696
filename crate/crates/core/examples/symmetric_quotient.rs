//! The map u_ij -> p_ij onto functions on S_n.

use quantum_permutations::ncalg::NCPoly;
use quantum_permutations::qperm::{magic_presentation, pi_n, pi_n_isomorphism_check};

fn main() {
    let h = magic_presentation(3);
    let p = NCPoly::parse(h.alphabet(), "u12.u23.u31").unwrap();
    let f = pi_n(&p, 3).unwrap();
    for (sigma, c) in f.support() {
        println!("pi_3(u12.u23.u31)({sigma}) = {c}");
    }
    for n in [3, 4] {
        print!("{}", pi_n_isomorphism_check(n, 8).unwrap());
    }
}
