//! Coproduct, counit and antipode of A_s(n, K) and the axiom certificate.

use quantum_permutations::ncalg::NCPoly;
use quantum_permutations::qperm::{iterated_coproduct, magic_presentation, verify_hopf_axioms};

fn main() {
    let h = magic_presentation(2);
    let u12 = NCPoly::var(h.alphabet(), "u12").unwrap();
    println!("Delta(u12) = {}", h.delta(&u12));
    println!("eps(u12) = {}", h.counit(&u12));
    let p = NCPoly::parse(h.alphabet(), "u11.u12").unwrap();
    println!("S(u11.u12) = {}", h.antipode(&p).unwrap());
    println!("(Delta (x) id) Delta(u11) = {}", iterated_coproduct(2, 0, 0));

    let report = verify_hopf_axioms(&magic_presentation(3), 8).unwrap();
    print!("{report}");
}
