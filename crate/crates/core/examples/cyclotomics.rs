//! Exact arithmetic in Q(ζ_m) and exact linear algebra.

use quantum_permutations::exactnum::linalg::{rank, Span};
use quantum_permutations::exactnum::{cyclotomic_polynomial, rat, Cyclotomic, Scalar};

fn main() {
    let z = Cyclotomic::zeta(6);
    println!("Phi_6 coefficients: {:?}", cyclotomic_polynomial(6).iter().map(ToString::to_string).collect::<Vec<_>>());
    let cube = z.mul(&z).mul(&z);
    println!("zeta_6^3 = {cube}");
    let half = Cyclotomic::from_rational(rat(1, 2));
    println!("(1/2 + zeta_6)^-1 = {}", half.add(&z).inv().unwrap());

    let w = Cyclotomic::zeta(3);
    let rows = vec![
        vec![Cyclotomic::from_int(1), w.clone(), w.mul(&w)],
        vec![Cyclotomic::from_int(1), w.mul(&w), w.clone()],
        vec![Cyclotomic::from_int(2), Cyclotomic::from_int(-1), Cyclotomic::from_int(-1)],
    ];
    println!("rank of character rows + their sum: {}", rank(&rows));
    let span = Span::new(3, &rows[..2]);
    println!("third row in span of first two: {}", span.contains(&rows[2]));
}
